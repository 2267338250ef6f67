// irs-beamsim -- environment-aware beam selection for IRS-aided downlink
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <span>
#include <vector>

#include "irsbeam/array.hpp"
#include "irsbeam/codebook.hpp"
#include "irsbeam/errors.hpp"
#include "irsbeam/types.hpp"

namespace irsbeam {

/// Array geometries the map was labeled under; beam indices are only
/// meaningful against matching codebooks.
struct CodebookFingerprint {
    Eigen::Index irs_rows = 0;
    Eigen::Index irs_cols = 0;
    Eigen::Index bs_rows = 0;
    Eigen::Index bs_cols = 0;
    friend bool operator==(const CodebookFingerprint&, const CodebookFingerprint&) = default;
};

inline CodebookFingerprint make_fingerprint(const UPAConfig& irs_cfg, const UPAConfig& bs_cfg) {
    return {irs_cfg.n_rows, irs_cfg.n_cols, bs_cfg.n_rows, bs_cfg.n_cols};
}

struct BIMEntry {
    Vec3 location = Vec3::Zero();
    BeamPair pair;
};

/// Beam index map: training locations with their offline-labeled best pair.
struct BIMDatabase {
    std::vector<BIMEntry> entries;
    CodebookFingerprint fingerprint;
};

struct Candidate {
    BIMEntry entry;
    double distance = 0.0;
};

/// K nearest entries, ascending distance.
using CandidateSet = std::vector<Candidate>;

/// Label every training location with `labeler` (typically trace -> channel
/// synthesis -> beam search). Output order equals input order regardless of
/// the number of worker threads; the labeler must be safe to call concurrently.
BIMDatabase build_bim(const std::function<BeamPair(const Vec3&)>& labeler,
                      std::span<const Vec3> train_locations, const CodebookFingerprint& fingerprint,
                      unsigned n_threads = 1);

/// K nearest entries by 3-D Euclidean distance; equal distances keep the
/// database insertion order.
CandidateSet knn(const BIMDatabase& db, const Vec3& q, std::size_t k);

/// Majority vote over the candidates' pairs. Tied counts go to the group with
/// the largest inverse-distance sum (a zero distance counts as infinite, so
/// that group wins its tie); any remaining exact tie resolves to the
/// lexicographically smallest pair.
BeamPair vote(const CandidateSet& candidates);

void save_bim(const BIMDatabase& db, const std::filesystem::path& file);
BIMDatabase load_bim(const std::filesystem::path& file);

/// Reject a database whose fingerprint differs from the scenario codebooks.
void require_compatible(const BIMDatabase& db, const CodebookFingerprint& expected);

}  // namespace irsbeam

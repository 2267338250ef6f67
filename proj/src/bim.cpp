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

#include "irsbeam/bim.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "parallel_util.hpp"
#include "text_util.hpp"

namespace irsbeam {

BIMDatabase build_bim(const std::function<BeamPair(const Vec3&)>& labeler,
                      std::span<const Vec3> train_locations, const CodebookFingerprint& fingerprint,
                      unsigned n_threads) {
    if (train_locations.empty()) throw ConfigError("train_locations: must not be empty");
    BIMDatabase db;
    db.fingerprint = fingerprint;
    db.entries.resize(train_locations.size());
    detail::parallel_for(train_locations.size(), n_threads, [&](std::size_t i) {
        db.entries[i] = {train_locations[i], labeler(train_locations[i])};
    });
    return db;
}

CandidateSet knn(const BIMDatabase& db, const Vec3& q, std::size_t k) {
    if (k == 0) throw ConfigError("k_neighbors: must be >= 1");
    if (k > db.entries.size())
        throw KTooLarge("k = " + std::to_string(k) + " exceeds database size " +
                        std::to_string(db.entries.size()));
    std::vector<double> dist(db.entries.size());
    for (std::size_t i = 0; i < db.entries.size(); ++i)
        dist[i] = (db.entries[i].location - q).norm();
    std::vector<std::size_t> order(db.entries.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    // stable: equal distances keep database insertion order
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });
    CandidateSet out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out.push_back({db.entries[order[i]], dist[order[i]]});
    return out;
}

BeamPair vote(const CandidateSet& candidates) {
    if (candidates.empty()) throw EmptyCandidateSet("vote over an empty candidate set");
    struct Group {
        std::size_t count = 0;
        double inv_distance_sum = 0.0;
    };
    std::map<BeamPair, Group> groups;  // keyed ascending, i.e. lexicographic
    for (const Candidate& c : candidates) {
        Group& g = groups[c.entry.pair];
        ++g.count;
        g.inv_distance_sum += 1.0 / c.distance;  // distance 0 contributes +inf
    }
    auto best = groups.begin();
    for (auto it = std::next(groups.begin()); it != groups.end(); ++it) {
        if (it->second.count > best->second.count ||
            (it->second.count == best->second.count &&
             it->second.inv_distance_sum > best->second.inv_distance_sum))
            best = it;
    }
    return best->first;
}

void save_bim(const BIMDatabase& db, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw IoError("cannot open " + file.string() + " for writing");
    out << "bim-v1," << db.fingerprint.irs_rows << 'x' << db.fingerprint.irs_cols << ','
        << db.fingerprint.bs_rows << 'x' << db.fingerprint.bs_cols << '\n';
    for (const BIMEntry& e : db.entries) {
        out << detail::format_double(e.location.x()) << ','
            << detail::format_double(e.location.y()) << ','
            << detail::format_double(e.location.z()) << ',' << e.pair.irs_index << ','
            << e.pair.bs_index << '\n';
    }
    out.flush();
    if (!out) throw IoError("write to " + file.string() + " failed");
}

namespace {

std::pair<Eigen::Index, Eigen::Index> parse_grid(std::string_view field, std::size_t line_no,
                                                 const char* what) {
    const auto parts = detail::split_fields(field, 'x');
    if (parts.size() != 2)
        throw ParseError(line_no, std::string("malformed ") + what + " grid '" +
                                      std::string(field) + "'");
    const auto r = detail::parse_int(parts[0], line_no, what);
    const auto c = detail::parse_int(parts[1], line_no, what);
    if (r < 1 || c < 1)
        throw ParseError(line_no, std::string(what) + " grid dimensions must be >= 1");
    return {static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)};
}

}  // namespace

BIMDatabase load_bim(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot open " + file.string() + " for reading");
    std::string line;
    if (!std::getline(in, line)) throw ParseError(1, "missing header line");
    const auto header = detail::split_fields(detail::strip_cr(line), ',');
    if (header.empty() || header[0] != "bim-v1")
        throw FormatVersionMismatch("expected 'bim-v1' header, found '" +
                                    (header.empty() ? std::string() : std::string(header[0])) +
                                    "'");
    if (header.size() != 3) throw ParseError(1, "header must be 'bim-v1,<irs grid>,<bs grid>'");
    BIMDatabase db;
    std::tie(db.fingerprint.irs_rows, db.fingerprint.irs_cols) =
        parse_grid(header[1], 1, "irs");
    std::tie(db.fingerprint.bs_rows, db.fingerprint.bs_cols) = parse_grid(header[2], 1, "bs");
    const Eigen::Index irs_size = db.fingerprint.irs_rows * db.fingerprint.irs_cols;
    const Eigen::Index bs_size = db.fingerprint.bs_rows * db.fingerprint.bs_cols;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view sv = detail::strip_cr(line);
        if (sv.empty()) continue;
        const auto fields = detail::split_fields(sv, ',');
        if (fields.size() != 5)
            throw ParseError(line_no, "expected 5 fields, got " + std::to_string(fields.size()));
        BIMEntry e;
        e.location.x() = detail::parse_double(fields[0], line_no, "x");
        e.location.y() = detail::parse_double(fields[1], line_no, "y");
        e.location.z() = detail::parse_double(fields[2], line_no, "z");
        e.pair.irs_index = detail::parse_int(fields[3], line_no, "irs_index");
        e.pair.bs_index = detail::parse_int(fields[4], line_no, "bs_index");
        if (e.pair.irs_index < 0 || e.pair.irs_index >= irs_size)
            throw ParseError(line_no, "irs_index outside [0, " + std::to_string(irs_size) + ")");
        if (e.pair.bs_index < 0 || e.pair.bs_index >= bs_size)
            throw ParseError(line_no, "bs_index outside [0, " + std::to_string(bs_size) + ")");
        db.entries.push_back(e);
    }
    if (db.entries.empty()) throw ParseError(line_no, "database holds no entries");
    return db;
}

void require_compatible(const BIMDatabase& db, const CodebookFingerprint& expected) {
    if (!(db.fingerprint == expected)) {
        auto grid = [](Eigen::Index r, Eigen::Index c) {
            return std::to_string(r) + "x" + std::to_string(c);
        };
        throw FingerprintMismatch(
            "database built for IRS " + grid(db.fingerprint.irs_rows, db.fingerprint.irs_cols) +
            ", BS " + grid(db.fingerprint.bs_rows, db.fingerprint.bs_cols) +
            " but scenario uses IRS " + grid(expected.irs_rows, expected.irs_cols) + ", BS " +
            grid(expected.bs_rows, expected.bs_cols));
    }
}

}  // namespace irsbeam

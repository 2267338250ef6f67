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

#include <cmath>
#include <compare>
#include <complex>
#include <numbers>
#include <string>

#include "irsbeam/array.hpp"
#include "irsbeam/errors.hpp"
#include "irsbeam/types.hpp"

namespace irsbeam {

enum class CodebookKind { bs_active, irs_passive };

/// Selected (IRS beam, BS beam) indices using each codebook's flat-index
/// convention. Ordering is lexicographic (irs_index first), which is the
/// tie-break order used throughout.
struct BeamPair {
    Eigen::Index irs_index = 0;
    Eigen::Index bs_index = 0;
    friend auto operator<=>(const BeamPair&, const BeamPair&) = default;
};

/// Critically sampled 2-D DFT codebook over a UPA. Beam (k1, k2) maps to flat
/// index k1*n_cols + k2; element (n1, n2) of that beam carries phase
/// 2*pi*(n1*k1/n_rows + n2*k2/n_cols). The bs_active kind is scaled to unit
/// Euclidean norm (Kronecker DFT precoder); irs_passive keeps unit-modulus
/// entries (phase-only reflection).
template <typename Scalar = double>
struct Codebook {
    UPAConfig array;
    CodebookKind kind = CodebookKind::irs_passive;

    Eigen::Index size() const { return array.size(); }

    ComplexVector<Scalar> beam(Eigen::Index idx) const {
        if (idx < 0 || idx >= size())
            throw IndexOutOfRange("beam index " + std::to_string(idx) + " outside [0, " +
                                  std::to_string(size()) + ")");
        const Eigen::Index k1 = idx / array.n_cols;
        const Eigen::Index k2 = idx % array.n_cols;
        const Scalar scale = kind == CodebookKind::bs_active
                                 ? Scalar(1) / std::sqrt(static_cast<Scalar>(size()))
                                 : Scalar(1);
        const Scalar two_pi = Scalar(2) * std::numbers::pi_v<Scalar>;
        ComplexVector<Scalar> b(size());
        for (Eigen::Index n1 = 0; n1 < array.n_rows; ++n1) {
            for (Eigen::Index n2 = 0; n2 < array.n_cols; ++n2) {
                const Scalar phase =
                    two_pi * (static_cast<Scalar>(n1 * k1) / static_cast<Scalar>(array.n_rows) +
                              static_cast<Scalar>(n2 * k2) / static_cast<Scalar>(array.n_cols));
                b[n1 * array.n_cols + n2] = std::polar(scale, phase);
            }
        }
        return b;
    }
};

template <typename Scalar = double>
Codebook<Scalar> make_irs_codebook(const UPAConfig& cfg) {
    return Codebook<Scalar>{cfg, CodebookKind::irs_passive};
}

template <typename Scalar = double>
Codebook<Scalar> make_bs_codebook(const UPAConfig& cfg) {
    return Codebook<Scalar>{cfg, CodebookKind::bs_active};
}

}  // namespace irsbeam

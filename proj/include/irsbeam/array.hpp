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
#include <complex>
#include <numbers>

#include "irsbeam/geometry.hpp"
#include "irsbeam/types.hpp"

namespace irsbeam {

/// Uniform planar array geometry. Spacing is in carrier wavelengths.
struct UPAConfig {
    Eigen::Index n_rows = 1;
    Eigen::Index n_cols = 1;
    double spacing = 0.5;

    Eigen::Index size() const { return n_rows * n_cols; }
    friend bool operator==(const UPAConfig&, const UPAConfig&) = default;
};

/// Steering vector for a plane wave at (zenith, azimuth) in the array frame.
/// Element (n1, n2) sits at n1*spacing along e1 and n2*spacing along e2 and is
/// stored at flat index n1*n_cols + n2 (row-major). All entries have unit
/// modulus; zenith = 0 gives the all-ones vector.
template <typename Scalar = double>
ComplexVector<Scalar> upa_response(const UPAConfig& cfg, Scalar zenith, Scalar azimuth) {
    const Scalar u1 = std::sin(zenith) * std::cos(azimuth);
    const Scalar u2 = std::sin(zenith) * std::sin(azimuth);
    const Scalar step = Scalar(2) * std::numbers::pi_v<Scalar> * static_cast<Scalar>(cfg.spacing);
    ComplexVector<Scalar> a(cfg.size());
    for (Eigen::Index n1 = 0; n1 < cfg.n_rows; ++n1) {
        for (Eigen::Index n2 = 0; n2 < cfg.n_cols; ++n2) {
            const Scalar phase = step * (Scalar(n1) * u1 + Scalar(n2) * u2);
            a[n1 * cfg.n_cols + n2] = std::polar(Scalar(1), phase);
        }
    }
    return a;
}

template <typename Scalar = double>
ComplexVector<Scalar> upa_response(const UPAConfig& cfg, const Spherical& angles) {
    return upa_response<Scalar>(cfg, static_cast<Scalar>(angles.zenith),
                                static_cast<Scalar>(angles.azimuth));
}

}  // namespace irsbeam

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

#include <complex>

#include <Eigen/Dense>

namespace irsbeam {

using Vec3 = Eigen::Vector3d;

template <typename Scalar>
using ComplexVector = Eigen::Vector<std::complex<Scalar>, Eigen::Dynamic>;

template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

using CVecd = ComplexVector<double>;
using CMatd = ComplexMatrix<double>;

/// BS-IRS matrix (N x M), IRS-UE vector (N) and the cascaded matrix
/// Phi = diag(conj(h)) * G (N x M).
using ChannelG = CMatd;
using ChannelH = CVecd;
using CascadedChannel = CMatd;

inline constexpr double speed_of_light = 299792458.0;  // m/s

}  // namespace irsbeam

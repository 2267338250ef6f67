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
#include <cstdint>
#include <numbers>
#include <random>
#include <utility>

namespace irsbeam {

using RngEngine = std::mt19937_64;

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
}  // namespace detail

/// Derive an independent stream seed from a master seed and up to three
/// decorrelation indices (trial, power level, scheme, ...). The mapping is a
/// fixed splitmix64 chain, so streams are reproducible regardless of the order
/// in which work items execute.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
    std::uint64_t state = master;
    (void)detail::splitmix64(state);
    state ^= detail::splitmix64(a);
    (void)detail::splitmix64(state);
    state ^= detail::splitmix64(b);
    (void)detail::splitmix64(state);
    state ^= detail::splitmix64(c);
    return detail::splitmix64(state);
}

/// Uniform draw in [0, 1) with exactly 53 random bits. Hand-rolled because
/// std::uniform_real_distribution is implementation-defined and would break
/// bitwise reproducibility across standard libraries.
inline double uniform01(RngEngine& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform draw in (lo, hi) semantics of [lo, hi) from uniform01.
inline double uniform_in(RngEngine& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

/// One Box-Muller pair of independent standard normals. No caching: every call
/// consumes exactly two engine outputs, which keeps stream positions predictable.
inline std::pair<double, double> standard_normal_pair(RngEngine& rng) {
    // Shift to (0, 1] so the log argument is never zero.
    const double u1 = static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
    const double u2 = uniform01(rng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(t), r * std::sin(t)};
}

/// Circularly-symmetric complex Gaussian with total variance sigma2.
inline std::complex<double> complex_normal(RngEngine& rng, double sigma2) {
    const auto [n1, n2] = standard_normal_pair(rng);
    const double s = std::sqrt(sigma2 / 2.0);
    return {s * n1, s * n2};
}

}  // namespace irsbeam

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
#include <span>
#include <string>

#include <unsupported/Eigen/FFT>

#include "irsbeam/channel.hpp"
#include "irsbeam/codebook.hpp"
#include "irsbeam/errors.hpp"
#include "irsbeam/random.hpp"
#include "irsbeam/types.hpp"

namespace irsbeam {

/// Measurement noise description: complex AWGN power (linear mW) and the
/// master seed that experiment code derives per-stream seeds from.
struct NoiseModel {
    double noise_power_mw = 0.0;
    std::uint64_t rng_seed = 0;
};

template <typename Scalar = double>
struct SearchResult {
    BeamPair pair;
    Scalar gain = Scalar(0);  // noise-free |v^T Phi f|^2
};

namespace detail {

template <typename Scalar>
void fft_rows_forward(Eigen::FFT<Scalar>& fft,
                      Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic,
                                    Eigen::RowMajor>& m) {
    const Eigen::Index n = m.cols();
    if (n == 1) return;  // length-1 transform is the identity
    Eigen::Vector<std::complex<Scalar>, Eigen::Dynamic> out(n);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        fft.fwd(out.data(), m.data() + r * n, static_cast<int>(n));
        for (Eigen::Index c = 0; c < n; ++c) m(r, c) = out[c];
    }
}

}  // namespace detail

/// Amplitudes v_k^T a for every beam of the critically sampled IRS codebook,
/// indexed like the codebook (flat k1*n_cols + k2). Computed as an unnormalized
/// 2-D inverse DFT of the element grid via conjugated forward FFTs.
template <typename Scalar = double>
ComplexVector<Scalar> irs_beam_amplitudes(const ComplexVector<Scalar>& a, const UPAConfig& cfg) {
    if (a.size() != cfg.size())
        throw DimensionMismatch("irs_beam_amplitudes: vector size " + std::to_string(a.size()) +
                                " does not match array size " + std::to_string(cfg.size()));
    using Cx = std::complex<Scalar>;
    using RowMajorCx = Eigen::Matrix<Cx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const Eigen::Index rows = cfg.n_rows;
    const Eigen::Index cols = cfg.n_cols;
    Eigen::FFT<Scalar> fft;
    RowMajorCx grid =
        Eigen::Map<const RowMajorCx>(a.data(), rows, cols).conjugate();
    detail::fft_rows_forward(fft, grid);           // DFT along n2 for every n1
    RowMajorCx t = grid.transpose();
    detail::fft_rows_forward(fft, t);              // DFT along n1 for every k2
    ComplexVector<Scalar> out(rows * cols);
    for (Eigen::Index k1 = 0; k1 < rows; ++k1)
        for (Eigen::Index k2 = 0; k2 < cols; ++k2)
            out[k1 * cols + k2] = std::conj(t(k2, k1));
    return out;
}

namespace detail {

template <typename Scalar>
void check_search_dims(const ComplexMatrix<Scalar>& phi, const Codebook<Scalar>& V,
                       const Codebook<Scalar>& F) {
    if (phi.rows() != V.size() || phi.cols() != F.size())
        throw DimensionMismatch("search: channel is " + std::to_string(phi.rows()) + "x" +
                                std::to_string(phi.cols()) + " but codebooks have " +
                                std::to_string(V.size()) + "/" + std::to_string(F.size()) +
                                " beams");
}

template <typename Scalar>
void consider(SearchResult<Scalar>& best, Scalar gain, Eigen::Index irs, Eigen::Index bs) {
    const BeamPair p{irs, bs};
    if (gain > best.gain || (gain == best.gain && p < best.pair)) best = {p, gain};
}

}  // namespace detail

/// Joint argmax of |v^T Phi f|^2 over all codebook pairs by direct evaluation.
/// Ties resolve to the lexicographically smallest (irs_index, bs_index).
template <typename Scalar = double>
SearchResult<Scalar> exhaustive_search(const ComplexMatrix<Scalar>& phi, const Codebook<Scalar>& V,
                                       const Codebook<Scalar>& F) {
    detail::check_search_dims(phi, V, F);
    ComplexMatrix<Scalar> projected(phi.rows(), F.size());
    for (Eigen::Index m = 0; m < F.size(); ++m) projected.col(m) = phi * F.beam(m);
    SearchResult<Scalar> best{{0, 0}, Scalar(-1)};
    for (Eigen::Index k = 0; k < V.size(); ++k) {
        const Eigen::RowVector<std::complex<Scalar>, Eigen::Dynamic> row =
            V.beam(k).transpose() * projected;
        for (Eigen::Index m = 0; m < F.size(); ++m)
            detail::consider(best, std::norm(row[m]), k, m);
    }
    return best;
}

/// Same argmax as exhaustive_search, but per BS beam all IRS beams are scored
/// at once with a 2-D FFT over the projected vector Phi*f.
template <typename Scalar = double>
SearchResult<Scalar> fft_search(const ComplexMatrix<Scalar>& phi, const Codebook<Scalar>& V,
                                const Codebook<Scalar>& F) {
    if (V.kind != CodebookKind::irs_passive || F.kind != CodebookKind::bs_active)
        throw UnsupportedCodebook("fft_search expects an irs_passive V and a bs_active F");
    detail::check_search_dims(phi, V, F);
    SearchResult<Scalar> best{{0, 0}, Scalar(-1)};
    ComplexVector<Scalar> a(phi.rows());
    for (Eigen::Index m = 0; m < F.size(); ++m) {
        a.noalias() = phi * F.beam(m);
        const ComplexVector<Scalar> s = irs_beam_amplitudes(a, V.array);
        for (Eigen::Index k = 0; k < V.size(); ++k)
            detail::consider(best, std::norm(s[k]), k, m);
    }
    return best;
}

/// One noisy received-power measurement |sqrt(P)*g + z|^2 for a beam pair,
/// with g = v^T Phi f and z ~ CN(0, sigma2). Always consumes one complex noise
/// sample from the stream; with sigma2 = 0 the result is exactly
/// P * beam_gain(phi, v, f).
template <typename DerivedP, typename DerivedV, typename DerivedF>
double noisy_measure(const Eigen::MatrixBase<DerivedP>& phi, const Eigen::MatrixBase<DerivedV>& v,
                     const Eigen::MatrixBase<DerivedF>& f, double power_mw, double sigma2_mw,
                     RngEngine& rng) {
    const std::complex<double> g = beam_amplitude(phi, v, f);
    const std::complex<double> z = complex_normal(rng, sigma2_mw);
    if (sigma2_mw == 0.0) return power_mw * std::norm(g);
    return std::norm(std::sqrt(power_mw) * g + z);
}

/// Measure each candidate pair once (in list order) and return the argmax of
/// the noisy received power; ties resolve to the earliest candidate.
template <typename Scalar = double>
BeamPair sweep_candidates(const ComplexMatrix<Scalar>& phi, const Codebook<Scalar>& V,
                          const Codebook<Scalar>& F, std::span<const BeamPair> candidates,
                          double power_mw, double sigma2_mw, RngEngine& rng) {
    if (candidates.empty()) throw EmptyCandidateSet("sweep over an empty candidate list");
    std::size_t best = 0;
    double best_power = -1.0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const BeamPair& c = candidates[i];
        const double y =
            noisy_measure(phi, V.beam(c.irs_index), F.beam(c.bs_index), power_mw, sigma2_mw, rng);
        if (y > best_power) {
            best = i;
            best_power = y;
        }
    }
    return candidates[best];
}

}  // namespace irsbeam

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
#include <span>
#include <string>

#include "irsbeam/array.hpp"
#include "irsbeam/errors.hpp"
#include "irsbeam/paths.hpp"
#include "irsbeam/types.hpp"

namespace irsbeam {

/// Sum of rank-one path contributions gain_l * a_rx * a_tx^H.
/// Empty path lists give the zero matrix.
template <typename Scalar = double>
ComplexMatrix<Scalar> synth_channel(std::span<const PathComponent> paths, const UPAConfig& tx_cfg,
                                    const UPAConfig& rx_cfg) {
    ComplexMatrix<Scalar> m = ComplexMatrix<Scalar>::Zero(rx_cfg.size(), tx_cfg.size());
    for (const PathComponent& p : paths) {
        const ComplexVector<Scalar> a_tx =
            upa_response<Scalar>(tx_cfg, static_cast<Scalar>(p.depart_zenith),
                                 static_cast<Scalar>(p.depart_azimuth));
        const ComplexVector<Scalar> a_rx =
            upa_response<Scalar>(rx_cfg, static_cast<Scalar>(p.arrive_zenith),
                                 static_cast<Scalar>(p.arrive_azimuth));
        m.noalias() += static_cast<std::complex<Scalar>>(p.gain) * a_rx * a_tx.adjoint();
    }
    return m;
}

/// Single-antenna transmitter variant: sum of gain_l * a_rx(arrive angles).
template <typename Scalar = double>
ComplexVector<Scalar> synth_channel(std::span<const PathComponent> paths,
                                    const UPAConfig& rx_cfg) {
    ComplexVector<Scalar> v = ComplexVector<Scalar>::Zero(rx_cfg.size());
    for (const PathComponent& p : paths) {
        v.noalias() += static_cast<std::complex<Scalar>>(p.gain) *
                       upa_response<Scalar>(rx_cfg, static_cast<Scalar>(p.arrive_zenith),
                                            static_cast<Scalar>(p.arrive_azimuth));
    }
    return v;
}

/// Cascaded matrix with rows conj(h_n) * G_n, so that v^T * Phi * f equals
/// h^H * diag(v) * G * f for every beam pair.
template <typename Scalar = double>
ComplexMatrix<Scalar> cascade(const ComplexVector<Scalar>& h, const ComplexMatrix<Scalar>& G) {
    if (h.size() != G.rows())
        throw DimensionMismatch("cascade: h has " + std::to_string(h.size()) +
                                " entries but G has " + std::to_string(G.rows()) + " rows");
    return (G.array().colwise() * h.array().conjugate()).matrix();
}

/// Complex beam amplitude v^T * Phi * f, evaluated as v^T * (Phi * f). The
/// evaluation order is fixed so that equal inputs give bit-identical results
/// at every call site.
template <typename DerivedP, typename DerivedV, typename DerivedF>
typename DerivedP::Scalar beam_amplitude(const Eigen::MatrixBase<DerivedP>& phi,
                                         const Eigen::MatrixBase<DerivedV>& v,
                                         const Eigen::MatrixBase<DerivedF>& f) {
    if (v.size() != phi.rows() || f.size() != phi.cols())
        throw DimensionMismatch("beam_amplitude: v/f sizes " + std::to_string(v.size()) + "/" +
                                std::to_string(f.size()) + " do not match channel " +
                                std::to_string(phi.rows()) + "x" + std::to_string(phi.cols()));
    using Cx = typename DerivedP::Scalar;
    const Eigen::Vector<Cx, Eigen::Dynamic> a = phi.derived() * f.derived();
    return (v.derived().transpose() * a).value();
}

/// |v^T * Phi * f|^2.
template <typename DerivedP, typename DerivedV, typename DerivedF>
auto beam_gain(const Eigen::MatrixBase<DerivedP>& phi, const Eigen::MatrixBase<DerivedV>& v,
               const Eigen::MatrixBase<DerivedF>& f) {
    return std::norm(beam_amplitude(phi, v, f));
}

}  // namespace irsbeam

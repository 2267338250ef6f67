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

#include "irsbeam/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "irsbeam/channel.hpp"

namespace irsbeam {

double effective_rate(double gain, const LinkBudget& budget, long symbols_per_block,
                      long training_symbols) {
    if (training_symbols > symbols_per_block)
        throw OverheadExceedsBlock(std::to_string(training_symbols) +
                                   " training symbols exceed the block length " +
                                   std::to_string(symbols_per_block));
    const double prefactor = static_cast<double>(symbols_per_block - training_symbols) /
                             static_cast<double>(symbols_per_block);
    return prefactor * std::log2(1.0 + budget.transmit_snr() * gain);
}

double pair_gain(const CascadedChannel& phi, const Codebook<double>& V, const Codebook<double>& F,
                 BeamPair pair) {
    return beam_gain(phi, V.beam(pair.irs_index), F.beam(pair.bs_index));
}

namespace {

SchemeOutcome finish(BeamPair pair, long training_symbols, const CascadedChannel& phi,
                     const Codebook<double>& V, const Codebook<double>& F,
                     const LinkBudget& budget, long symbols_per_block) {
    SchemeOutcome out;
    out.pair = pair;
    out.training_symbols = training_symbols;
    out.gain = pair_gain(phi, V, F, pair);
    out.rate = effective_rate(out.gain, budget, symbols_per_block, training_symbols);
    return out;
}

}  // namespace

SchemeOutcome select_perfect_csi(const CascadedChannel& phi, const Codebook<double>& V,
                                 const Codebook<double>& F, const LinkBudget& budget,
                                 long symbols_per_block) {
    const SearchResult<double> r = fft_search(phi, V, F);
    return finish(r.pair, 0, phi, V, F, budget, symbols_per_block);
}

SchemeOutcome select_bim_training_free(const BIMDatabase& db, const Vec3& q, std::size_t k,
                                       const CascadedChannel& phi, const Codebook<double>& V,
                                       const Codebook<double>& F, const LinkBudget& budget,
                                       long symbols_per_block) {
    const BeamPair pair = vote(knn(db, q, k));
    return finish(pair, 0, phi, V, F, budget, symbols_per_block);
}

SchemeOutcome select_bim_light_training(const BIMDatabase& db, const Vec3& q, std::size_t k,
                                        const CascadedChannel& phi, const Codebook<double>& V,
                                        const Codebook<double>& F, const LinkBudget& budget,
                                        long symbols_per_block, RngEngine& rng) {
    const CandidateSet candidates = knn(db, q, k);
    std::vector<BeamPair> distinct;
    distinct.reserve(candidates.size());
    for (const Candidate& c : candidates) {
        if (std::find(distinct.begin(), distinct.end(), c.entry.pair) == distinct.end())
            distinct.push_back(c.entry.pair);
    }
    const BeamPair pair = sweep_candidates(phi, V, F, distinct, budget.transmit_power_mw,
                                           budget.noise_power_mw, rng);
    return finish(pair, static_cast<long>(distinct.size()), phi, V, F, budget, symbols_per_block);
}

BeamPair location_pair(const SiteLayout& layout, const UPAConfig& bs_cfg, const UPAConfig& irs_cfg,
                       const Vec3& q, const Codebook<double>& V, const Codebook<double>& F,
                       std::complex<double> alpha, std::complex<double> beta) {
    const Vec3& bs = layout.bs_position;
    const Vec3& irs = layout.irs_position;
    if ((bs - irs).squaredNorm() == 0.0 || (irs - q).squaredNorm() == 0.0 ||
        (bs - q).squaredNorm() == 0.0)
        throw DegenerateGeometry("BS, IRS and UE positions must be pairwise distinct");
    const ArrayFrame bs_frame = make_frame(layout.bs_orientation);
    const ArrayFrame irs_frame = make_frame(layout.irs_orientation);
    const CVecd a_t =
        upa_response(bs_cfg, direction_angles(bs_frame, (irs - bs).normalized()));
    const CVecd a_r =
        upa_response(irs_cfg, direction_angles(irs_frame, (bs - irs).normalized()));
    const CVecd a_dep =
        upa_response(irs_cfg, direction_angles(irs_frame, (q - irs).normalized()));

    // BS side: argmax |a_t^H f|^2 over F, carried out on the alpha-scaled model.
    Eigen::Index best_f = 0;
    double best_f_score = -1.0;
    for (Eigen::Index m = 0; m < F.size(); ++m) {
        const double score = std::norm(alpha * a_t.dot(F.beam(m)));
        if (score > best_f_score) {
            best_f = m;
            best_f_score = score;
        }
    }

    // IRS side: argmax |v^T diag(conj(h_loc)) a_r|^2 over V, scored for all
    // DFT beams at once.
    const CVecd b = (beta * a_dep).conjugate().cwiseProduct(alpha * a_r);
    const CVecd s = irs_beam_amplitudes(b, V.array);
    Eigen::Index best_v = 0;
    double best_v_score = -1.0;
    for (Eigen::Index kidx = 0; kidx < V.size(); ++kidx) {
        const double score = std::norm(s[kidx]);
        if (score > best_v_score) {
            best_v = kidx;
            best_v_score = score;
        }
    }
    return {best_v, best_f};
}

SchemeOutcome select_location_based(const SiteLayout& layout, const UPAConfig& bs_cfg,
                                    const UPAConfig& irs_cfg, const Vec3& q,
                                    const Codebook<double>& V, const Codebook<double>& F,
                                    const CascadedChannel& phi_true, const LinkBudget& budget,
                                    long symbols_per_block, std::complex<double> alpha,
                                    std::complex<double> beta) {
    const BeamPair pair = location_pair(layout, bs_cfg, irs_cfg, q, V, F, alpha, beta);
    return finish(pair, 0, phi_true, V, F, budget, symbols_per_block);
}

Eigen::Index two_time_scale_bs_beam(const ChannelG& G, const Codebook<double>& F) {
    Eigen::Index best = 0;
    double best_score = -1.0;
    for (Eigen::Index m = 0; m < F.size(); ++m) {
        const double score = (G * F.beam(m)).squaredNorm();
        if (score > best_score) {
            best = m;
            best_score = score;
        }
    }
    return best;
}

SchemeOutcome select_two_time_scale(const ChannelG& G, const CascadedChannel& phi,
                                    const Codebook<double>& V, const Codebook<double>& F,
                                    const LinkBudget& budget, long symbols_per_block,
                                    RngEngine& rng) {
    const Eigen::Index f_hat = two_time_scale_bs_beam(G, F);
    const CVecd a = phi * F.beam(f_hat);
    const CVecd s = irs_beam_amplitudes(a, V.array);
    const double sqrt_p = std::sqrt(budget.transmit_power_mw);
    Eigen::Index best_v = 0;
    double best_power = -1.0;
    // One noisy measurement per IRS beam, drawn in beam-index order.
    for (Eigen::Index kidx = 0; kidx < V.size(); ++kidx) {
        const std::complex<double> z = complex_normal(rng, budget.noise_power_mw);
        const double y = budget.noise_power_mw == 0.0
                             ? budget.transmit_power_mw * std::norm(s[kidx])
                             : std::norm(sqrt_p * s[kidx] + z);
        if (y > best_power) {
            best_v = kidx;
            best_power = y;
        }
    }
    return finish({best_v, f_hat}, static_cast<long>(V.size()), phi, V, F, budget,
                  symbols_per_block);
}

}  // namespace irsbeam

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
#include <cstddef>

#include "irsbeam/beamsearch.hpp"
#include "irsbeam/bim.hpp"
#include "irsbeam/codebook.hpp"
#include "irsbeam/geometry.hpp"
#include "irsbeam/random.hpp"
#include "irsbeam/types.hpp"

namespace irsbeam {

/// Transmit power and noise power in linear mW.
struct LinkBudget {
    double transmit_power_mw = 1.0;
    double noise_power_mw = 1.0;

    double transmit_snr() const { return transmit_power_mw / noise_power_mw; }
};

/// Result of one scheme on one coherence block. `gain` is the true-channel
/// |v^T Phi f|^2 of the selected pair; `rate` already carries the
/// (S - training_symbols)/S overhead prefactor.
struct SchemeOutcome {
    BeamPair pair;
    long training_symbols = 0;
    double gain = 0.0;
    double rate = 0.0;  // bps/Hz
};

/// ((S - training_symbols)/S) * log2(1 + snr * gain).
double effective_rate(double gain, const LinkBudget& budget, long symbols_per_block,
                      long training_symbols);

/// True-channel gain of a pair, the canonical rate input for every scheme.
double pair_gain(const CascadedChannel& phi, const Codebook<double>& V, const Codebook<double>& F,
                 BeamPair pair);

/// Upper bound: joint search on the true cascaded channel, zero overhead.
SchemeOutcome select_perfect_csi(const CascadedChannel& phi, const Codebook<double>& V,
                                 const Codebook<double>& F, const LinkBudget& budget,
                                 long symbols_per_block);

/// Map lookup at the (possibly erroneous) location: KNN + vote, zero overhead.
SchemeOutcome select_bim_training_free(const BIMDatabase& db, const Vec3& q, std::size_t k,
                                       const CascadedChannel& phi, const Codebook<double>& V,
                                       const Codebook<double>& F, const LinkBudget& budget,
                                       long symbols_per_block);

/// Map lookup plus a noisy sweep over the distinct retrieved pairs; spends one
/// training symbol per distinct candidate.
SchemeOutcome select_bim_light_training(const BIMDatabase& db, const Vec3& q, std::size_t k,
                                        const CascadedChannel& phi, const Codebook<double>& V,
                                        const Codebook<double>& F, const LinkBudget& budget,
                                        long symbols_per_block, RngEngine& rng);

/// Selection index of the purely geometric benchmark (LoS-model argmaxes),
/// exposed separately so callers can reuse it across power levels.
BeamPair location_pair(const SiteLayout& layout, const UPAConfig& bs_cfg, const UPAConfig& irs_cfg,
                       const Vec3& q, const Codebook<double>& V, const Codebook<double>& F,
                       std::complex<double> alpha = {1.0, 0.0},
                       std::complex<double> beta = {1.0, 0.0});

/// Benchmark: LoS-geometry channel model, independent per-side argmaxes, zero
/// overhead. The rate is still evaluated on the true channel.
SchemeOutcome select_location_based(const SiteLayout& layout, const UPAConfig& bs_cfg,
                                    const UPAConfig& irs_cfg, const Vec3& q,
                                    const Codebook<double>& V, const Codebook<double>& F,
                                    const CascadedChannel& phi_true, const LinkBudget& budget,
                                    long symbols_per_block,
                                    std::complex<double> alpha = {1.0, 0.0},
                                    std::complex<double> beta = {1.0, 0.0});

/// BS beam of the two-time-scale benchmark: argmax of ||G f||^2.
Eigen::Index two_time_scale_bs_beam(const ChannelG& G, const Codebook<double>& F);

/// Benchmark: BS beam fixed from the slowly varying BS-IRS channel, then a
/// noisy sweep over the full IRS codebook (|V| training symbols).
SchemeOutcome select_two_time_scale(const ChannelG& G, const CascadedChannel& phi,
                                    const Codebook<double>& V, const Codebook<double>& F,
                                    const LinkBudget& budget, long symbols_per_block,
                                    RngEngine& rng);

}  // namespace irsbeam

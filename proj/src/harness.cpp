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

#include "irsbeam/harness.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "irsbeam/beamsearch.hpp"
#include "irsbeam/channel.hpp"
#include "irsbeam/random.hpp"
#include "irsbeam/tracer.hpp"
#include "parallel_util.hpp"

namespace irsbeam {

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::perfect_csi: return "perfect_csi";
        case Scheme::bim_training_free: return "bim_training_free";
        case Scheme::bim_light_training: return "bim_light_training";
        case Scheme::location_based: return "location_based";
        case Scheme::two_time_scale: return "two_time_scale";
    }
    return "unknown";
}

std::optional<Scheme> scheme_from_name(const std::string& name) {
    for (Scheme s : all_schemes)
        if (name == scheme_name(s)) return s;
    return std::nullopt;
}

SiteLayout default_site_layout() {
    SiteLayout site;
    site.carrier_wavelength = speed_of_light / 28.0e9;
    site.irs_position = {0.0, 0.0, 2.5};
    site.irs_orientation = Vec3::UnitX();
    site.bs_position = {7.0, -11.0, 11.0};
    site.bs_orientation = (site.irs_position - site.bs_position).normalized();
    site.ue_area.rect = {Eigen::Vector2d(2.8, -5.0), Eigen::Vector2d(12.8, 5.0)};
    site.ue_area.height = 1.5;
    // One wall between the IRS and most of the UE rectangle.
    site.blockers = {Blocker(Vec3(1.5, -6.0, 0.0), Vec3(2.1, 2.0, 4.0))};
    // Elevated scatterers that clear the wall and restore NLoS coverage of the
    // shadowed region, plus two off-path scatterers enriching the BS-IRS link.
    site.scatterers = {
        {{2.0, -1.0, 5.2}, 0.90}, {{2.3, -3.5, 5.6}, 0.85}, {{1.8, 1.0, 5.0}, 0.80},
        {{2.6, 3.2, 5.4}, 0.75},  {{2.1, -2.2, 6.0}, 0.70}, {{2.4, 0.2, 5.8}, 0.80},
        {{2.2, 2.8, 5.1}, 0.60},  {{3.5, -4.2, 6.5}, 0.65}, {{5.0, -8.0, 8.0}, 0.70},
        {{4.0, -10.0, 7.0}, 0.80},
    };
    return site;
}

ScenarioConfig::ScenarioConfig() : layout(default_site_layout()) {}

ScenarioConfig preset_config(const std::string& name) {
    if (name == "paper") return ScenarioConfig{};
    if (name == "desk") {
        ScenarioConfig c;
        c.irs_array = {8, 8, 0.5};
        c.bs_array = {4, 4, 0.5};
        c.n_train = 200;
        return c;
    }
    throw ConfigError("preset: unknown preset '" + name + "' (expected 'paper' or 'desk')");
}

namespace {

void validate_upa(const UPAConfig& cfg, const std::string& path) {
    if (cfg.n_rows < 1 || cfg.n_cols < 1)
        throw ConfigError(path + ": element counts must be >= 1");
    if (!(cfg.spacing > 0.0)) throw ConfigError(path + ".spacing: must be > 0");
}

}  // namespace

void validate_config(const ScenarioConfig& config) {
    const SiteLayout& site = config.layout;
    if (!(site.carrier_wavelength > 0.0))
        throw ConfigError("layout.carrier_wavelength: must be > 0");
    if (site.bs_orientation.norm() == 0.0)
        throw ConfigError("layout.bs_orientation: must be a nonzero vector");
    if (site.irs_orientation.norm() == 0.0)
        throw ConfigError("layout.irs_orientation: must be a nonzero vector");
    if ((site.bs_position - site.irs_position).squaredNorm() == 0.0)
        throw ConfigError("layout.bs_position: coincides with the IRS position");
    for (std::size_t i = 0; i < site.blockers.size(); ++i) {
        if ((site.blockers[i].min().array() > site.blockers[i].max().array()).any())
            throw ConfigError("layout.blockers[" + std::to_string(i) + "]: min must be <= max");
    }
    for (std::size_t i = 0; i < site.scatterers.size(); ++i) {
        const Scatterer& s = site.scatterers[i];
        const std::string path = "layout.scatterers[" + std::to_string(i) + "]";
        if (!(s.reflectivity > 0.0 && s.reflectivity <= 1.0))
            throw ConfigError(path + ".reflectivity: must be in (0, 1]");
        if ((s.position - site.bs_position).squaredNorm() == 0.0 ||
            (s.position - site.irs_position).squaredNorm() == 0.0)
            throw ConfigError(path + ".position: coincides with a terminal position");
    }
    if ((site.ue_area.rect.min().array() > site.ue_area.rect.max().array()).any())
        throw ConfigError("layout.ue_area: min corner must be <= max corner");
    if (segment_blocked(site.bs_position, site.irs_position, site.blockers))
        throw ConfigError("layout: the BS-IRS segment is blocked");
    validate_upa(config.irs_array, "irs_array");
    validate_upa(config.bs_array, "bs_array");
    if (!(config.bandwidth_hz > 0.0)) throw ConfigError("bandwidth_hz: must be > 0");
    if (!std::isfinite(config.noise_psd_dbm_per_hz))
        throw ConfigError("noise_psd_dbm_per_hz: must be finite");
    if (config.power_sweep_dbm.empty())
        throw ConfigError("power_sweep_dbm: must contain at least one level");
    for (double p : config.power_sweep_dbm)
        if (!std::isfinite(p)) throw ConfigError("power_sweep_dbm: entries must be finite");
    if (config.symbols_per_block < 1) throw ConfigError("symbols_per_block: must be >= 1");
    if (config.symbols_per_block < config.irs_array.size())
        throw ConfigError(
            "symbols_per_block: must be >= the IRS codebook size so the "
            "two-time-scale sweep fits in one block");
    if (config.n_train < 1) throw ConfigError("n_train: must be >= 1");
    if (config.n_test < 1) throw ConfigError("n_test: must be >= 1");
    if (config.k_neighbors < 1) throw ConfigError("k_neighbors: must be >= 1");
    if (config.k_neighbors > config.n_train)
        throw ConfigError("k_neighbors: must be <= n_train");
    if (!(config.location_error_mean_m >= 0.0))
        throw ConfigError("location_error_mean_m: must be >= 0");
}

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

double noise_power(double psd_dbm_per_hz, double bandwidth_hz) {
    return std::pow(10.0, (psd_dbm_per_hz + 10.0 * std::log10(bandwidth_hz)) / 10.0);
}

Vec3 apply_location_error(const Vec3& q, double mean_error_m, RngEngine& rng) {
    if (mean_error_m == 0.0) return q;
    const double scale = mean_error_m * std::sqrt(2.0 / std::numbers::pi);
    // Inverse-CDF Rayleigh draw, then a uniform planar direction.
    const double r = scale * std::sqrt(-2.0 * std::log(1.0 - uniform01(rng)));
    const double theta = 2.0 * std::numbers::pi * uniform01(rng);
    return q + Vec3(r * std::cos(theta), r * std::sin(theta), 0.0);
}

TrialChannels make_trial_channels(const SiteLayout& layout, const UPAConfig& bs_cfg,
                                  const UPAConfig& irs_cfg, const Vec3& ue) {
    TrialChannels ch;
    ch.paths = trace_paths(layout, ue);
    ch.G = synth_channel(ch.paths.bs_irs_paths, bs_cfg, irs_cfg);
    // h is the IRS-side response of the IRS-UE link, i.e. the reversed paths
    // received at the IRS.
    ch.h = synth_channel(reversed(ch.paths.irs_ue_paths), irs_cfg);
    ch.phi = cascade(ch.h, ch.G);
    return ch;
}

ScenarioContext make_context(const ScenarioConfig& config) {
    validate_config(config);
    ScenarioContext ctx{config, make_irs_codebook(config.irs_array),
                        make_bs_codebook(config.bs_array),
                        make_fingerprint(config.irs_array, config.bs_array)};
    return ctx;
}

BeamPair label_location(const ScenarioContext& ctx, const Vec3& q) {
    const TrialChannels ch =
        make_trial_channels(ctx.config.layout, ctx.config.bs_array, ctx.config.irs_array, q);
    return fft_search(ch.phi, ctx.V, ctx.F).pair;
}

std::vector<Vec3> training_locations(const ScenarioContext& ctx) {
    return sample_ue_locations(ctx.config.layout.ue_area, ctx.config.n_train,
                               ctx.config.seeds.train);
}

std::vector<Vec3> test_locations(const ScenarioContext& ctx, std::span<const Vec3> train) {
    const UeArea& area = ctx.config.layout.ue_area;
    RngEngine rng(ctx.config.seeds.test);
    std::vector<Vec3> out;
    out.reserve(ctx.config.n_test);
    std::size_t attempts = 0;
    const std::size_t max_attempts = 1000 * ctx.config.n_test + 1000;
    while (out.size() < ctx.config.n_test) {
        if (++attempts > max_attempts)
            throw ConfigError("n_test: cannot sample test locations disjoint from training set");
        const double x = uniform_in(rng, area.rect.min().x(), area.rect.max().x());
        const double y = uniform_in(rng, area.rect.min().y(), area.rect.max().y());
        const Vec3 q(x, y, area.height);
        bool clashes = false;
        for (const Vec3& t : train) {
            if ((t - q).squaredNorm() == 0.0) {
                clashes = true;
                break;
            }
        }
        if (!clashes) out.push_back(q);
    }
    return out;
}

BIMDatabase build_scenario_bim(const ScenarioContext& ctx, std::span<const Vec3> train) {
    return build_bim([&ctx](const Vec3& q) { return label_location(ctx, q); }, train,
                     ctx.fingerprint, detail::resolve_threads(ctx.config.threads));
}

ExperimentResult run_experiment(const ScenarioConfig& config, const BIMDatabase* prebuilt,
                                std::span<const Vec3> test_override) {
    const ScenarioContext ctx = make_context(config);
    const std::vector<Vec3> train = training_locations(ctx);
    BIMDatabase db;
    if (prebuilt != nullptr) {
        require_compatible(*prebuilt, ctx.fingerprint);
        db = *prebuilt;
    } else {
        db = build_scenario_bim(ctx, train);
    }
    std::vector<Vec3> test;
    if (!test_override.empty())
        test.assign(test_override.begin(), test_override.end());
    else
        test = test_locations(ctx, train);

    const std::size_t n_trials = test.size();
    const std::size_t n_powers = config.power_sweep_dbm.size();
    const std::size_t n_schemes = all_schemes.size();
    const double sigma2 = noise_power(config.noise_psd_dbm_per_hz, config.bandwidth_hz);

    std::vector<std::vector<TrialRecord>> per_trial(n_trials);
    auto run_trial = [&](std::size_t i) {
        const Vec3& q = test[i];
        const TrialChannels ch =
            make_trial_channels(config.layout, config.bs_array, config.irs_array, q);
        RngEngine err_rng(derive_seed(config.seeds.error, i));
        const Vec3 q_obs = apply_location_error(q, config.location_error_mean_m, err_rng);

        // Selections that do not depend on transmit power, done once per trial.
        const BeamPair pcsi_pair = fft_search(ch.phi, ctx.V, ctx.F).pair;
        const double pcsi_gain = pair_gain(ch.phi, ctx.V, ctx.F, pcsi_pair);
        const BeamPair free_pair = vote(knn(db, q_obs, config.k_neighbors));
        const double free_gain = pair_gain(ch.phi, ctx.V, ctx.F, free_pair);
        const BeamPair loc_pair =
            location_pair(config.layout, config.bs_array, config.irs_array, q_obs, ctx.V, ctx.F);
        const double loc_gain = pair_gain(ch.phi, ctx.V, ctx.F, loc_pair);

        std::vector<TrialRecord>& recs = per_trial[i];
        recs.reserve(n_schemes * n_powers);
        for (std::size_t p = 0; p < n_powers; ++p) {
            const double power_dbm = config.power_sweep_dbm[p];
            const LinkBudget budget{dbm_to_mw(power_dbm), sigma2};
            auto push = [&](Scheme s, BeamPair pair, double gain, double rate) {
                recs.push_back({s, power_dbm, i, q, pair, gain, rate});
            };
            push(Scheme::perfect_csi, pcsi_pair, pcsi_gain,
                 effective_rate(pcsi_gain, budget, config.symbols_per_block, 0));
            push(Scheme::bim_training_free, free_pair, free_gain,
                 effective_rate(free_gain, budget, config.symbols_per_block, 0));
            RngEngine light_rng(derive_seed(config.seeds.noise, i, p,
                                            static_cast<std::uint64_t>(Scheme::bim_light_training)));
            const SchemeOutcome light =
                select_bim_light_training(db, q_obs, config.k_neighbors, ch.phi, ctx.V, ctx.F,
                                          budget, config.symbols_per_block, light_rng);
            push(Scheme::bim_light_training, light.pair, light.gain, light.rate);
            push(Scheme::location_based, loc_pair, loc_gain,
                 effective_rate(loc_gain, budget, config.symbols_per_block, 0));
            RngEngine tts_rng(derive_seed(config.seeds.noise, i, p,
                                          static_cast<std::uint64_t>(Scheme::two_time_scale)));
            const SchemeOutcome tts = select_two_time_scale(ch.G, ch.phi, ctx.V, ctx.F, budget,
                                                            config.symbols_per_block, tts_rng);
            push(Scheme::two_time_scale, tts.pair, tts.gain, tts.rate);
        }
    };
    detail::parallel_for(n_trials, detail::resolve_threads(config.threads), run_trial);

    ExperimentResult result;
    result.records.reserve(n_trials * n_powers * n_schemes);
    for (std::size_t s = 0; s < n_schemes; ++s) {
        for (std::size_t p = 0; p < n_powers; ++p) {
            double rate_sum = 0.0;
            for (std::size_t i = 0; i < n_trials; ++i) {
                const TrialRecord& rec = per_trial[i][p * n_schemes + s];
                result.records.push_back(rec);
                rate_sum += rec.rate;
            }
            result.aggregates.push_back({all_schemes[s], config.power_sweep_dbm[p],
                                         rate_sum / static_cast<double>(n_trials), n_trials});
        }
    }
    return result;
}

}  // namespace irsbeam

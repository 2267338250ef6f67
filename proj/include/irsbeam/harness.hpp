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

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "irsbeam/bim.hpp"
#include "irsbeam/codebook.hpp"
#include "irsbeam/geometry.hpp"
#include "irsbeam/paths.hpp"
#include "irsbeam/schemes.hpp"
#include "irsbeam/types.hpp"

namespace irsbeam {

enum class Scheme : int {
    perfect_csi = 0,
    bim_training_free = 1,
    bim_light_training = 2,
    location_based = 3,
    two_time_scale = 4,
};

inline constexpr std::array<Scheme, 5> all_schemes = {
    Scheme::perfect_csi, Scheme::bim_training_free, Scheme::bim_light_training,
    Scheme::location_based, Scheme::two_time_scale};

const char* scheme_name(Scheme s);
std::optional<Scheme> scheme_from_name(const std::string& name);

struct SeedConfig {
    std::uint64_t train = 1001;
    std::uint64_t test = 2002;
    std::uint64_t noise = 3003;
    std::uint64_t error = 4004;
};

/// Full experiment description; defaults reproduce the reference setup
/// (100x100 IRS, 8x8 BS, -174 dBm/Hz over 10 MHz, 10..40 dBm sweep,
/// S = 2e4 symbols, K = 3, 984 training and 100 test locations).
struct ScenarioConfig {
    SiteLayout layout;
    UPAConfig irs_array{100, 100, 0.5};
    UPAConfig bs_array{8, 8, 0.5};
    double noise_psd_dbm_per_hz = -174.0;
    double bandwidth_hz = 1.0e7;
    std::vector<double> power_sweep_dbm = {10, 15, 20, 25, 30, 35, 40};
    long symbols_per_block = 20000;
    std::size_t k_neighbors = 3;
    std::size_t n_train = 984;
    std::size_t n_test = 100;
    double location_error_mean_m = 0.0;
    SeedConfig seeds;
    unsigned threads = 0;  // 0 = all hardware threads

    ScenarioConfig();  // defaults to the built-in site layout
};

/// Throws ConfigError naming the offending field.
void validate_config(const ScenarioConfig& config);

/// The built-in deployment: IRS at the area edge, elevated BS, one wall
/// shadowing most of the UE rectangle, elevated scatterers restoring NLoS
/// coverage over the wall.
SiteLayout default_site_layout();

/// "paper" (the defaults above) or "desk" (8x8 IRS, 4x4 BS, 200 training
/// points -- small enough for brute-force cross-checks).
ScenarioConfig preset_config(const std::string& name);

// --- JSON wire format (mirrors ScenarioConfig field-for-field) ---
ScenarioConfig config_from_json_text(const std::string& text, const ScenarioConfig& base);
ScenarioConfig load_config(const std::filesystem::path& file, const ScenarioConfig& base);
std::string config_to_json_text(const ScenarioConfig& config);

double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);

/// Thermal noise power over a bandwidth, in linear mW.
double noise_power(double psd_dbm_per_hz, double bandwidth_hz);

/// Planar location error with Rayleigh magnitude (scale mean*sqrt(2/pi)) and
/// uniform direction; mean 0 returns q unchanged.
Vec3 apply_location_error(const Vec3& q, double mean_error_m, RngEngine& rng);

/// Channels of one UE position, all derived from the traced paths.
struct TrialChannels {
    PathSet paths;
    ChannelG G;
    ChannelH h;
    CascadedChannel phi;
};

TrialChannels make_trial_channels(const SiteLayout& layout, const UPAConfig& bs_cfg,
                                  const UPAConfig& irs_cfg, const Vec3& ue);

/// Validated config plus the codebooks it implies.
struct ScenarioContext {
    ScenarioConfig config;
    Codebook<double> V;
    Codebook<double> F;
    CodebookFingerprint fingerprint;
};

ScenarioContext make_context(const ScenarioConfig& config);

/// Offline labeling of one location: trace, synthesize, cascade, search.
BeamPair label_location(const ScenarioContext& ctx, const Vec3& q);

std::vector<Vec3> training_locations(const ScenarioContext& ctx);

/// Test locations sampled disjointly from the training set (exact coincidences
/// are redrawn).
std::vector<Vec3> test_locations(const ScenarioContext& ctx, std::span<const Vec3> train);

BIMDatabase build_scenario_bim(const ScenarioContext& ctx, std::span<const Vec3> train);

struct TrialRecord {
    Scheme scheme = Scheme::perfect_csi;
    double power_dbm = 0.0;
    std::size_t trial = 0;
    Vec3 location = Vec3::Zero();  // true UE position
    BeamPair pair;
    double gain = 0.0;
    double rate = 0.0;
};

struct RateAggregate {
    Scheme scheme = Scheme::perfect_csi;
    double power_dbm = 0.0;
    double mean_rate_bpshz = 0.0;
    std::size_t trials = 0;
};

struct ExperimentResult {
    std::vector<TrialRecord> records;     // scheme-major, then power, then trial
    std::vector<RateAggregate> aggregates;
};

/// Full Monte Carlo comparison. Training/test sampling, map construction and
/// every random stream derive from the config seeds, so results are
/// reproducible bit-for-bit regardless of thread count. A prebuilt database
/// (fingerprint-checked) skips the labeling stage; a test-location override
/// replaces the sampled disjoint test set.
ExperimentResult run_experiment(const ScenarioConfig& config,
                                const BIMDatabase* prebuilt = nullptr,
                                std::span<const Vec3> test_override = {});

/// rates.csv, trials.csv and a plot script under out_dir.
void write_results(const ExperimentResult& result, const std::filesystem::path& out_dir);

std::vector<RateAggregate> read_rates_csv(const std::filesystem::path& file);

/// Fixed-width table of mean rates (rows = powers, columns = schemes).
std::string format_rate_table(std::span<const RateAggregate> aggregates);

}  // namespace irsbeam

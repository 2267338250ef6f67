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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irsbeam/bim.hpp"
#include "irsbeam/harness.hpp"
#include "irsbeam/path_io.hpp"
#include "irsbeam/tracer.hpp"

namespace {

using namespace irsbeam;

struct ConfigArgs {
    std::string preset = "paper";
    std::string config_file;

    void attach(CLI::App* cmd) {
        cmd->add_option("--preset", preset, "Base preset: paper or desk")
            ->check(CLI::IsMember({"paper", "desk"}));
        cmd->add_option("--config", config_file, "JSON config overlaid on the preset");
    }

    ScenarioConfig resolve() const {
        ScenarioConfig base = preset_config(preset);
        if (config_file.empty()) return base;
        return load_config(config_file, base);
    }
};

int cmd_trace(const ConfigArgs& args, const std::string& out_dir, std::size_t count,
              const std::string& which_set) {
    const ScenarioContext ctx = make_context(args.resolve());
    const auto& seeds = ctx.config.seeds;
    const std::uint64_t seed = which_set == "train" ? seeds.train : seeds.test;
    const std::size_t n =
        count > 0 ? count : (which_set == "train" ? ctx.config.n_train : ctx.config.n_test);
    const auto locations = sample_ue_locations(ctx.config.layout.ue_area, n, seed);

    const std::filesystem::path dir(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

    const auto index_file = dir / "locations.csv";
    std::ofstream index(index_file);
    if (!index) throw IoError("cannot open " + index_file.string() + " for writing");
    index << "index,x,y,z,file\n";
    for (std::size_t i = 0; i < locations.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "paths_%04zu.csv", i);
        export_paths(trace_paths(ctx.config.layout, locations[i]), dir / name);
        index << i << ',' << locations[i].x() << ',' << locations[i].y() << ','
              << locations[i].z() << ',' << name << '\n';
    }
    if (!index) throw IoError("failed writing " + index_file.string());
    std::cout << "traced " << locations.size() << " locations into " << dir.string() << "\n";
    return 0;
}

int cmd_import_paths(const std::string& in_file, const std::string& out_file) {
    const PathSet paths = import_paths(std::filesystem::path(in_file));
    double power_mw = 0.0;
    for (const auto& p : paths.bs_irs_paths) power_mw += std::norm(p.gain);
    std::cout << in_file << ": " << paths.bs_irs_paths.size() << " BS-IRS path(s), "
              << paths.irs_ue_paths.size() << " IRS-UE path(s)";
    if (!paths.bs_irs_paths.empty())
        std::cout << ", BS-IRS power sum " << mw_to_dbm(power_mw) << " dB";
    std::cout << "\n";
    if (!out_file.empty()) export_paths(paths, std::filesystem::path(out_file));
    return 0;
}

int cmd_build_bim(const ConfigArgs& args, const std::string& out_file, unsigned threads) {
    ScenarioConfig config = args.resolve();
    if (threads > 0) config.threads = threads;
    const ScenarioContext ctx = make_context(config);
    const auto train = training_locations(ctx);
    const BIMDatabase db = build_scenario_bim(ctx, train);
    save_bim(db, out_file);
    std::cout << "labeled " << db.entries.size() << " training locations -> " << out_file
              << "\n";
    return 0;
}

int cmd_run(const ConfigArgs& args, const std::string& bim_file, const std::string& out_dir,
            unsigned threads) {
    ScenarioConfig config = args.resolve();
    if (threads > 0) config.threads = threads;
    ExperimentResult result;
    if (bim_file.empty()) {
        result = run_experiment(config);
    } else {
        const BIMDatabase db = load_bim(bim_file);
        result = run_experiment(config, &db);
    }
    write_results(result, out_dir);
    std::cout << format_rate_table(result.aggregates);
    std::cout << "results written to " << out_dir << "\n";
    return 0;
}

int cmd_report(const std::string& in_dir) {
    const auto aggregates = read_rates_csv(std::filesystem::path(in_dir) / "rates.csv");
    std::cout << format_rate_table(aggregates);
    return 0;
}

int cmd_config(const ConfigArgs& args) {
    std::cout << config_to_json_text(args.resolve());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Beam selection simulator for an IRS-aided downlink"};
    app.require_subcommand(1);

    ConfigArgs trace_args;
    std::string trace_out = "paths";
    std::size_t trace_count = 0;
    std::string trace_set = "test";
    CLI::App* trace = app.add_subcommand("trace", "Trace propagation paths for sampled UEs");
    trace_args.attach(trace);
    trace->add_option("--out", trace_out, "Output directory");
    trace->add_option("--count", trace_count, "Number of locations (default: set size)");
    trace->add_option("--set", trace_set, "Which sampling stream: train or test")
        ->check(CLI::IsMember({"train", "test"}));

    std::string import_in;
    std::string import_out;
    CLI::App* import_cmd =
        app.add_subcommand("import-paths", "Validate a path CSV and print a summary");
    import_cmd->add_option("--in", import_in, "Path CSV to read")->required();
    import_cmd->add_option("--out", import_out, "Re-export the parsed paths here");

    ConfigArgs bim_args;
    std::string bim_out = "map.bim";
    unsigned bim_threads = 0;
    CLI::App* build = app.add_subcommand("build-bim", "Label training locations offline");
    bim_args.attach(build);
    build->add_option("--out", bim_out, "Output map file");
    build->add_option("--threads", bim_threads, "Worker threads (0 = config value)");

    ConfigArgs run_args;
    std::string run_bim;
    std::string run_out = "results";
    unsigned run_threads = 0;
    CLI::App* run = app.add_subcommand("run", "Run the full scheme comparison");
    run_args.attach(run);
    run->add_option("--bim", run_bim, "Reuse a prebuilt map file");
    run->add_option("--out", run_out, "Results directory");
    run->add_option("--threads", run_threads, "Worker threads (0 = config value)");

    std::string report_in = "results";
    CLI::App* report = app.add_subcommand("report", "Print the rate table of a results directory");
    report->add_option("--in", report_in, "Results directory");

    ConfigArgs config_args;
    CLI::App* config_cmd = app.add_subcommand("config", "Print the effective JSON config");
    config_args.attach(config_cmd);

    try {
        app.parse(argc, argv);
        if (trace->parsed()) return cmd_trace(trace_args, trace_out, trace_count, trace_set);
        if (import_cmd->parsed()) return cmd_import_paths(import_in, import_out);
        if (build->parsed()) return cmd_build_bim(bim_args, bim_out, bim_threads);
        if (run->parsed()) return cmd_run(run_args, run_bim, run_out, run_threads);
        if (report->parsed()) return cmd_report(report_in);
        if (config_cmd->parsed()) return cmd_config(config_args);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const irsbeam::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    } catch (const irsbeam::ParseError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    } catch (const irsbeam::UnitError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    } catch (const irsbeam::FormatVersionMismatch& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    } catch (const irsbeam::Error& e) {
        // ConfigError, FingerprintMismatch, geometry/codebook misuse: all are
        // problems with the requested setup rather than with the machine.
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

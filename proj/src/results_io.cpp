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

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "irsbeam/harness.hpp"
#include "text_util.hpp"

namespace irsbeam {

namespace {

constexpr const char* rates_header = "scheme,power_dbm,mean_rate_bpshz,trials";
constexpr const char* trials_header =
    "scheme,power_dbm,trial,x,y,z,irs_index,bs_index,gain,rate";

// Companion plot script; kept self-contained so a results directory can be
// rendered without the simulator present.
constexpr const char* plot_script = R"py(#!/usr/bin/env python3
"""Plot mean achievable rate vs transmit power from a rates.csv file."""
import argparse
import csv
import sys
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

ORDER = [
    "perfect_csi",
    "bim_training_free",
    "bim_light_training",
    "location_based",
    "two_time_scale",
]
STYLE = {
    "perfect_csi": ("k", "o", "perfect CSI"),
    "bim_training_free": ("tab:blue", "s", "map, training-free"),
    "bim_light_training": ("tab:green", "^", "map, light training"),
    "location_based": ("tab:orange", "d", "location-based"),
    "two_time_scale": ("tab:red", "v", "two-time-scale"),
}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("rates", nargs="?", default="rates.csv")
    ap.add_argument(
        "--full-training-overhead",
        type=float,
        default=None,
        metavar="MN_OVER_S",
        help="also draw the analytic full-training bound "
        "max(0, 1 - MN/S) times the perfect-CSI curve",
    )
    args = ap.parse_args()
    curves = defaultdict(list)
    with open(args.rates, newline="") as f:
        for row in csv.DictReader(f):
            curves[row["scheme"]].append(
                (float(row["power_dbm"]), float(row["mean_rate_bpshz"]))
            )
    fig, ax = plt.subplots(figsize=(6.2, 4.4))
    for scheme in ORDER:
        if scheme not in curves:
            continue
        pts = sorted(curves[scheme])
        color, marker, label = STYLE[scheme]
        ax.plot([p for p, _ in pts], [r for _, r in pts],
                color=color, marker=marker, label=label)
    if args.full_training_overhead is not None and "perfect_csi" in curves:
        factor = max(0.0, 1.0 - args.full_training_overhead)
        pts = sorted(curves["perfect_csi"])
        ax.plot([p for p, _ in pts], [factor * r for _, r in pts],
                color="gray", linestyle="--", label="full training (bound)")
    ax.set_xlabel("transmit power (dBm)")
    ax.set_ylabel("mean achievable rate (bps/Hz)")
    ax.grid(True, alpha=0.4)
    ax.legend()
    fig.tight_layout()
    fig.savefig("rates.png", dpi=150)
    print("wrote rates.png")
    return 0


if __name__ == "__main__":
    sys.exit(main())
)py";

void require_stream(const std::ostream& os, const std::filesystem::path& file) {
    if (!os) throw IoError("failed writing " + file.string());
}

}  // namespace

void write_results(const ExperimentResult& result, const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

    const auto rates_file = out_dir / "rates.csv";
    {
        std::ofstream os(rates_file);
        if (!os) throw IoError("cannot open " + rates_file.string() + " for writing");
        os << rates_header << '\n';
        for (const RateAggregate& a : result.aggregates)
            os << scheme_name(a.scheme) << ',' << detail::format_double(a.power_dbm) << ','
               << detail::format_double(a.mean_rate_bpshz) << ','
               << detail::format_int(static_cast<long long>(a.trials)) << '\n';
        require_stream(os, rates_file);
    }

    const auto trials_file = out_dir / "trials.csv";
    {
        std::ofstream os(trials_file);
        if (!os) throw IoError("cannot open " + trials_file.string() + " for writing");
        os << trials_header << '\n';
        for (const TrialRecord& r : result.records)
            os << scheme_name(r.scheme) << ',' << detail::format_double(r.power_dbm) << ','
               << detail::format_int(static_cast<long long>(r.trial)) << ','
               << detail::format_double(r.location.x()) << ','
               << detail::format_double(r.location.y()) << ','
               << detail::format_double(r.location.z()) << ','
               << detail::format_int(static_cast<long long>(r.pair.irs_index)) << ','
               << detail::format_int(static_cast<long long>(r.pair.bs_index)) << ','
               << detail::format_double(r.gain) << ',' << detail::format_double(r.rate) << '\n';
        require_stream(os, trials_file);
    }

    const auto plot_file = out_dir / "plot_rates.py";
    {
        std::ofstream os(plot_file);
        if (!os) throw IoError("cannot open " + plot_file.string() + " for writing");
        os << plot_script;
        require_stream(os, plot_file);
    }
}

std::vector<RateAggregate> read_rates_csv(const std::filesystem::path& file) {
    std::ifstream is(file);
    if (!is) throw IoError("cannot open " + file.string() + " for reading");
    std::string line;
    if (!std::getline(is, line)) throw ParseError(1, "missing header");
    detail::strip_cr(line);
    if (line != rates_header)
        throw ParseError(1, "expected header '" + std::string(rates_header) + "'");
    std::vector<RateAggregate> out;
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        detail::strip_cr(line);
        if (line.empty()) continue;
        const auto fields = detail::split_fields(line, ',');
        if (fields.size() != 4)
            throw ParseError(line_no, "expected 4 fields, got " + std::to_string(fields.size()));
        RateAggregate a;
        const auto scheme = scheme_from_name(std::string(fields[0]));
        if (!scheme)
            throw ParseError(line_no, "unknown scheme '" + std::string(fields[0]) + "'");
        a.scheme = *scheme;
        a.power_dbm = detail::parse_double(fields[1], line_no, "power_dbm");
        a.mean_rate_bpshz = detail::parse_double(fields[2], line_no, "mean_rate_bpshz");
        a.trials = static_cast<std::size_t>(detail::parse_int(fields[3], line_no, "trials"));
        out.push_back(a);
    }
    return out;
}

std::string format_rate_table(std::span<const RateAggregate> aggregates) {
    std::vector<double> powers;
    std::vector<Scheme> schemes;
    for (const RateAggregate& a : aggregates) {
        if (std::find(powers.begin(), powers.end(), a.power_dbm) == powers.end())
            powers.push_back(a.power_dbm);
        if (std::find(schemes.begin(), schemes.end(), a.scheme) == schemes.end())
            schemes.push_back(a.scheme);
    }
    std::ostringstream os;
    os << std::left << std::setw(12) << "power_dbm";
    for (Scheme s : schemes) os << std::right << std::setw(20) << scheme_name(s);
    os << '\n';
    for (double p : powers) {
        os << std::left << std::setw(12) << detail::format_double(p);
        for (Scheme s : schemes) {
            double value = std::numeric_limits<double>::quiet_NaN();
            for (const RateAggregate& a : aggregates)
                if (a.scheme == s && a.power_dbm == p) value = a.mean_rate_bpshz;
            os << std::right << std::setw(20) << std::fixed << std::setprecision(4) << value;
            os.unsetf(std::ios::fixed);
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace irsbeam

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

#include "irsbeam/path_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

#include "irsbeam/errors.hpp"
#include "text_util.hpp"

namespace irsbeam {

namespace {

constexpr double rad_per_deg = std::numbers::pi / 180.0;

void write_path(std::ostream& out, const char* link, const PathComponent& p) {
    const double amp = std::abs(p.gain);
    // |gain| = 0 serializes as -inf dB and parses back to a zero gain.
    const double power_db = 20.0 * std::log10(amp);
    const double phase_deg = std::arg(p.gain) / rad_per_deg;
    out << link << ',' << detail::format_double(power_db) << ','
        << detail::format_double(phase_deg) << ',' << detail::format_double(p.depart_zenith)
        << ',' << detail::format_double(p.depart_azimuth) << ','
        << detail::format_double(p.arrive_zenith) << ','
        << detail::format_double(p.arrive_azimuth) << ',' << detail::format_double(p.delay)
        << '\n';
}

void check_angle_pair(double zenith, double azimuth, std::size_t line_no, const char* which) {
    if (!(zenith >= 0.0 && zenith <= std::numbers::pi))
        throw UnitError("line " + std::to_string(line_no) + ": " + which +
                        " zenith outside [0, pi]");
    if (!(azimuth >= -std::numbers::pi && azimuth < std::numbers::pi))
        throw UnitError("line " + std::to_string(line_no) + ": " + which +
                        " azimuth outside [-pi, pi)");
}

}  // namespace

void export_paths(const PathSet& paths, std::ostream& out) {
    out << path_csv_header << '\n';
    for (const PathComponent& p : paths.bs_irs_paths) write_path(out, "bs_irs", p);
    for (const PathComponent& p : paths.irs_ue_paths) write_path(out, "irs_ue", p);
}

void export_paths(const PathSet& paths, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw IoError("cannot open " + file.string() + " for writing");
    export_paths(paths, out);
    out.flush();
    if (!out) throw IoError("write to " + file.string() + " failed");
}

PathSet import_paths(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError(1, "missing header line");
    if (detail::strip_cr(line) != path_csv_header)
        throw ParseError(1, "unexpected header '" + line + "'");
    PathSet set;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view sv = detail::strip_cr(line);
        if (sv.empty()) continue;
        const auto fields = detail::split_fields(sv, ',');
        if (fields.size() != 8)
            throw ParseError(line_no, "expected 8 fields, got " + std::to_string(fields.size()));
        const std::string_view link = fields[0];
        if (link != "bs_irs" && link != "irs_ue")
            throw ParseError(line_no, "unknown link '" + std::string(link) + "'");
        const double power_db = detail::parse_double(fields[1], line_no, "power_db");
        const double phase_deg = detail::parse_double(fields[2], line_no, "phase_deg");
        PathComponent p;
        p.depart_zenith = detail::parse_double(fields[3], line_no, "depart_zenith_rad");
        p.depart_azimuth = detail::parse_double(fields[4], line_no, "depart_azimuth_rad");
        p.arrive_zenith = detail::parse_double(fields[5], line_no, "arrive_zenith_rad");
        p.arrive_azimuth = detail::parse_double(fields[6], line_no, "arrive_azimuth_rad");
        p.delay = detail::parse_double(fields[7], line_no, "delay_s");
        if (std::isnan(power_db) || power_db == std::numeric_limits<double>::infinity())
            throw UnitError("line " + std::to_string(line_no) + ": power_db must be finite or -inf");
        if (!std::isfinite(phase_deg))
            throw UnitError("line " + std::to_string(line_no) + ": phase_deg must be finite");
        check_angle_pair(p.depart_zenith, p.depart_azimuth, line_no, "depart");
        check_angle_pair(p.arrive_zenith, p.arrive_azimuth, line_no, "arrive");
        if (!(p.delay >= 0.0) || !std::isfinite(p.delay))
            throw UnitError("line " + std::to_string(line_no) + ": delay_s must be >= 0");
        p.gain = std::polar(std::pow(10.0, power_db / 20.0), phase_deg * rad_per_deg);
        if (link == "bs_irs")
            set.bs_irs_paths.push_back(p);
        else
            set.irs_ue_paths.push_back(p);
    }
    return set;
}

PathSet import_paths(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IoError("cannot open " + file.string() + " for reading");
    return import_paths(in);
}

}  // namespace irsbeam

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

#include <filesystem>
#include <iosfwd>
#include <string>

#include "irsbeam/errors.hpp"
#include "irsbeam/paths.hpp"

namespace irsbeam {

/// CSV header of the path exchange format. Gains are stored as
/// (20*log10|gain| dB, phase in degrees); angles in radians; delay in seconds.
inline constexpr const char* path_csv_header =
    "link,power_db,phase_deg,depart_zenith_rad,depart_azimuth_rad,"
    "arrive_zenith_rad,arrive_azimuth_rad,delay_s";

void export_paths(const PathSet& paths, std::ostream& out);
void export_paths(const PathSet& paths, const std::filesystem::path& file);

PathSet import_paths(std::istream& in);
PathSet import_paths(const std::filesystem::path& file);

}  // namespace irsbeam

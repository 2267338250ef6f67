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
#include <vector>

namespace irsbeam {

/// One propagation path of a link. Departure angles are expressed in the
/// transmitter-side array frame, arrival angles in the receiver-side frame.
struct PathComponent {
    std::complex<double> gain{0.0, 0.0};  // linear amplitude
    double depart_zenith = 0.0;
    double depart_azimuth = 0.0;
    double arrive_zenith = 0.0;
    double arrive_azimuth = 0.0;
    double delay = 0.0;  // seconds
};

/// Same path seen from the opposite link direction.
inline PathComponent reversed(const PathComponent& p) {
    PathComponent r = p;
    r.depart_zenith = p.arrive_zenith;
    r.depart_azimuth = p.arrive_azimuth;
    r.arrive_zenith = p.depart_zenith;
    r.arrive_azimuth = p.depart_azimuth;
    return r;
}

inline std::vector<PathComponent> reversed(const std::vector<PathComponent>& paths) {
    std::vector<PathComponent> out;
    out.reserve(paths.size());
    for (const PathComponent& p : paths) out.push_back(reversed(p));
    return out;
}

/// Paths of the two links of the cascaded channel.
struct PathSet {
    std::vector<PathComponent> bs_irs_paths;
    std::vector<PathComponent> irs_ue_paths;
};

}  // namespace irsbeam

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

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "irsbeam/errors.hpp"
#include "irsbeam/geometry.hpp"
#include "irsbeam/paths.hpp"
#include "irsbeam/random.hpp"
#include "irsbeam/types.hpp"

namespace irsbeam {

namespace detail {

inline PathComponent make_path(double wavelength, double total_length, double amplitude_scale,
                               const ArrayFrame& tx_frame, const Vec3& depart_dir,
                               const ArrayFrame& rx_frame, const Vec3& arrive_dir) {
    PathComponent p;
    const double amp = amplitude_scale * wavelength / (4.0 * std::numbers::pi * total_length);
    const double phase = -2.0 * std::numbers::pi * total_length / wavelength;
    p.gain = std::polar(amp, phase);
    const Spherical dep = direction_angles(tx_frame, depart_dir);
    const Spherical arr = direction_angles(rx_frame, arrive_dir);
    p.depart_zenith = dep.zenith;
    p.depart_azimuth = dep.azimuth;
    p.arrive_zenith = arr.zenith;
    p.arrive_azimuth = arr.azimuth;
    p.delay = total_length / speed_of_light;
    return p;
}

/// Free-space LoS plus one single-bounce component per scatterer, each kept
/// only when every segment clears all blockers. Emission order (LoS first,
/// then scatterers in layout order) is part of the output contract.
inline std::vector<PathComponent> trace_link(const Vec3& tx, const ArrayFrame& tx_frame,
                                             const Vec3& rx, const ArrayFrame& rx_frame,
                                             const SiteLayout& layout) {
    if ((tx - rx).squaredNorm() == 0.0)
        throw DegenerateGeometry("link endpoints coincide");
    std::vector<PathComponent> out;
    if (!segment_blocked(tx, rx, layout.blockers)) {
        const double d = (rx - tx).norm();
        out.push_back(make_path(layout.carrier_wavelength, d, 1.0, tx_frame,
                                (rx - tx) / d, rx_frame, (tx - rx) / d));
    }
    for (const Scatterer& s : layout.scatterers) {
        if ((s.position - tx).squaredNorm() == 0.0 || (s.position - rx).squaredNorm() == 0.0)
            throw DegenerateGeometry("scatterer coincides with a link endpoint");
        if (segment_blocked(tx, s.position, layout.blockers)) continue;
        if (segment_blocked(s.position, rx, layout.blockers)) continue;
        const double d1 = (s.position - tx).norm();
        const double d2 = (rx - s.position).norm();
        out.push_back(make_path(layout.carrier_wavelength, d1 + d2, s.reflectivity, tx_frame,
                                (s.position - tx) / d1, rx_frame, (rx - s.position) / d2));
    }
    return out;
}

}  // namespace detail

/// Geometric path synthesis for one UE position: free-space LoS and
/// single-bounce scattering with binary blockage on both links.
inline PathSet trace_paths(const SiteLayout& layout, const Vec3& ue) {
    if (layout.carrier_wavelength <= 0.0)
        throw DegenerateGeometry("carrier wavelength must be positive");
    const ArrayFrame bs_frame = make_frame(layout.bs_orientation);
    const ArrayFrame irs_frame = make_frame(layout.irs_orientation);
    const ArrayFrame ue_frame = make_frame(Vec3::UnitZ());
    PathSet set;
    set.bs_irs_paths =
        detail::trace_link(layout.bs_position, bs_frame, layout.irs_position, irs_frame, layout);
    set.irs_ue_paths = detail::trace_link(layout.irs_position, irs_frame, ue, ue_frame, layout);
    return set;
}

/// Uniform positions over the UE rectangle at its fixed height. For each point
/// the x coordinate is drawn before y; a zero-extent axis yields its minimum.
inline std::vector<Vec3> sample_ue_locations(const UeArea& area, std::size_t n,
                                             std::uint64_t seed) {
    RngEngine rng(seed);
    std::vector<Vec3> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = uniform_in(rng, area.rect.min().x(), area.rect.max().x());
        const double y = uniform_in(rng, area.rect.min().y(), area.rect.max().y());
        out.emplace_back(x, y, area.height);
    }
    return out;
}

}  // namespace irsbeam

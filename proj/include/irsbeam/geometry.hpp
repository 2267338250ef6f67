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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Geometry>

#include "irsbeam/errors.hpp"
#include "irsbeam/types.hpp"

namespace irsbeam {

/// Axis-aligned box that removes any propagation segment passing through its interior.
using Blocker = Eigen::AlignedBox3d;

/// Point scatterer with a linear amplitude reflectivity in (0, 1].
struct Scatterer {
    Vec3 position = Vec3::Zero();
    double reflectivity = 1.0;
};

/// Axis-aligned rectangle of candidate UE positions at a fixed height.
struct UeArea {
    Eigen::AlignedBox2d rect{Eigen::Vector2d::Zero(), Eigen::Vector2d::Zero()};
    double height = 1.5;
};

/// Static deployment: terminal positions and boresights, obstacles, scatterers,
/// carrier wavelength and the UE region.
struct SiteLayout {
    Vec3 bs_position = Vec3::Zero();
    Vec3 bs_orientation = Vec3::UnitX();
    Vec3 irs_position = Vec3::Zero();
    Vec3 irs_orientation = Vec3::UnitX();
    std::vector<Blocker> blockers;
    std::vector<Scatterer> scatterers;
    double carrier_wavelength = 0.0107;  // meters
    UeArea ue_area;
};

/// Right-handed orthonormal array frame. Element rows run along e1, columns
/// along e2, boresight = e1 x e2 completes the triad.
struct ArrayFrame {
    Vec3 e1 = Vec3::UnitY();
    Vec3 e2 = Vec3::UnitZ();
    Vec3 boresight = Vec3::UnitX();
};

struct Spherical {
    double zenith = 0.0;   // [0, pi], measured from boresight
    double azimuth = 0.0;  // [-pi, pi), measured from e1 in the array plane
};

/// Build the local frame for a boresight direction. The in-plane axes derive
/// from the global up direction; a near-vertical boresight falls back to the
/// global x axis so the frame stays well-conditioned.
inline ArrayFrame make_frame(const Vec3& orientation) {
    const double n = orientation.norm();
    if (n == 0.0) throw DegenerateGeometry("array orientation vector has zero norm");
    ArrayFrame frame;
    frame.boresight = orientation / n;
    Vec3 up = Vec3::UnitZ();
    if (std::abs(frame.boresight.dot(up)) > 0.99) up = Vec3::UnitX();
    frame.e1 = up.cross(frame.boresight).normalized();
    frame.e2 = frame.boresight.cross(frame.e1);
    return frame;
}

/// Zenith/azimuth of a unit direction expressed in an array frame.
/// Azimuth is folded into [-pi, pi).
inline Spherical direction_angles(const ArrayFrame& frame, const Vec3& unit_dir) {
    Spherical s;
    s.zenith = std::acos(std::clamp(unit_dir.dot(frame.boresight), -1.0, 1.0));
    s.azimuth = std::atan2(unit_dir.dot(frame.e2), unit_dir.dot(frame.e1));
    if (s.azimuth == std::numbers::pi) s.azimuth = -std::numbers::pi;
    return s;
}

namespace detail {

/// Slab test against the open box interior. Endpoints on a face and segments
/// grazing a face or edge do not count as intersecting.
inline bool segment_intersects_box(const Vec3& p1, const Vec3& p2, const Blocker& box) {
    const Vec3 d = p2 - p1;
    double t0 = 0.0;
    double t1 = 1.0;
    for (int ax = 0; ax < 3; ++ax) {
        if (d[ax] == 0.0) {
            if (p1[ax] <= box.min()[ax] || p1[ax] >= box.max()[ax]) return false;
        } else {
            double ta = (box.min()[ax] - p1[ax]) / d[ax];
            double tb = (box.max()[ax] - p1[ax]) / d[ax];
            if (ta > tb) std::swap(ta, tb);
            t0 = std::max(t0, ta);
            t1 = std::min(t1, tb);
            if (t0 >= t1) return false;
        }
    }
    return true;
}

}  // namespace detail

/// True iff the open segment (p1, p2) passes through any blocker's interior.
inline bool segment_blocked(const Vec3& p1, const Vec3& p2, std::span<const Blocker> blockers) {
    for (const Blocker& b : blockers) {
        if (detail::segment_intersects_box(p1, p2, b)) return true;
    }
    return false;
}

}  // namespace irsbeam

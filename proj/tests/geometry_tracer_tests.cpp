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

#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "irsbeam/geometry.hpp"
#include "irsbeam/tracer.hpp"

using namespace irsbeam;

namespace {

SiteLayout bare_layout() {
    SiteLayout s;
    s.bs_position = {0.0, 0.0, 10.0};
    s.bs_orientation = {1.0, 0.0, -1.0};
    s.irs_position = {20.0, 0.0, 3.0};
    s.irs_orientation = {-1.0, 0.0, 0.0};
    s.carrier_wavelength = 0.0107;
    s.ue_area.rect = {Eigen::Vector2d(10.0, -5.0), Eigen::Vector2d(20.0, 5.0)};
    return s;
}

}  // namespace

TEST_CASE("segment blocked: through interior, above, and short of the box") {
    const std::vector<Blocker> boxes = {Blocker(Vec3(4, -1, 0), Vec3(6, 1, 2))};
    CHECK(segment_blocked({0, 0, 1}, {10, 0, 1}, boxes));
    CHECK_FALSE(segment_blocked({0, 0, 5}, {10, 0, 5}, boxes));
    CHECK_FALSE(segment_blocked({0, 0, 1}, {3, 0, 1}, boxes));
}

TEST_CASE("segment blocked: faces and edges are open") {
    const std::vector<Blocker> boxes = {Blocker(Vec3(4, -1, 0), Vec3(6, 1, 2))};
    // Endpoint on a face, segment leaving outward.
    CHECK_FALSE(segment_blocked({4, 0, 1}, {0, 0, 1}, boxes));
    // Segment sliding along the top face.
    CHECK_FALSE(segment_blocked({0, 0, 2}, {10, 0, 2}, boxes));
    // Segment along an edge.
    CHECK_FALSE(segment_blocked({0, 1, 2}, {10, 1, 2}, boxes));
    // Endpoint on a face, segment entering the interior.
    CHECK(segment_blocked({4, 0, 1}, {10, 0, 1}, boxes));
    // Diagonal through the interior.
    CHECK(segment_blocked({3, -2, 1}, {7, 2, 1}, boxes));
}

TEST_CASE("segment blocked: empty blocker list") {
    CHECK_FALSE(segment_blocked({0, 0, 0}, {1, 1, 1}, std::span<const Blocker>{}));
}

TEST_CASE("array frame is right-handed and orthonormal") {
    for (const Vec3& o : {Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(1, 2, 3), Vec3(0, 0, 1),
                          Vec3(-0.3, 0.1, 0.95)}) {
        const ArrayFrame f = make_frame(o);
        CHECK(f.boresight.norm() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(f.e1.norm() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(f.e2.norm() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(f.e1.dot(f.e2)) < 1e-12);
        CHECK(std::abs(f.e1.dot(f.boresight)) < 1e-12);
        CHECK((f.e1.cross(f.e2) - f.boresight).norm() < 1e-12);
    }
    CHECK_THROWS_AS(make_frame(Vec3::Zero()), DegenerateGeometry);
}

TEST_CASE("direction angles: boresight, in-plane axes, range") {
    const ArrayFrame f = make_frame(Vec3(1, 0, 0));
    CHECK(direction_angles(f, f.boresight).zenith == doctest::Approx(0.0));
    const Spherical along_e1 = direction_angles(f, f.e1);
    CHECK(along_e1.zenith == doctest::Approx(std::numbers::pi / 2));
    CHECK(along_e1.azimuth == doctest::Approx(0.0));
    const Spherical along_e2 = direction_angles(f, f.e2);
    CHECK(along_e2.zenith == doctest::Approx(std::numbers::pi / 2));
    CHECK(along_e2.azimuth == doctest::Approx(std::numbers::pi / 2));
    // Exactly opposite e1: azimuth folds to -pi, never +pi.
    const Spherical back = direction_angles(f, -f.e1);
    CHECK(back.azimuth == doctest::Approx(-std::numbers::pi));
    RngEngine rng(7);
    for (int i = 0; i < 200; ++i) {
        Vec3 u(uniform_in(rng, -1, 1), uniform_in(rng, -1, 1), uniform_in(rng, -1, 1));
        if (u.norm() < 1e-6) continue;
        u.normalize();
        const Spherical s = direction_angles(f, u);
        CHECK(s.zenith >= 0.0);
        CHECK(s.zenith <= std::numbers::pi);
        CHECK(s.azimuth >= -std::numbers::pi);
        CHECK(s.azimuth < std::numbers::pi);
    }
}

TEST_CASE("free-space LoS amplitude and phase") {
    SiteLayout s = bare_layout();
    const Vec3 ue(15.0, 0.0, 1.5);
    const PathSet paths = trace_paths(s, ue);
    REQUIRE(paths.bs_irs_paths.size() == 1);
    REQUIRE(paths.irs_ue_paths.size() == 1);
    const double d = (s.irs_position - s.bs_position).norm();
    const PathComponent& los = paths.bs_irs_paths[0];
    CHECK(std::abs(los.gain) ==
          doctest::Approx(s.carrier_wavelength / (4 * std::numbers::pi * d)).epsilon(1e-12));
    // Phase is -2*pi*d/lambda modulo 2*pi.
    const double expected_phase =
        std::arg(std::polar(1.0, -2 * std::numbers::pi * d / s.carrier_wavelength));
    CHECK(std::arg(los.gain) == doctest::Approx(expected_phase).epsilon(1e-9));
    CHECK(los.delay == doctest::Approx(d / speed_of_light).epsilon(1e-12));
}

TEST_CASE("scatterer bounce amplitude: reflectivity 0.3 over 5 m + 3 m") {
    SiteLayout s;
    s.bs_position = {0.0, -50.0, 0.0};
    s.bs_orientation = {0.0, 1.0, 0.0};
    s.irs_position = {0.0, 0.0, 0.0};
    s.irs_orientation = {1.0, 0.0, 0.0};
    s.carrier_wavelength = 0.0107;
    s.scatterers.push_back({Vec3(3.0, 4.0, 0.0), 0.3});  // 5 m from the IRS
    const Vec3 ue(3.0, 4.0, 3.0);                         // 3 m from the scatterer
    const PathSet paths = trace_paths(s, ue);
    REQUIRE(paths.irs_ue_paths.size() == 2);  // LoS + bounce
    const PathComponent& bounce = paths.irs_ue_paths[1];
    CHECK(std::abs(bounce.gain) ==
          doctest::Approx(0.3 * 0.0107 / (4 * std::numbers::pi * 8.0)).epsilon(1e-12));
    CHECK(bounce.delay == doctest::Approx(8.0 / speed_of_light).epsilon(1e-12));
}

TEST_CASE("blocker covering the IRS-UE segment empties that path list") {
    SiteLayout s = bare_layout();
    const Vec3 ue(15.0, 0.0, 1.5);
    // Low wall: the IRS-UE segment crosses it at z in [2.1, 2.4], the BS-IRS
    // segment passes above at z in [3.7, 4.05].
    s.blockers.push_back(Blocker(Vec3(17.0, -4.0, 0.0), Vec3(18.0, 4.0, 2.5)));
    const PathSet paths = trace_paths(s, ue);
    CHECK(paths.bs_irs_paths.size() == 1);
    CHECK(paths.irs_ue_paths.empty());
}

TEST_CASE("degenerate geometry throws") {
    SiteLayout s = bare_layout();
    CHECK_THROWS_AS(trace_paths(s, s.irs_position), DegenerateGeometry);
    SiteLayout bad = bare_layout();
    bad.scatterers.push_back({bad.irs_position, 0.5});
    CHECK_THROWS_AS(trace_paths(bad, Vec3(15, 0, 1.5)), DegenerateGeometry);
}

TEST_CASE("amplitude decreases monotonically with distance") {
    SiteLayout s = bare_layout();
    double prev = 1e9;
    for (double x = 19.0; x > 10.0; x -= 1.0) {
        const PathSet paths = trace_paths(s, Vec3(x, 0.0, 1.5));
        REQUIRE(paths.irs_ue_paths.size() == 1);
        const double amp = std::abs(paths.irs_ue_paths[0].gain);
        CHECK(amp < prev);
        prev = amp;
    }
}

TEST_CASE("tracing is deterministic and blockers only remove paths") {
    SiteLayout s = bare_layout();
    s.scatterers.push_back({Vec3(18.0, 3.0, 5.0), 0.7});
    s.scatterers.push_back({Vec3(12.0, -4.0, 6.0), 0.5});
    const Vec3 ue(14.0, 1.0, 1.5);

    const PathSet a = trace_paths(s, ue);
    const PathSet b = trace_paths(s, ue);
    REQUIRE(a.irs_ue_paths.size() == b.irs_ue_paths.size());
    for (std::size_t i = 0; i < a.irs_ue_paths.size(); ++i) {
        CHECK(a.irs_ue_paths[i].gain == b.irs_ue_paths[i].gain);
        CHECK(a.irs_ue_paths[i].depart_zenith == b.irs_ue_paths[i].depart_zenith);
        CHECK(a.irs_ue_paths[i].delay == b.irs_ue_paths[i].delay);
    }

    SiteLayout walled = s;
    walled.blockers.push_back(Blocker(Vec3(16.0, -1.0, 0.0), Vec3(17.0, 2.0, 4.0)));
    const PathSet blocked = trace_paths(walled, ue);
    CHECK(blocked.bs_irs_paths.size() <= a.bs_irs_paths.size());
    CHECK(blocked.irs_ue_paths.size() <= a.irs_ue_paths.size());
}

TEST_CASE("ue sampling: degenerate rectangle, bounds, reproducibility") {
    UeArea degenerate;
    degenerate.rect = {Eigen::Vector2d(3.0, 4.0), Eigen::Vector2d(3.0, 4.0)};
    degenerate.height = 1.5;
    const auto corner = sample_ue_locations(degenerate, 1, 42);
    REQUIRE(corner.size() == 1);
    CHECK(corner[0] == Vec3(3.0, 4.0, 1.5));

    UeArea area;
    area.rect = {Eigen::Vector2d(2.8, -5.0), Eigen::Vector2d(12.8, 5.0)};
    const auto pts = sample_ue_locations(area, 984, 1001);
    CHECK(pts.size() == 984);
    for (const Vec3& p : pts) {
        CHECK(p.x() >= 2.8);
        CHECK(p.x() < 12.8);
        CHECK(p.y() >= -5.0);
        CHECK(p.y() < 5.0);
        CHECK(p.z() == 1.5);
    }
    const auto again = sample_ue_locations(area, 984, 1001);
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(pts[i] == again[i]);
    CHECK(sample_ue_locations(area, 984, 1002)[0] != pts[0]);
}

TEST_CASE("ue sampling: empirical mean sits at the rectangle center") {
    UeArea area;
    area.rect = {Eigen::Vector2d(0.0, 0.0), Eigen::Vector2d(10.0, 10.0)};
    const auto pts = sample_ue_locations(area, 100000, 7);
    Eigen::Vector2d mean = Eigen::Vector2d::Zero();
    for (const Vec3& p : pts) mean += p.head<2>();
    mean /= static_cast<double>(pts.size());
    // Within 1% of the side length of the true center.
    CHECK(std::abs(mean.x() - 5.0) < 0.1);
    CHECK(std::abs(mean.y() - 5.0) < 0.1);
}

TEST_CASE("reversed path swaps departure and arrival angles") {
    PathComponent p;
    p.gain = {0.25, -0.5};
    p.depart_zenith = 0.3;
    p.depart_azimuth = -1.2;
    p.arrive_zenith = 1.1;
    p.arrive_azimuth = 2.0;
    p.delay = 3.3e-8;
    const PathComponent r = reversed(p);
    CHECK(r.gain == p.gain);
    CHECK(r.delay == p.delay);
    CHECK(r.depart_zenith == p.arrive_zenith);
    CHECK(r.depart_azimuth == p.arrive_azimuth);
    CHECK(r.arrive_zenith == p.depart_zenith);
    CHECK(r.arrive_azimuth == p.depart_azimuth);
}

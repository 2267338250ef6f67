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
#include <sstream>
#include <string>

#include <doctest.h>

#include "irsbeam/path_io.hpp"
#include "irsbeam/random.hpp"

using namespace irsbeam;

namespace {

std::string header_line() { return std::string(path_csv_header) + "\n"; }

}  // namespace

TEST_CASE("import: dB power and degree phase convert to a complex gain") {
    std::istringstream in(header_line() +
                          "bs_irs,-60.0,45.0,1.3962,0.0,1.5708,3.1415,3.3e-7\n");
    const PathSet paths = import_paths(in);
    REQUIRE(paths.bs_irs_paths.size() == 1);
    CHECK(paths.irs_ue_paths.empty());
    const PathComponent& p = paths.bs_irs_paths[0];
    CHECK(std::abs(p.gain) == doctest::Approx(std::pow(10.0, -60.0 / 20.0)).epsilon(1e-12));
    CHECK(std::arg(p.gain) == doctest::Approx(45.0 * std::numbers::pi / 180.0).epsilon(1e-12));
    CHECK(p.depart_zenith == doctest::Approx(1.3962));
    CHECK(p.arrive_azimuth == doctest::Approx(3.1415));
    CHECK(p.delay == doctest::Approx(3.3e-7));
}

TEST_CASE("import: empty irs_ue section and fully empty body") {
    std::istringstream only_bs(header_line() + "bs_irs,-80,0,0.5,0.5,0.5,0.5,1e-7\n");
    const PathSet a = import_paths(only_bs);
    CHECK(a.bs_irs_paths.size() == 1);
    CHECK(a.irs_ue_paths.empty());

    std::istringstream empty(header_line());
    const PathSet b = import_paths(empty);
    CHECK(b.bs_irs_paths.empty());
    CHECK(b.irs_ue_paths.empty());
}

TEST_CASE("import: malformed input raises ParseError with the line number") {
    std::istringstream bad_header("not,the,header\n");
    CHECK_THROWS_WITH_AS(import_paths(bad_header), doctest::Contains("line 1"), ParseError);

    std::istringstream bad_fields(header_line() + "bs_irs,-60.0,45.0,1.0\n");
    CHECK_THROWS_WITH_AS(import_paths(bad_fields), doctest::Contains("line 2"), ParseError);

    std::istringstream bad_link(header_line() + "uplink,-60.0,45.0,1.0,0,1.0,0,1e-7\n");
    CHECK_THROWS_AS(import_paths(bad_link), ParseError);

    std::istringstream bad_number(header_line() + "bs_irs,abc,45.0,1.0,0,1.0,0,1e-7\n");
    CHECK_THROWS_AS(import_paths(bad_number), ParseError);
}

TEST_CASE("import: unit violations raise UnitError") {
    // Positive-infinite power.
    std::istringstream inf_power(header_line() + "bs_irs,inf,45.0,1.0,0,1.0,0,1e-7\n");
    CHECK_THROWS_AS(import_paths(inf_power), UnitError);
    // Zenith outside [0, pi].
    std::istringstream bad_zenith(header_line() + "bs_irs,-60,45.0,4.0,0,1.0,0,1e-7\n");
    CHECK_THROWS_AS(import_paths(bad_zenith), UnitError);
    // Azimuth outside [-pi, pi).
    std::istringstream bad_azimuth(header_line() + "bs_irs,-60,45.0,1.0,3.15,1.0,0,1e-7\n");
    CHECK_THROWS_AS(import_paths(bad_azimuth), UnitError);
    // Negative delay.
    std::istringstream bad_delay(header_line() + "bs_irs,-60,45.0,1.0,0,1.0,0,-1e-7\n");
    CHECK_THROWS_AS(import_paths(bad_delay), UnitError);
}

TEST_CASE("export then import round-trips every field within 1e-12") {
    RngEngine rng(99);
    PathSet original;
    for (int i = 0; i < 6; ++i) {
        PathComponent p;
        p.gain = std::polar(std::pow(10.0, uniform_in(rng, -9.0, -2.0)),
                            uniform_in(rng, -std::numbers::pi, std::numbers::pi));
        p.depart_zenith = uniform_in(rng, 0.0, std::numbers::pi);
        p.depart_azimuth = uniform_in(rng, -std::numbers::pi, std::numbers::pi - 1e-9);
        p.arrive_zenith = uniform_in(rng, 0.0, std::numbers::pi);
        p.arrive_azimuth = uniform_in(rng, -std::numbers::pi, std::numbers::pi - 1e-9);
        p.delay = uniform_in(rng, 1e-8, 1e-6);
        if (i < 4)
            original.bs_irs_paths.push_back(p);
        else
            original.irs_ue_paths.push_back(p);
    }

    std::ostringstream out;
    export_paths(original, out);
    std::istringstream in(out.str());
    const PathSet parsed = import_paths(in);

    REQUIRE(parsed.bs_irs_paths.size() == original.bs_irs_paths.size());
    REQUIRE(parsed.irs_ue_paths.size() == original.irs_ue_paths.size());
    auto check_pair = [](const PathComponent& a, const PathComponent& b) {
        CHECK(std::abs(a.gain - b.gain) < 1e-12 * std::abs(b.gain) + 1e-15);
        CHECK(a.depart_zenith == doctest::Approx(b.depart_zenith).epsilon(1e-12));
        CHECK(a.depart_azimuth == doctest::Approx(b.depart_azimuth).epsilon(1e-12));
        CHECK(a.arrive_zenith == doctest::Approx(b.arrive_zenith).epsilon(1e-12));
        CHECK(a.arrive_azimuth == doctest::Approx(b.arrive_azimuth).epsilon(1e-12));
        CHECK(a.delay == doctest::Approx(b.delay).epsilon(1e-12));
    };
    for (std::size_t i = 0; i < parsed.bs_irs_paths.size(); ++i)
        check_pair(parsed.bs_irs_paths[i], original.bs_irs_paths[i]);
    for (std::size_t i = 0; i < parsed.irs_ue_paths.size(); ++i)
        check_pair(parsed.irs_ue_paths[i], original.irs_ue_paths[i]);
}

TEST_CASE("export emits the documented header and link labels") {
    PathSet set;
    PathComponent p;
    p.gain = {1e-4, 0.0};
    set.bs_irs_paths.push_back(p);
    set.irs_ue_paths.push_back(p);
    std::ostringstream out;
    export_paths(set, out);
    const std::string text = out.str();
    CHECK(text.rfind(path_csv_header, 0) == 0);
    CHECK(text.find("\nbs_irs,") != std::string::npos);
    CHECK(text.find("\nirs_ue,") != std::string::npos);
}

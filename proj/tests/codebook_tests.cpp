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
#include <complex>

#include <doctest.h>

#include "irsbeam/codebook.hpp"

using namespace irsbeam;
using Cx = std::complex<double>;

TEST_CASE("irs codebook: 1x1 single unit beam") {
    const auto V = make_irs_codebook({1, 1, 0.5});
    REQUIRE(V.size() == 1);
    const CVecd b = V.beam(0);
    REQUIRE(b.size() == 1);
    CHECK(std::abs(b[0] - Cx(1, 0)) < 1e-15);
}

TEST_CASE("irs codebook: 2x2 beam (1,1) is {1, -1, -1, 1}") {
    const auto V = make_irs_codebook({2, 2, 0.5});
    REQUIRE(V.size() == 4);
    const CVecd b = V.beam(1 * 2 + 1);
    CHECK(std::abs(b[0] - Cx(1, 0)) < 1e-12);
    CHECK(std::abs(b[1] - Cx(-1, 0)) < 1e-12);
    CHECK(std::abs(b[2] - Cx(-1, 0)) < 1e-12);
    CHECK(std::abs(b[3] - Cx(1, 0)) < 1e-12);
}

TEST_CASE("irs codebook: every entry unit modulus, count = element count") {
    const UPAConfig cfg{5, 7, 0.5};
    const auto V = make_irs_codebook(cfg);
    CHECK(V.size() == 35);
    for (Eigen::Index k = 0; k < V.size(); ++k) {
        const CVecd b = V.beam(k);
        REQUIRE(b.size() == 35);
        for (Eigen::Index n = 0; n < b.size(); ++n)
            CHECK(std::abs(b[n]) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("bs codebook: 1x1 single beam [1], unit norms, orthogonality") {
    const auto trivial = make_bs_codebook({1, 1, 0.5});
    CHECK(std::abs(trivial.beam(0)[0] - Cx(1, 0)) < 1e-15);

    const auto F = make_bs_codebook({8, 8, 0.5});
    CHECK(F.size() == 64);
    for (Eigen::Index m = 0; m < F.size(); ++m)
        CHECK(F.beam(m).squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));
    // DFT orthogonality between a sample of distinct beams.
    for (Eigen::Index m1 = 0; m1 < F.size(); m1 += 7) {
        for (Eigen::Index m2 = 0; m2 < F.size(); m2 += 5) {
            if (m1 == m2) continue;
            const Cx ip = (F.beam(m1).adjoint() * F.beam(m2)).value();
            CHECK(std::abs(ip) < 1e-10);
        }
    }
}

TEST_CASE("beam 0 of any DFT codebook has constant phase") {
    const auto V = make_irs_codebook({4, 4, 0.5});
    const CVecd b = V.beam(0);
    for (Eigen::Index n = 0; n < b.size(); ++n) CHECK(std::abs(b[n] - b[0]) < 1e-12);
    const auto F = make_bs_codebook({3, 2, 0.5});
    const CVecd f0 = F.beam(0);
    for (Eigen::Index n = 0; n < f0.size(); ++n) CHECK(std::abs(f0[n] - f0[0]) < 1e-12);
}

TEST_CASE("beam index range errors") {
    const auto V = make_irs_codebook({2, 3, 0.5});
    CHECK_THROWS_AS(V.beam(-1), IndexOutOfRange);
    CHECK_THROWS_AS(V.beam(6), IndexOutOfRange);
    CHECK_NOTHROW(V.beam(5));
}

TEST_CASE("beam vectors are deterministic across repeated enumeration") {
    const auto V = make_irs_codebook({3, 3, 0.5});
    for (Eigen::Index k = 0; k < V.size(); ++k) {
        const CVecd a = V.beam(k);
        const CVecd b = V.beam(k);
        CHECK((a - b).norm() == 0.0);
    }
}

TEST_CASE("irs codebook closed under conjugation") {
    const UPAConfig cfg{3, 4, 0.5};
    const auto V = make_irs_codebook(cfg);
    for (Eigen::Index k = 0; k < V.size(); ++k) {
        const CVecd conj_beam = V.beam(k).conjugate();
        // conj of beam (k1,k2) is beam ((R-k1)%R, (C-k2)%C).
        const Eigen::Index k1 = k / cfg.n_cols;
        const Eigen::Index k2 = k % cfg.n_cols;
        const Eigen::Index mirror =
            ((cfg.n_rows - k1) % cfg.n_rows) * cfg.n_cols + (cfg.n_cols - k2) % cfg.n_cols;
        CHECK((conj_beam - V.beam(mirror)).norm() < 1e-10);
    }
}

TEST_CASE("full irs codebook matrix is unitary up to the scale N") {
    const UPAConfig cfg{3, 3, 0.5};
    const auto V = make_irs_codebook(cfg);
    const Eigen::Index n = V.size();
    CMatd full(n, n);
    for (Eigen::Index k = 0; k < n; ++k) full.col(k) = V.beam(k);
    const CMatd gram = full * full.adjoint();
    const CMatd target = static_cast<double>(n) * CMatd::Identity(n, n);
    CHECK((gram - target).norm() < 1e-10 * static_cast<double>(n));
}

TEST_CASE("beam pair ordering is lexicographic with the irs index first") {
    CHECK(BeamPair{0, 5} < BeamPair{1, 0});
    CHECK(BeamPair{2, 1} < BeamPair{2, 3});
    CHECK(BeamPair{2, 3} == BeamPair{2, 3});
    CHECK_FALSE(BeamPair{3, 0} < BeamPair{2, 9});
}

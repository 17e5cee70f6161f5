// SPDX-License-Identifier: Apache-2.0
#include "tqu/boundary.hpp"

#include <doctest.h>

#include <cmath>

using namespace tqu;

namespace {
const PauliAxis kZ{0, 0, 1};
const PauliAxis kY{0, 1, 0};
const PauliAxis kTilted{0, std::sqrt(3.0) / 2.0, 0.5};

double measure_dist(const UncertaintyPoint& p, const UncertaintyPoint& q) {
    return std::max(std::abs(p.sd_a - q.sd_a), std::abs(p.sd_b - q.sd_b));
}
}  // namespace

TEST_CASE("great circle family") {
    ObservablePair pair(kZ, kY);
    auto fam = great_circle_family(pair, 1.0, 4);
    auto pts = fam.points();
    REQUIRE(pts.size() == 4);
    // theta = 0, pi/2, pi, 3pi/2 -> EV points (1,0), (0,1), (-1,0), (0,-1)
    CHECK(pts[0].exp_a == doctest::Approx(1.0));
    CHECK(pts[0].exp_b == doctest::Approx(0.0));
    CHECK(pts[1].exp_a == doctest::Approx(0.0));
    CHECK(pts[1].exp_b == doctest::Approx(1.0));
    CHECK(pts[2].exp_a == doctest::Approx(-1.0));
    CHECK(pts[3].exp_b == doctest::Approx(-1.0));

    SUBCASE("tilted configuration hits <B> = 1 at theta = pi/3") {
        ObservablePair tilted(kZ, kTilted);
        auto p = make_point(PreparationSetting{1.0, M_PI / 3.0, M_PI / 2.0}, tilted);
        CHECK(p.exp_a == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(p.exp_b == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("r = 0 collapses to the origin") {
        for (const auto& p : great_circle_family(pair, 0.0, 8).points()) {
            CHECK(p.exp_a == doctest::Approx(0.0));
            CHECK(p.exp_b == doctest::Approx(0.0));
        }
    }
    SUBCASE("all points saturate the mid bound in all three forms") {
        for (double r : {0.3, 0.83, 1.0}) {
            for (const auto& s : great_circle_family(pair, r, 64).settings) {
                const BlochVector n = state_from_setting(s);
                CHECK(std::abs(check_expectation_relation(n, pair).slack) <= 1e-9);
                CHECK(std::abs(check_stddev_relation(n, pair).slack) <= 1e-9);
                CHECK(std::abs(check_entropy_relation(n, pair).slack) <= 1e-9);
            }
        }
    }
    CHECK_THROWS_AS(great_circle_family(pair, 1.0, 1), ConfigError);
    CHECK_THROWS_AS(great_circle_family(pair, 1.5, 8), ConfigError);
}

TEST_CASE("equatorial arc family") {
    ObservablePair pair(kZ, kY);
    auto pts = equatorial_arc_family(pair, 1.0, 5).points();
    CHECK(pts.front().sd_a == doctest::Approx(1.0));
    CHECK(pts.front().sd_b == doctest::Approx(0.0));
    CHECK(pts.back().sd_a == doctest::Approx(1.0));
    CHECK(pts.back().sd_b == doctest::Approx(1.0));
    for (const auto& p : pts) CHECK(p.sd_a == doctest::Approx(1.0).epsilon(1e-12));

    auto pts99 = equatorial_arc_family(pair, 0.99, 3).points();
    CHECK(pts99.front().sd_b == doctest::Approx(std::sqrt(1.0 - 0.99 * 0.99)).epsilon(1e-12));
}

TEST_CASE("closing arc family") {
    ObservablePair pair(kZ, kY);
    auto pts = closing_arc_family(pair, 1.0, 5).points();
    CHECK(pts.front().sd_a == doctest::Approx(0.0));
    CHECK(pts.front().sd_b == doctest::Approx(1.0));
    CHECK(pts.back().sd_a == doctest::Approx(1.0));
    CHECK(pts.back().sd_b == doctest::Approx(1.0));
    for (const auto& p : pts) CHECK(p.sd_b == doctest::Approx(1.0).epsilon(1e-12));

    auto pts83 = closing_arc_family(pair, 0.83, 3).points();
    CHECK(pts83.front().sd_a == doctest::Approx(std::sqrt(1.0 - 0.83 * 0.83)).epsilon(1e-12));
}

TEST_CASE("perpendicular circle family") {
    ObservablePair tilted(kZ, kTilted);
    auto fam = perpendicular_circle_family(tilted, 1.0, 9);

    for (const auto& s : fam.settings) {
        const BlochVector n = state_from_setting(s);
        CHECK(std::abs(expectation(n, tilted.b())) < 1e-12);
    }
    auto pts = fam.points();
    // corner (Delta A, Delta B) = (1, 1) down to (1/2, 1)
    CHECK(pts.front().sd_a == doctest::Approx(1.0));
    CHECK(pts.front().sd_b == doctest::Approx(1.0));
    CHECK(pts.back().sd_a == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(pts.back().sd_b == doctest::Approx(1.0));

    SUBCASE("r = 0 collapses to the origin in EV") {
        for (const auto& p : perpendicular_circle_family(tilted, 0.0, 5).points()) {
            CHECK(p.exp_a == doctest::Approx(0.0));
            CHECK(p.exp_b == doctest::Approx(0.0));
        }
    }
    CHECK_THROWS_AS(perpendicular_circle_family(ObservablePair(kZ, kZ), 1.0, 5),
                    ConfigError);
}

TEST_CASE("family points pass all relations") {
    for (const ObservablePair& pair :
         {ObservablePair(kZ, kY), ObservablePair(kZ, kTilted)}) {
        for (double r : {0.83, 1.0}) {
            std::vector<BoundaryFamily> fams;
            fams.push_back(great_circle_family(pair, r, 40));
            fams.push_back(equatorial_arc_family(pair, r, 40));
            fams.push_back(closing_arc_family(pair, r, 40));
            fams.push_back(perpendicular_circle_family(pair, r, 40));
            for (const auto& fam : fams) {
                for (const auto& s : fam.settings) {
                    const BlochVector n = state_from_setting(s);
                    CHECK(check_expectation_relation(n, pair).satisfied);
                    CHECK(check_stddev_relation(n, pair).satisfied);
                    CHECK(check_entropy_relation(n, pair).satisfied);
                }
            }
        }
    }
}

TEST_CASE("boundary closure in the SD plane") {
    SUBCASE("orthogonal configuration: three arcs close the region") {
        ObservablePair pair(kZ, kY);
        auto circle = great_circle_family(pair, 1.0, 32).points();
        auto equatorial = equatorial_arc_family(pair, 1.0, 17).points();
        auto closing = closing_arc_family(pair, 1.0, 17).points();

        // circle passes through (0,1) at theta=0 and (1,0) at theta=pi/2;
        // equatorial runs (1,0) -> (1,1); closing runs (0,1) -> (1,1).
        CHECK(measure_dist(equatorial.front(), circle[8]) <= 1e-9);
        CHECK(measure_dist(closing.front(), circle[0]) <= 1e-9);
        CHECK(measure_dist(equatorial.back(), closing.back()) <= 1e-9);
    }
    SUBCASE("tilted configuration: perpendicular circle closes the region") {
        ObservablePair pair(kZ, kTilted);
        auto equatorial = equatorial_arc_family(pair, 1.0, 17).points();
        auto perp = perpendicular_circle_family(pair, 1.0, 17).points();
        auto start = make_point(PreparationSetting{1.0, -M_PI / 6.0, M_PI / 2.0}, pair);

        CHECK(measure_dist(equatorial.back(), perp.front()) <= 1e-9);
        CHECK(measure_dist(perp.back(), start) <= 1e-9);
    }
}

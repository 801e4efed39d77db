#include "catmap/orbit.hpp"
#include "catmap/dcm_builder.hpp"
#include "catmap/period.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace catmap;

TEST_CASE("lattice point validation") {
    CHECK_THROWS_AS(LatticePoint({3, 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(LatticePoint({0, 0}, 0), std::invalid_argument);
    CHECK_THROWS_AS(LatticePoint({}, 3), std::invalid_argument);
    CHECK_NOTHROW(LatticePoint({2, 2}, 3));
}

TEST_CASE("single map steps") {
    SECTION("the worked 3x3 example's first hop") {
        const LatticePoint q = step_point(LatticePoint({1, 1}, 3), cat_map_2d());
        CHECK(q == LatticePoint({2, 0}, 3));
    }
    SECTION("the origin is fixed in every dimension") {
        for (std::size_t dim = 2; dim <= 5; ++dim) {
            const LatticePoint origin(std::vector<Residue>(dim, 0), 7);
            CHECK(step_point(origin, build_dcm(dim)) == origin);
        }
    }
    SECTION("a 3-D step") {
        const LatticePoint q = step_point(LatticePoint({1, 2, 0}, 5), build_dcm(3));
        CHECK(q == LatticePoint({3, 3, 1}, 5));
    }
    SECTION("dimension mismatch is rejected") {
        CHECK_THROWS_AS(step_point(LatticePoint({1, 1}, 3), build_dcm(3)), std::invalid_argument);
    }
}

TEST_CASE("pixel orbits") {
    SECTION("the worked example's 4-cycle") {
        const OrbitRecord o = pixel_orbit(LatticePoint({1, 1}, 3), cat_map_2d());
        REQUIRE(o.length() == 4);
        CHECK(o.points[0] == LatticePoint({1, 1}, 3));
        CHECK(o.points[1] == LatticePoint({2, 0}, 3));
        CHECK(o.points[2] == LatticePoint({2, 2}, 3));
        CHECK(o.points[3] == LatticePoint({1, 0}, 3));
    }
    SECTION("fixed point orbit") {
        CHECK(pixel_orbit(LatticePoint({0, 0}, 7), cat_map_2d()).length() == 1);
    }
    SECTION("brute-forced length on a 5x5 grid") {
        CHECK(pixel_orbit(LatticePoint({1, 0}, 5), cat_map_2d()).length() == 10);
    }
    SECTION("orbit closes and visits distinct points") {
        const OrbitRecord o = pixel_orbit(LatticePoint({2, 3}, 11), cat_map_2d());
        CHECK(step_point(o.points.back(), cat_map_2d()) == o.points.front());
        for (std::size_t i = 0; i < o.points.size(); ++i)
            for (std::size_t j = i + 1; j < o.points.size(); ++j)
                CHECK_FALSE(o.points[i] == o.points[j]);
    }
    SECTION("every orbit length divides the period") {
        for (Residue n = 3; n <= 50; ++n) {
            const std::uint64_t m = dcm_period_2d(n).period;
            const DensityReport d = density_report(n, cat_map_2d());
            for (const auto& [len, count] : d.cycle_length_counts) CHECK(m % len == 0);
        }
    }
}

TEST_CASE("density report") {
    SECTION("the 3x3 grid splits into 1 + 4 + 4") {
        const DensityReport d = density_report(3, cat_map_2d());
        CHECK(d.cell_count == 9);
        CHECK(d.cycle_count == 3);
        CHECK(d.max_cycle_length == 4);
        CHECK(d.cycle_length_counts.at(1) == 1); // the fixed origin
        CHECK(d.cycle_length_counts.at(4) == 2);
        CHECK(d.half_bound_ok);
        CHECK(d.coverage_ratio() == Catch::Approx(4.0 / 9.0));
    }
    SECTION("cycles partition the grid and no cycle covers more than half") {
        for (Residue n = 3; n <= 100; ++n) {
            const DensityReport d = density_report(n, cat_map_2d());
            std::uint64_t total = 0;
            for (const auto& [len, count] : d.cycle_length_counts) total += len * count;
            CHECK(total == n * n);
            CHECK(2 * d.max_cycle_length <= n * n);
            CHECK(d.half_bound_ok);
        }
    }
    SECTION("max cycle on the 100x100 grid is within the theorem bound") {
        CHECK(density_report(100, cat_map_2d()).max_cycle_length <= 5000);
    }
    SECTION("3-D grids decompose too") {
        const DensityReport d = density_report(3, build_dcm(3));
        CHECK(d.cell_count == 27);
        std::uint64_t total = 0;
        for (const auto& [len, count] : d.cycle_length_counts) total += len * count;
        CHECK(total == 27);
        // every cycle length divides the 3-D period of N=3
        for (const auto& [len, count] : d.cycle_length_counts) CHECK(13 % len == 0);
    }
}

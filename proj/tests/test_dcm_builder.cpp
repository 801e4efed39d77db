#include "catmap/dcm_builder.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <string>

using namespace catmap;

TEST_CASE("frame descriptors are validated") {
    CHECK_THROWS_AS(FrameSpec(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(FrameSpec(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(FrameSpec(3, 4), std::invalid_argument);
    CHECK_NOTHROW(FrameSpec(3, 3));
}

TEST_CASE("matrix union inserts into the open slot") {
    SECTION("the 2-D map into a 3-frame fixing the first coordinate") {
        const BasisMap b = matrix_union(cat_map_2d(), FrameSpec(3, 1));
        CHECK(b.matrix == ExactMatrix({{1, 0, 0}, {0, 1, 1}, {0, 1, 2}}));
        CHECK(b.fixed_index == 1);
    }
    SECTION("the 3-D map into a 4-frame fixing the third coordinate") {
        const ExactMatrix a3{{1, 1, 1}, {2, 3, 2}, {3, 4, 4}};
        const BasisMap b = matrix_union(a3, FrameSpec(4, 3));
        CHECK(b.matrix == ExactMatrix({{1, 1, 0, 1}, {2, 3, 0, 2}, {0, 0, 1, 0}, {3, 4, 0, 4}}));
    }
    SECTION("a 1x1 insertion is forced by the definition") {
        ExactMatrix k(1);
        k(0, 0) = 7;
        CHECK(matrix_union(k, FrameSpec(2, 1)).matrix == ExactMatrix({{1, 0}, {0, 7}}));
    }
    SECTION("frame must extend the input by exactly one") {
        CHECK_THROWS_AS(matrix_union(cat_map_2d(), FrameSpec(4, 1)), std::invalid_argument);
    }
}

TEST_CASE("union basis lists all insertions in ascending order") {
    const std::vector<BasisMap> basis = union_basis(cat_map_2d());
    REQUIRE(basis.size() == 3);
    CHECK(basis[0].matrix == ExactMatrix({{1, 0, 0}, {0, 1, 1}, {0, 1, 2}}));
    CHECK(basis[1].matrix == ExactMatrix({{1, 0, 1}, {0, 1, 0}, {1, 0, 2}}));
    CHECK(basis[2].matrix == ExactMatrix({{1, 1, 0}, {1, 2, 0}, {0, 0, 1}}));
    for (std::size_t i = 0; i < basis.size(); ++i) CHECK(basis[i].fixed_index == i + 1);
}

TEST_CASE("union basis of the 3-D map matches the four published basis maps") {
    const ExactMatrix a3{{1, 1, 1}, {2, 3, 2}, {3, 4, 4}};
    const std::vector<BasisMap> basis = union_basis(a3);
    REQUIRE(basis.size() == 4);
    CHECK(basis[0].matrix ==
          ExactMatrix({{1, 0, 0, 0}, {0, 1, 1, 1}, {0, 2, 3, 2}, {0, 3, 4, 4}}));
    CHECK(basis[1].matrix ==
          ExactMatrix({{1, 0, 1, 1}, {0, 1, 0, 0}, {2, 0, 3, 2}, {3, 0, 4, 4}}));
    CHECK(basis[2].matrix ==
          ExactMatrix({{1, 1, 0, 1}, {2, 3, 0, 2}, {0, 0, 1, 0}, {3, 4, 0, 4}}));
    CHECK(basis[3].matrix ==
          ExactMatrix({{1, 1, 1, 0}, {2, 3, 2, 0}, {3, 4, 4, 0}, {0, 0, 0, 1}}));
}

TEST_CASE("every basis map fixes its unit vector") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t dim = 2 + trial % 4;
        ExactMatrix a(dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) a(i, j) = entry(rng);
        for (const BasisMap& b : union_basis(a)) {
            const std::size_t i = b.fixed_index - 1;
            for (std::size_t k = 0; k < b.matrix.dim(); ++k) {
                CHECK(b.matrix(i, k) == (k == i ? 1 : 0));
                CHECK(b.matrix(k, i) == (k == i ? 1 : 0));
            }
        }
    }
}

TEST_CASE("matrix union is injective on its matrix argument") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::set<std::string> inputs, outputs;
    for (int trial = 0; trial < 200; ++trial) {
        ExactMatrix a(2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) a(i, j) = entry(rng);
        inputs.insert(a.to_string());
        outputs.insert(matrix_union(a, FrameSpec(3, 2)).matrix.to_string());
    }
    CHECK(inputs.size() == outputs.size());
}

TEST_CASE("building the n-dimensional map") {
    CHECK(build_dcm(2) == cat_map_2d());
    CHECK(build_dcm(3) == ExactMatrix({{1, 1, 1}, {2, 3, 2}, {3, 4, 4}}));
    CHECK(build_dcm(4) == ExactMatrix({{17, 23, 18, 5},
                                       {110, 149, 117, 31},
                                       {257, 348, 274, 72},
                                       {432, 585, 460, 122}}));
    CHECK_THROWS_AS(build_dcm(1), std::invalid_argument);
    CHECK_THROWS_AS(build_dcm(0), std::invalid_argument);

    SECTION("4-D map is the ordered product of its basis maps") {
        const std::vector<BasisMap> basis = union_basis(build_dcm(3));
        CHECK(basis[0].matrix * basis[1].matrix * basis[2].matrix * basis[3].matrix ==
              build_dcm(4));
    }

    SECTION("every map is unimodular") {
        for (std::size_t n = 2; n <= 8; ++n) CHECK(build_dcm(n).det() == 1);
    }
}

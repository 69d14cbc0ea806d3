#include "doctest.h"

#include <algorithm>

#include "support.hpp"
#include "torstab/fan.hpp"

using namespace torstab;
using namespace torstab::testing;

TEST_CASE("validation sorts rays counterclockwise from the positive x axis") {
    Fan2D fan = validate_surface_fan({{0, -1}, {-1, 0}, {1, 0}, {0, 1}});
    std::vector<LatticeVector> expect = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    CHECK(fan.rays == expect);
    CHECK(fan.smooth);
    CHECK(fan.complete);
    CHECK(fan.singular_cones.empty());
}

TEST_CASE("validation rejects rank mismatches and degenerate input") {
    CHECK(fails_with(errc::rank_mismatch, [] { validate_surface_fan({{1, 0, 0}, {0, 1, 0}}); }));
    CHECK(fails_with(errc::zero_vector, [] { validate_surface_fan({{0, 0}, {1, 0}, {0, 1}}); }));
    CHECK(fails_with(errc::too_few_rays, [] { validate_surface_fan({{1, 0}, {-1, 0}}); }));
}

TEST_CASE("parallel rays are rejected, exact duplicates collapse") {
    CHECK(fails_with(errc::parallel_rays,
                     [] { validate_surface_fan({{1, 0}, {2, 0}, {0, 1}, {-1, -1}}); }));
    Fan2D fan = validate_surface_fan({{1, 0}, {1, 0}, {0, 1}, {-1, -1}});
    CHECK(fan.size() == 3);
}

TEST_CASE("completeness fails when a half plane is uncovered") {
    CHECK(fails_with(errc::not_complete,
                     [] { validate_surface_fan({{1, 0}, {0, 1}, {1, 1}}); }));
    CHECK(fails_with(errc::not_complete,
                     [] { validate_surface_fan({{1, 0}, {0, 1}, {-1, 0}}); }));
}

TEST_CASE("singular cones are flagged with their determinants") {
    Fan2D quot = fix_quot_p1p1();
    CHECK(!quot.smooth);
    CHECK(quot.complete);
    CHECK(quot.singular_cones == std::vector<std::size_t>{0, 1, 2, 3});
    for (std::size_t i = 0; i < 4; ++i) CHECK(quot.cone_det(i) == 3);

    Fan2D p2 = fix_p2();
    CHECK(p2.smooth);
    for (std::size_t i = 0; i < 3; ++i) CHECK(p2.cone_det(i) == 1);
}

TEST_CASE("blow_up inserts the sum of the cone generators") {
    Fan2D fan = blow_up(fix_p1xp1(), 0);
    std::vector<LatticeVector> expect = {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {0, -1}};
    CHECK(fan.rays == expect);
    CHECK(fan.smooth);

    CHECK(fails_with(errc::bad_index, [] { blow_up(fix_p1xp1(), 4); }));
    CHECK(fails_with(errc::singular_cone, [] { blow_up(fix_quot_p1p1(), 0); }));
}

TEST_CASE("neighbors walk the cyclic order") {
    Fan2D compass = fix_compass();
    auto idx = find_ray(compass, LatticeVector{-1, 0});
    REQUIRE(idx.has_value());
    auto [prev, next] = neighbors(compass, *idx);
    CHECK(prev == LatticeVector{-1, 1});
    CHECK(next == LatticeVector{-1, -1});

    auto first = neighbors(compass, 0);
    CHECK(first.first == LatticeVector{1, -1});
    CHECK(first.second == LatticeVector{1, 1});
}

TEST_CASE("find_ray") {
    Fan2D compass = fix_compass();
    CHECK(find_ray(compass, LatticeVector{0, -1}).has_value());
    CHECK(!find_ray(compass, LatticeVector{2, 1}).has_value());
}

TEST_CASE("angle order is the counterclockwise order") {
    std::vector<LatticeVector> compass = {{1, 0},  {1, 1},   {0, 1},  {-1, 1},
                                          {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
    for (std::size_t i = 0; i + 1 < compass.size(); ++i) {
        CHECK(angle_less(compass[i], compass[i + 1]));
        CHECK(!angle_less(compass[i + 1], compass[i]));
    }
    CHECK(angle_less(LatticeVector{2, 1}, LatticeVector{1, 1}));
    CHECK(angle_less(LatticeVector{1, 2}, LatticeVector{0, 1}));
}

TEST_CASE("general fans validate their combinatorics") {
    GeneralFan p2 = make_general_fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(p2.rays.size() == 3);
    CHECK(p2.max_cones.size() == 3);

    CHECK(fails_with(errc::bad_parameter, [] { // non-primitive ray
        make_general_fan(2, {{2, 0}, {0, 1}}, {{0, 1}});
    }));
    CHECK(fails_with(errc::parallel_rays, [] { // duplicate ray
        make_general_fan(2, {{1, 0}, {1, 0}}, {{0, 1}});
    }));
    CHECK(fails_with(errc::bad_index, [] { // repeated index in a cone
        make_general_fan(2, {{1, 0}, {0, 1}}, {{0, 0}});
    }));
    CHECK(fails_with(errc::bad_parameter, [] { // dependent generators
        make_general_fan(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}, {{0, 1, 2}});
    }));
    CHECK(fails_with(errc::bad_parameter, [] { // unused ray
        make_general_fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}});
    }));
}

TEST_CASE("to_general produces the adjacent cone pairs") {
    GeneralFan g = to_general(fix_p1xp1());
    CHECK(g.rank == 2);
    REQUIRE(g.max_cones.size() == 4);
    CHECK(g.max_cones[0] == std::vector<std::size_t>{0, 1});
    CHECK(g.max_cones[3] == std::vector<std::size_t>{0, 3});
}

TEST_CASE("random smooth fans are smooth and complete") {
    Rng rng(31);
    for (int t = 0; t < 60; ++t) {
        Fan2D fan = random_smooth_fan(rng);
        CHECK(fan.smooth);
        CHECK(fan.complete);
        for (std::size_t i = 0; i < fan.size(); ++i) CHECK(fan.cone_det(i) == 1);
    }
}

TEST_CASE("basis change is an invariance of validated fans") {
    Rng rng(32);
    for (int t = 0; t < 40; ++t) {
        Fan2D fan = random_smooth_fan(rng);
        IntMatrix M = random_unimodular(rng);
        Fan2D image = apply_basis_change(M, fan);
        CHECK(image.smooth == fan.smooth);
        CHECK(image.complete);
        CHECK(image.size() == fan.size());

        std::vector<LatticeVector> expect;
        for (const LatticeVector& v : fan.rays) expect.push_back(change_of_basis(M, v));
        std::sort(expect.begin(), expect.end());
        CHECK(sorted_rays(image) == expect);
    }
}

TEST_CASE("random singular fans really are singular") {
    Rng rng(33);
    for (int t = 0; t < 20; ++t) {
        Fan2D fan = random_singular_fan(rng);
        CHECK(fan.complete);
        CHECK(!fan.smooth);
        CHECK(!fan.singular_cones.empty());
    }
}

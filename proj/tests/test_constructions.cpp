#include "doctest.h"

#include <algorithm>

#include "support.hpp"
#include "torstab/constructions.hpp"

using namespace torstab;
using namespace torstab::testing;

namespace {

// Blows down iteratively: removes any ray equal to the sum of its
// neighbors, which undoes a blow up, until none is left.
std::pair<Fan2D, std::size_t> blow_down_all(Fan2D fan) {
    std::size_t removed = 0;
    for (bool progress = true; progress;) {
        progress = false;
        for (std::size_t i = 0; i < fan.size(); ++i) {
            auto [prev, next] = neighbors(fan, i);
            if (add(prev, next) == fan.rays[i]) {
                std::vector<LatticeVector> rays = fan.rays;
                rays.erase(rays.begin() + static_cast<long>(i));
                fan = validate_surface_fan(rays);
                ++removed;
                progress = true;
                break;
            }
        }
    }
    return {fan, removed};
}

} // namespace

TEST_CASE("standard fans match their fixtures") {
    CHECK(standard_fan({StandardFanSpec::Kind::ProjectivePlane, 0}).rays == fix_p2().rays);
    CHECK(standard_fan({StandardFanSpec::Kind::P1xP1, 0}).rays == fix_p1xp1().rays);
    for (long a = 1; a <= 4; ++a)
        CHECK(standard_fan({StandardFanSpec::Kind::Hirzebruch, a}).rays ==
              fix_hirzebruch(a).rays);
    CHECK(fails_with(errc::bad_parameter,
                     [] { standard_fan({StandardFanSpec::Kind::Hirzebruch, 0}); }));
}

TEST_CASE("quotient fans match their fixtures") {
    QuotientSpec diag;
    diag.kind = QuotientSpec::Kind::DiagonalP1xP1;
    diag.q = 3;
    CHECK(quotient_fan(diag).rays == fix_quot_p1p1().rays);

    QuotientSpec hirz;
    hirz.kind = QuotientSpec::Kind::HirzebruchQuotient;
    hirz.a = 2;
    hirz.p = 3;
    CHECK(quotient_fan(hirz).rays == fix_quot_f2().rays);

    diag.q = 1;
    CHECK(fails_with(errc::bad_parameter, [&] { quotient_fan(diag); }));
    hirz.p = 1;
    CHECK(fails_with(errc::bad_parameter, [&] { quotient_fan(hirz); }));
    hirz.p = 3;
    hirz.a = 0;
    CHECK(fails_with(errc::bad_parameter, [&] { quotient_fan(hirz); }));
}

TEST_CASE("resolution of the diagonal quotient") {
    QuotientSpec diag;
    diag.kind = QuotientSpec::Kind::DiagonalP1xP1;
    diag.q = 3;
    Fan2D resolved = hj_resolve(quotient_fan(diag));
    CHECK(resolved.rays == fix_quot_p1p1_res().rays);
    CHECK(resolved.smooth);
}

TEST_CASE("resolution of the Hirzebruch quotient") {
    QuotientSpec hirz;
    hirz.kind = QuotientSpec::Kind::HirzebruchQuotient;
    hirz.a = 2;
    hirz.p = 3;
    Fan2D resolved = hj_resolve(quotient_fan(hirz));
    CHECK(resolved.rays == fix_xhat().rays);
    CHECK(resolved.smooth);
}

TEST_CASE("resolving a smooth fan changes nothing") {
    CHECK(hj_resolve(fix_compass()).rays == fix_compass().rays);
    CHECK(hj_resolve(fix_p2()).rays == fix_p2().rays);
}

TEST_CASE("resolution is idempotent, refining and minimal") {
    Rng rng(71);
    for (int t = 0; t < 25; ++t) {
        Fan2D fan = random_singular_fan(rng);
        Fan2D res = hj_resolve(fan);
        CHECK(res.smooth);
        CHECK(res.complete);
        CHECK(hj_resolve(res).rays == res.rays);

        // Refinement: every original ray survives.
        for (const LatticeVector& v : fan.rays) CHECK(find_ray(res, v).has_value());

        // Minimality: removing any inserted ray breaks smoothness.
        for (const LatticeVector& v : res.rays) {
            if (find_ray(fan, v)) continue;
            std::vector<LatticeVector> fewer;
            for (const LatticeVector& w : res.rays)
                if (!(w == v)) fewer.push_back(w);
            bool still_smooth = false;
            try {
                still_smooth = validate_surface_fan(fewer).smooth;
            } catch (const TorstabError&) {
            }
            CHECK(!still_smooth);
        }
    }
}

TEST_CASE("resolution commutes with changes of basis") {
    Rng rng(72);
    for (int t = 0; t < 15; ++t) {
        Fan2D fan = random_singular_fan(rng);
        IntMatrix M = random_unimodular(rng);
        Fan2D a = hj_resolve(apply_basis_change(M, fan));
        Fan2D b = apply_basis_change(M, hj_resolve(fan));
        CHECK(a.rays == b.rays);
    }
}

TEST_CASE("the fixtures arise from explicit blow up chains") {
    // Blowing up the four cones of the product fan, in descending order so
    // the indices keep addressing the original cones, gives the compass.
    Fan2D fan = fix_p1xp1();
    for (std::size_t i : {3, 2, 1, 0}) fan = blow_up(fan, i);
    CHECK(fan.rays == fix_compass().rays);
}

TEST_CASE("iterated blow down reaches a minimal model") {
    // The contraction order is greedy, so the endpoint need not be the
    // model the fixture was built from, but it is always minimal: three
    // or four rays, smooth and complete.
    for (const Fan2D& start : {fix_compass(), fix_quot_p1p1_res(), fix_xhat2(), fix_xhat()}) {
        auto [down, removed] = blow_down_all(start);
        CHECK(down.size() <= 4);
        CHECK(down.size() + removed == start.size());
        CHECK(down.smooth);
        CHECK(down.complete);
    }
}

TEST_CASE("the twice blown up resolution matches its fixture") {
    CHECK(xhat2_fan(2, 3).rays == fix_xhat2().rays);
    CHECK(fails_with(errc::bad_parameter, [] { xhat2_fan(1, 3); }));
    CHECK(fails_with(errc::bad_parameter, [] { xhat2_fan(2, 2); }));
}

TEST_CASE("resolutions insert rays in every singular cone") {
    Rng rng(73);
    for (int t = 0; t < 15; ++t) {
        Fan2D fan = random_singular_fan(rng);
        Fan2D res = hj_resolve(fan);
        for (std::size_t i : fan.singular_cones) {
            // Some inserted ray lies strictly between the cone generators.
            const LatticeVector& u = fan.rays[i];
            const LatticeVector& v = fan.rays[(i + 1) % fan.size()];
            bool inserted_inside = false;
            for (const LatticeVector& w : res.rays) {
                if (find_ray(fan, w)) continue;
                if (det2(u, w) > 0 && det2(w, v) > 0) inserted_inside = true;
            }
            CHECK(inserted_inside);
        }
    }
}

#include "torstab/constructions.hpp"

#include <algorithm>
#include <map>

namespace torstab {

namespace {

Int content2(const LatticeVector& v) {
    Int g;
    mpz_gcd(g.get_mpz_t(), v.c[0].get_mpz_t(), v.c[1].get_mpz_t());
    return g;
}

// Lattice points of the compact hull boundary of cone (u, v), endpoints
// included, walking from u to v. det(u, v) must be positive.
std::vector<LatticeVector> hull_chain(const LatticeVector& u, const LatticeVector& v) {
    Int d = det2(u, v);

    // Hull vertices lie in the closed parallelogram spanned by u and v; any
    // point further out exceeds a nearer one by a cone lattice vector.
    LatticeVector uv = add(u, v);
    Int xmin = std::min({Int(0), u.c[0], v.c[0], uv.c[0]});
    Int xmax = std::max({Int(0), u.c[0], v.c[0], uv.c[0]});
    Int ymin = std::min({Int(0), u.c[1], v.c[1], uv.c[1]});
    Int ymax = std::max({Int(0), u.c[1], v.c[1], uv.c[1]});

    std::vector<LatticeVector> candidates;
    for (Int x = xmin; x <= xmax; ++x)
        for (Int y = ymin; y <= ymax; ++y) {
            LatticeVector w(std::vector<Int>{x, y});
            if (w.is_zero()) continue;
            Int alpha_num = det2(w, v);
            Int beta_num = det2(u, w);
            if (alpha_num < 0 || alpha_num > d || beta_num < 0 || beta_num > d) continue;
            // Only the nearest point of each direction can sit on the hull
            // boundary, and that is the primitive one.
            LatticeVector prim = primitive(w);
            if (std::find(candidates.begin(), candidates.end(), prim) == candidates.end())
                candidates.push_back(std::move(prim));
        }

    // The cone is strictly convex, so the pairwise cross product orders the
    // directions from u around to v.
    std::sort(candidates.begin(), candidates.end(),
              [](const LatticeVector& a, const LatticeVector& b) { return det2(a, b) > 0; });
    if (candidates.front() != u || candidates.back() != v)
        fail(errc::internal, "hull candidates not bracketed by the cone rays");

    // Convex chain nearest the origin: drop every point that fails to make a
    // strict clockwise turn.
    std::vector<LatticeVector> chain;
    for (const LatticeVector& w : candidates) {
        while (chain.size() >= 2) {
            LatticeVector ab = sub(chain.back(), chain[chain.size() - 2]);
            LatticeVector bc = sub(w, chain.back());
            if (det2(ab, bc) >= 0)
                chain.pop_back();
            else
                break;
        }
        chain.push_back(w);
    }

    // Expand chain edges into their lattice points.
    std::vector<LatticeVector> points;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        LatticeVector diff = sub(chain[k + 1], chain[k]);
        Int m = content2(diff);
        LatticeVector step = primitive(diff);
        points.push_back(chain[k]);
        for (Int j = 1; j < m; ++j) points.push_back(add(chain[k], scale(j, step)));
    }
    points.push_back(chain.back());
    return points;
}

Fan2D blow_up_at_cone(const Fan2D& fan, const LatticeVector& first, const LatticeVector& second) {
    std::optional<std::size_t> i = find_ray(fan, first);
    if (!i || fan.rays[(*i + 1) % fan.size()] != second)
        fail(errc::bad_index,
             "no cone spanned by " + coords_label(first.c) + ", " + coords_label(second.c));
    return blow_up(fan, *i);
}

} // namespace

Fan2D standard_fan(const StandardFanSpec& spec) {
    switch (spec.kind) {
        case StandardFanSpec::Kind::ProjectivePlane:
            return validate_surface_fan({{1, 0}, {0, 1}, {-1, -1}});
        case StandardFanSpec::Kind::P1xP1:
            return validate_surface_fan({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
        case StandardFanSpec::Kind::Hirzebruch: {
            if (spec.a < 1)
                fail(errc::bad_parameter, "Hirzebruch degree must be >= 1, got " +
                                              std::to_string(spec.a));
            LatticeVector last(std::vector<Int>{-1, -spec.a});
            return validate_surface_fan({{1, 0}, {0, 1}, {0, -1}, last});
        }
    }
    fail(errc::bad_parameter, "unknown standard fan kind");
}

Fan2D quotient_fan(const QuotientSpec& spec) {
    switch (spec.kind) {
        case QuotientSpec::Kind::DiagonalP1xP1: {
            if (spec.q < 2)
                fail(errc::bad_parameter,
                     "diagonal quotient order must be >= 2, got " + std::to_string(spec.q));
            LatticeVector up(std::vector<Int>{1, spec.q});
            LatticeVector down(std::vector<Int>{-1, -spec.q});
            return validate_surface_fan({{1, 0}, up, {-1, 0}, down});
        }
        case QuotientSpec::Kind::HirzebruchQuotient: {
            if (spec.a < 1)
                fail(errc::bad_parameter, "Hirzebruch degree must be >= 1, got " +
                                              std::to_string(spec.a));
            if (spec.p < 2)
                fail(errc::bad_parameter,
                     "quotient order must be >= 2, got " + std::to_string(spec.p));
            LatticeVector fiber(std::vector<Int>{spec.p, -1});
            LatticeVector last = primitive(LatticeVector(std::vector<Int>{-spec.p, 1 - spec.a}));
            return validate_surface_fan({{0, 1}, fiber, {0, -1}, last});
        }
    }
    fail(errc::bad_parameter, "unknown quotient kind");
}

Fan2D hj_resolve(const Fan2D& fan) {
    if (fan.smooth) return fan;

    std::vector<LatticeVector> rays = fan.rays;
    for (std::size_t i : fan.singular_cones) {
        std::vector<LatticeVector> chain =
            hull_chain(fan.rays[i], fan.rays[(i + 1) % fan.size()]);
        for (std::size_t k = 1; k + 1 < chain.size(); ++k) rays.push_back(chain[k]);
    }
    Fan2D out = validate_surface_fan(rays);
    if (!out.smooth) fail(errc::internal, "resolution left a singular cone");
    return out;
}

Fan2D xhat2_fan(long a, long p) {
    if (a != 2 || p != 3)
        fail(errc::bad_parameter, "only the (2, 3) instance is wired up, got (" +
                                      std::to_string(a) + ", " + std::to_string(p) + ")");
    Fan2D fan = hj_resolve(quotient_fan(QuotientSpec{QuotientSpec::Kind::HirzebruchQuotient,
                                                     0, a, p}));
    fan = blow_up_at_cone(fan, LatticeVector{1, 0}, LatticeVector{0, 1});
    fan = blow_up_at_cone(fan, LatticeVector{0, 1}, LatticeVector{-1, 0});
    return fan;
}

} // namespace torstab

#include "torstab/roots.hpp"

#include <algorithm>
#include <optional>

namespace torstab {

RootSystem root_system(const Fan2D& fan) {
    if (!fan.complete) fail(errc::not_complete, "root enumeration needs a complete fan");

    RootSystem rs;
    for (std::size_t i = 0; i < fan.size(); ++i) {
        const LatticeVector& rho = fan.rays[i];
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), rho.c[0].get_mpz_t(),
                   rho.c[1].get_mpz_t());
        if (g != 1) fail(errc::internal, "non-primitive ray in a validated fan");
        DualVector base(std::vector<Int>{s, t}); // <base, rho> = 1
        DualVector dir(std::vector<Int>{rho.c[1], -rho.c[0]}); // <dir, rho> = 0

        std::optional<Int> lo, hi;
        bool infeasible = false;
        for (std::size_t j = 0; j < fan.size() && !infeasible; ++j) {
            if (j == i) continue;
            Int k = pairing(base, fan.rays[j]);
            Int c = pairing(dir, fan.rays[j]);
            Int rhs = -k; // want c * step <= rhs
            if (c == 0) {
                // Antiparallel ray: constant constraint <base, -rho> = -1.
                if (k > 0) infeasible = true;
                continue;
            }
            Int b;
            if (c > 0) {
                mpz_fdiv_q(b.get_mpz_t(), rhs.get_mpz_t(), c.get_mpz_t());
                hi = hi ? std::min(*hi, b) : b;
            } else {
                mpz_cdiv_q(b.get_mpz_t(), rhs.get_mpz_t(), c.get_mpz_t());
                lo = lo ? std::max(*lo, b) : b;
            }
        }
        if (infeasible) continue;
        if (!lo || !hi) fail(errc::internal, "unbounded root segment on a complete fan");

        for (Int step = *lo; step <= *hi; ++step) {
            DualVector alpha = add(base, scale(step, dir));
            if (pairing(alpha, rho) != 1)
                fail(errc::internal, "root segment left its defining line");
            for (std::size_t j = 0; j < fan.size(); ++j)
                if (j != i && pairing(alpha, fan.rays[j]) > 0)
                    fail(errc::internal, "root segment produced a non-root");
            rs.roots.push_back(Root{alpha, i});
        }
    }

    std::sort(rs.roots.begin(), rs.roots.end(),
              [](const Root& a, const Root& b) { return a.alpha < b.alpha; });
    for (std::size_t i = 0; i < rs.roots.size(); ++i)
        for (std::size_t j = i + 1; j < rs.roots.size(); ++j)
            if (rs.roots[j].alpha == negate(rs.roots[i].alpha)) rs.semisimple_pairs.emplace_back(i, j);
    return rs;
}

bool is_reductive_part_torus(const RootSystem& rs) { return rs.semisimple_pairs.empty(); }

bool blowup_criterion(long a, const std::vector<LatticeVector>& blowup_rays) {
    if (a < 0) fail(errc::bad_parameter, "negative surface parameter");
    if (blowup_rays.size() < 2) fail(errc::too_few_blowups, "criterion needs at least 2 blow-up rays");
    for (const LatticeVector& v : blowup_rays)
        if (v.rank() != 2) fail(errc::rank_mismatch, "blow-up rays must have rank 2");

    if (a >= 1) {
        bool pos = false, neg = false;
        for (const LatticeVector& v : blowup_rays) {
            if (v.c[0] > 0) pos = true;
            if (v.c[0] < 0) neg = true;
        }
        return pos && neg;
    }
    for (std::size_t i = 0; i < blowup_rays.size(); ++i)
        for (std::size_t j = i + 1; j < blowup_rays.size(); ++j)
            if (blowup_rays[j] == negate(blowup_rays[i])) return true;
    return false;
}

bool root_restriction_check(const Fan2D& fan, const Fan2D& blown_up) {
    std::vector<LatticeVector> inserted;
    for (const LatticeVector& v : blown_up.rays)
        if (!find_ray(fan, v)) inserted.push_back(v);
    for (const LatticeVector& v : fan.rays)
        if (!find_ray(blown_up, v))
            fail(errc::not_a_refinement,
                 "refined fan is missing ray " + coords_label(v.c));

    std::vector<DualVector> restricted;
    for (const Root& r : root_system(fan).roots) {
        bool keep = std::all_of(inserted.begin(), inserted.end(), [&](const LatticeVector& v) {
            return pairing(r.alpha, v) <= 0;
        });
        if (keep) restricted.push_back(r.alpha);
    }

    std::vector<DualVector> direct;
    for (const Root& r : root_system(blown_up).roots) direct.push_back(r.alpha);
    return restricted == direct;
}

} // namespace torstab

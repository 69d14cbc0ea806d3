#include "torstab/linear.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace torstab {

namespace {

// a . x >= b over the not-yet-eliminated variables.
struct Ineq {
    std::vector<Rat> a;
    Rat b;
};

// Scale so entries are coprime integers; canonical form for deduplication.
void normalize(Ineq& q) {
    Int l = 1;
    for (const Rat& x : q.a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.b.get_den().get_mpz_t());
    Int g = 0;
    for (Rat& x : q.a) {
        x *= l;
        x.canonicalize();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
    }
    q.b *= l;
    q.b.canonicalize();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.b.get_num().get_mpz_t());
    if (g > 1) {
        for (Rat& x : q.a) { x /= g; x.canonicalize(); }
        q.b /= g;
        q.b.canonicalize();
    }
}

bool all_zero_coeffs(const Ineq& q) {
    for (const Rat& x : q.a)
        if (x != 0) return false;
    return true;
}

std::vector<Ineq> dedup(std::vector<Ineq> v) {
    std::sort(v.begin(), v.end(), [](const Ineq& l, const Ineq& r) {
        if (l.a != r.a) return l.a < r.a;
        return l.b < r.b;
    });
    v.erase(std::unique(v.begin(), v.end(),
                        [](const Ineq& l, const Ineq& r) { return l.a == r.a && l.b == r.b; }),
            v.end());
    return v;
}

} // namespace

std::optional<std::vector<Rat>> solve_rational(std::size_t nvars,
                                               const std::vector<LinearConstraint>& constraints) {
    for (const LinearConstraint& c : constraints)
        if (c.a.size() != nvars) fail(errc::rank_mismatch, "constraint arity");

    // Substitution record: x_var = expr . x + cst, applied in reverse at the end.
    struct Subst {
        std::size_t var;
        std::vector<Rat> expr;
        Rat cst;
    };
    std::vector<Subst> substs;
    std::vector<LinearConstraint> eqs, raw_ineqs;
    for (const LinearConstraint& c : constraints) (c.eq ? eqs : raw_ineqs).push_back(c);

    std::vector<bool> eliminated(nvars, false);

    // Gaussian elimination of equalities.
    while (!eqs.empty()) {
        LinearConstraint e = eqs.back();
        eqs.pop_back();
        std::size_t pivot = nvars;
        for (std::size_t j = 0; j < nvars; ++j)
            if (!eliminated[j] && e.a[j] != 0) { pivot = j; break; }
        if (pivot == nvars) {
            if (e.b != 0) return std::nullopt; // 0 = b, infeasible
            continue;
        }
        Rat ap = e.a[pivot];
        Subst s;
        s.var = pivot;
        s.expr.assign(nvars, Rat(0));
        for (std::size_t j = 0; j < nvars; ++j) {
            if (j == pivot) continue;
            s.expr[j] = -e.a[j] / ap;
            s.expr[j].canonicalize();
        }
        s.cst = e.b / ap;
        s.cst.canonicalize();
        eliminated[pivot] = true;
        auto apply = [&](LinearConstraint& c) {
            Rat k = c.a[pivot];
            if (k == 0) return;
            c.a[pivot] = 0;
            for (std::size_t j = 0; j < nvars; ++j) c.a[j] += k * s.expr[j];
            c.b -= k * s.cst;
        };
        for (LinearConstraint& c : eqs) apply(c);
        for (LinearConstraint& c : raw_ineqs) apply(c);
        substs.push_back(std::move(s));
    }

    std::vector<Ineq> sys;
    for (const LinearConstraint& c : raw_ineqs) {
        Ineq q{c.a, c.b};
        normalize(q);
        sys.push_back(std::move(q));
    }
    sys = dedup(std::move(sys));

    std::vector<std::size_t> free_vars;
    for (std::size_t j = 0; j < nvars; ++j)
        if (!eliminated[j]) free_vars.push_back(j);

    // Fourier-Motzkin: at each level remember the system before eliminating
    // that variable, for back-substitution.
    struct Level {
        std::size_t var;
        std::vector<Ineq> sys;
    };
    std::vector<Level> levels;

    std::vector<std::size_t> order = free_vars;
    while (!order.empty()) {
        // Eliminate the variable minimizing produced pair count.
        std::size_t best = 0;
        std::size_t best_cost = SIZE_MAX;
        for (std::size_t k = 0; k < order.size(); ++k) {
            std::size_t lo = 0, hi = 0;
            for (const Ineq& q : sys) {
                if (q.a[order[k]] > 0) ++lo;
                else if (q.a[order[k]] < 0) ++hi;
            }
            std::size_t cost = lo * hi;
            if (cost < best_cost) { best_cost = cost; best = k; }
        }
        std::size_t var = order[best];
        order.erase(order.begin() + best);

        levels.push_back({var, sys});
        std::vector<Ineq> next;
        std::vector<const Ineq*> lowers, uppers;
        for (const Ineq& q : sys) {
            if (q.a[var] > 0) lowers.push_back(&q);       // x >= (b - rest)/a
            else if (q.a[var] < 0) uppers.push_back(&q);  // x <= ...
            else next.push_back(q);
        }
        for (const Ineq* lo : lowers) {
            for (const Ineq* up : uppers) {
                // lo: a x + r1 >= b1 (a > 0); up: c x + r2 >= b2 (c < 0).
                // (-c) * lo + a * up cancels x.
                Rat a = lo->a[var], c = up->a[var];
                Ineq q;
                q.a.assign(nvars, Rat(0));
                for (std::size_t j = 0; j < nvars; ++j) {
                    q.a[j] = (-c) * lo->a[j] + a * up->a[j];
                    q.a[j].canonicalize();
                }
                q.b = (-c) * lo->b + a * up->b;
                q.b.canonicalize();
                if (all_zero_coeffs(q)) {
                    if (q.b > 0) return std::nullopt;
                    continue;
                }
                normalize(q);
                next.push_back(std::move(q));
            }
        }
        sys = dedup(std::move(next));
        for (const Ineq& q : sys)
            if (all_zero_coeffs(q) && q.b > 0) return std::nullopt;
        std::erase_if(sys, all_zero_coeffs);
    }

    for (const Ineq& q : sys)
        if (q.b > 0) return std::nullopt; // leftover constant constraint 0 >= b

    // Back-substitution. Value rule: greatest lower bound if any, else least
    // upper bound, else 0.
    std::vector<Rat> x(nvars, Rat(0));
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
        bool has_lo = false, has_hi = false;
        Rat lo, hi;
        for (const Ineq& q : it->sys) {
            const Rat& coef = q.a[it->var];
            if (coef == 0) continue;
            Rat rest = q.b;
            for (std::size_t j = 0; j < q.a.size(); ++j)
                if (j != it->var) rest -= q.a[j] * x[j];
            Rat bound = rest / coef;
            bound.canonicalize();
            if (coef > 0) {
                if (!has_lo || bound > lo) { lo = bound; has_lo = true; }
            } else {
                if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
            }
        }
        if (has_lo && has_hi && lo > hi) fail(errc::internal, "empty interval in back-substitution");
        x[it->var] = has_lo ? lo : (has_hi ? hi : Rat(0));
    }
    for (auto it = substs.rbegin(); it != substs.rend(); ++it) {
        Rat v = it->cst;
        for (std::size_t j = 0; j < nvars; ++j) v += it->expr[j] * x[j];
        v.canonicalize();
        x[it->var] = v;
    }
    return x;
}

namespace {

void check_family(const std::vector<DualVector>& family) {
    if (family.empty()) fail(errc::empty_family, "family of dual vectors is empty");
    std::size_t n = family[0].rank();
    for (const DualVector& r : family)
        if (r.rank() != n) fail(errc::rank_mismatch, "mixed ranks in family");
}

// Scale a rational vector to integers by the lcm of denominators, then divide
// by the gcd. Positive entries stay positive integers >= 1.
std::vector<Int> scale_to_int(const std::vector<Rat>& v) {
    Int l = 1;
    for (const Rat& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<Int> out;
    Int g = 0;
    for (const Rat& x : v) {
        Rat y = x * l;
        y.canonicalize();
        out.push_back(y.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    if (g > 1)
        for (Int& z : out) z /= g;
    return out;
}

// Equality constraints sum_i a_i * family[sub[i]] = target, one per coordinate.
void push_combination_equalities(std::vector<LinearConstraint>& cons,
                                 const std::vector<DualVector>& family,
                                 const std::vector<std::size_t>& sub,
                                 const std::vector<Rat>& target) {
    std::size_t n = family[0].rank();
    for (std::size_t coord = 0; coord < n; ++coord) {
        LinearConstraint c;
        c.a.assign(sub.size(), Rat(0));
        for (std::size_t i = 0; i < sub.size(); ++i) c.a[i] = Rat(family[sub[i]].c[coord]);
        c.b = target[coord];
        c.eq = true;
        cons.push_back(std::move(c));
    }
}

std::vector<std::size_t> full_index_set(std::size_t s) {
    std::vector<std::size_t> v(s);
    for (std::size_t i = 0; i < s; ++i) v[i] = i;
    return v;
}

} // namespace

std::optional<PositiveRelation> positive_kernel_vector(const std::vector<DualVector>& family) {
    check_family(family);
    std::size_t s = family.size();
    std::size_t n = family[0].rank();
    std::vector<LinearConstraint> cons;
    for (std::size_t i = 0; i < s; ++i) {
        LinearConstraint c;
        c.a.assign(s, Rat(0));
        c.a[i] = 1;
        c.b = 1;
        cons.push_back(std::move(c));
    }
    push_combination_equalities(cons, family, full_index_set(s), std::vector<Rat>(n, Rat(0)));
    auto sol = solve_rational(s, cons);
    if (!sol) return std::nullopt;
    PositiveRelation rel{scale_to_int(*sol)};
    // Re-verify: the relation is exact or the solver is broken.
    for (std::size_t coord = 0; coord < n; ++coord) {
        Int acc = 0;
        for (std::size_t i = 0; i < s; ++i) acc += rel.coefficients[i] * family[i].c[coord];
        if (acc != 0) fail(errc::internal, "positive relation failed re-verification");
    }
    for (const Int& a : rel.coefficients)
        if (a < 1) fail(errc::internal, "positive relation has non-positive coefficient");
    return rel;
}

SubspaceCheck positive_span_is_subspace(const std::vector<DualVector>& family) {
    check_family(family);
    std::size_t s = family.size();
    std::size_t n = family[0].rank();

    SubspaceWitness witness;
    for (std::size_t i = 0; i < s; ++i) {
        // -R_i = sum_j c_j R_j with c_j >= 0?
        std::vector<LinearConstraint> cons;
        for (std::size_t j = 0; j < s; ++j) {
            LinearConstraint c;
            c.a.assign(s, Rat(0));
            c.a[j] = 1;
            c.b = 0;
            cons.push_back(std::move(c));
        }
        std::vector<Rat> target;
        for (std::size_t coord = 0; coord < n; ++coord) target.emplace_back(-family[i].c[coord]);
        push_combination_equalities(cons, family, full_index_set(s), target);
        auto sol = solve_rational(s, cons);
        if (!sol) {
            // Separating certificate: <R_j, p> >= 0 for all j, <R_i, p> >= 1.
            std::vector<LinearConstraint> sep;
            for (std::size_t j = 0; j < s; ++j) {
                LinearConstraint c;
                for (std::size_t coord = 0; coord < n; ++coord) c.a.emplace_back(family[j].c[coord]);
                c.b = (j == i) ? 1 : 0;
                sep.push_back(std::move(c));
            }
            auto p = solve_rational(n, sep);
            if (!p) fail(errc::internal, "Farkas alternative failed: no combination and no separator");
            LatticeVector pv{scale_to_int(*p)};
            for (std::size_t j = 0; j < s; ++j)
                if (pairing(family[j], pv) < 0)
                    fail(errc::internal, "separating vector failed re-verification");
            if (pairing(family[i], pv) <= 0)
                fail(errc::internal, "separating vector not strict at the failing index");
            return SubspaceCheck{false, ConeCertificate{std::nullopt, SeparatingVector{pv, i}}};
        }
        // Scale: k * (-R_i) = sum_j m_j R_j with integer m_j >= 0, k >= 1.
        Int k = 1;
        for (const Rat& x : *sol) mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), x.get_den().get_mpz_t());
        std::vector<Int> combo;
        for (const Rat& x : *sol) {
            Rat y = x * k;
            y.canonicalize();
            combo.push_back(y.get_num());
        }
        for (std::size_t coord = 0; coord < n; ++coord) {
            Int acc = k * family[i].c[coord];
            for (std::size_t j = 0; j < s; ++j) acc += combo[j] * family[j].c[coord];
            if (acc != 0) fail(errc::internal, "subspace witness failed re-verification");
        }
        witness.multiplier.push_back(k);
        witness.combo.push_back(std::move(combo));
    }
    return SubspaceCheck{true, ConeCertificate{std::move(witness), std::nullopt}};
}

std::optional<NonnegRelation> nonzero_nonneg_relation(const std::vector<DualVector>& family,
                                                      const std::vector<std::size_t>& sub) {
    check_family(family);
    for (std::size_t i : sub)
        if (i >= family.size()) fail(errc::bad_index, "subfamily index out of range");
    if (sub.empty()) return std::nullopt;
    std::size_t m = sub.size();
    std::size_t n = family[0].rank();
    std::vector<LinearConstraint> cons;
    for (std::size_t i = 0; i < m; ++i) {
        LinearConstraint c;
        c.a.assign(m, Rat(0));
        c.a[i] = 1;
        c.b = 0;
        cons.push_back(std::move(c));
    }
    LinearConstraint total;
    total.a.assign(m, Rat(1));
    total.b = 1;
    cons.push_back(std::move(total));
    push_combination_equalities(cons, family, sub, std::vector<Rat>(n, Rat(0)));
    auto sol = solve_rational(m, cons);
    if (!sol) return std::nullopt;
    std::vector<Int> scaled = scale_to_int(*sol);
    NonnegRelation rel;
    for (std::size_t i = 0; i < m; ++i) {
        if (scaled[i] == 0) continue;
        rel.support.push_back(sub[i]);
        rel.coefficients.push_back(scaled[i]);
    }
    for (std::size_t coord = 0; coord < n; ++coord) {
        Int acc = 0;
        for (std::size_t i = 0; i < rel.support.size(); ++i)
            acc += rel.coefficients[i] * family[rel.support[i]].c[coord];
        if (acc != 0) fail(errc::internal, "nonneg relation failed re-verification");
    }
    if (rel.support.empty()) fail(errc::internal, "nonneg relation with empty support");
    return rel;
}

std::optional<LatticeVector> all_positive_functional(const std::vector<DualVector>& family,
                                                     const std::vector<std::size_t>& sub) {
    check_family(family);
    if (sub.empty()) fail(errc::empty_index_set, "all_positive_functional needs indices");
    std::size_t n = family[0].rank();
    std::vector<LinearConstraint> cons;
    for (std::size_t i : sub) {
        if (i >= family.size()) fail(errc::bad_index, "subfamily index out of range");
        LinearConstraint c;
        for (std::size_t coord = 0; coord < n; ++coord) c.a.emplace_back(family[i].c[coord]);
        c.b = 1;
        cons.push_back(std::move(c));
    }
    auto sol = solve_rational(n, cons);
    if (!sol) return std::nullopt;
    LatticeVector p{scale_to_int(*sol)};
    for (std::size_t i : sub)
        if (pairing(family[i], p) < 1) fail(errc::internal, "positive functional failed re-verification");
    return p;
}

} // namespace torstab

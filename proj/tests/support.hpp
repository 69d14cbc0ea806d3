#pragma once

// Shared fixtures, randomized generators and brute-force oracles for the
// test suite. Fixture fans are built from raw ray lists on purpose, so they
// stay independent of the construction helpers they are used to check.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "torstab/errors.hpp"
#include "torstab/fan.hpp"
#include "torstab/lattice.hpp"
#include "torstab/roots.hpp"
#include "torstab/stability.hpp"
#include "torstab/weights.hpp"

namespace torstab::testing {

template <class F>
bool fails_with(errc expected, F&& f) {
    try {
        f();
    } catch (const TorstabError& e) {
        return e.code == expected;
    } catch (...) {
        return false;
    }
    return false;
}

inline Fan2D fix_p2() { return validate_surface_fan({{1, 0}, {0, 1}, {-1, -1}}); }

inline Fan2D fix_p1xp1() { return validate_surface_fan({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}); }

inline Fan2D fix_hirzebruch(long a) {
    return validate_surface_fan({{1, 0}, {0, 1}, {0, -1}, {-1, -a}});
}

// P1xP1 blown up in all four fixed points: the eight compass directions.
inline Fan2D fix_compass() {
    return validate_surface_fan(
        {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}});
}

// Minimal resolution of the order-3 diagonal quotient of P1xP1.
inline Fan2D fix_quot_p1p1_res() {
    return validate_surface_fan({{1, 0},
                                 {1, 1},
                                 {1, 2},
                                 {1, 3},
                                 {0, 1},
                                 {-1, 0},
                                 {-1, -1},
                                 {-1, -2},
                                 {-1, -3},
                                 {0, -1}});
}

// Order-3 diagonal quotient of P1xP1: four cones of determinant 3.
inline Fan2D fix_quot_p1p1() {
    return validate_surface_fan({{1, 0}, {1, 3}, {-1, 0}, {-1, -3}});
}

// Order-3 quotient of the degree-2 Hirzebruch surface.
inline Fan2D fix_quot_f2() {
    return validate_surface_fan({{0, 1}, {3, -1}, {0, -1}, {-3, -1}});
}

// Minimal resolution of fix_quot_f2.
inline Fan2D fix_xhat() {
    return validate_surface_fan({{1, 0},
                                 {0, 1},
                                 {-1, 0},
                                 {-3, -1},
                                 {-2, -1},
                                 {-1, -1},
                                 {0, -1},
                                 {1, -1},
                                 {2, -1},
                                 {3, -1}});
}

// fix_xhat blown up in the two cones adjacent to (0,1).
inline Fan2D fix_xhat2() {
    return validate_surface_fan({{1, 0},
                                 {1, 1},
                                 {0, 1},
                                 {-1, 1},
                                 {-1, 0},
                                 {-3, -1},
                                 {-2, -1},
                                 {-1, -1},
                                 {0, -1},
                                 {1, -1},
                                 {2, -1},
                                 {3, -1}});
}

using Rng = std::mt19937_64;

inline long pick(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Product of elementary shears and quarter turns; determinant is always 1.
inline IntMatrix random_unimodular(Rng& rng) {
    IntMatrix M{{{1, 0}, {0, 1}}};
    long steps = pick(rng, 3, 8);
    for (long s = 0; s < steps; ++s) {
        switch (pick(rng, 0, 2)) {
        case 0: { // row shear
            Int k(pick(rng, -3, 3));
            M.m[0][0] += k * M.m[1][0];
            M.m[0][1] += k * M.m[1][1];
            break;
        }
        case 1: { // column shear
            Int k(pick(rng, -3, 3));
            M.m[1][0] += k * M.m[0][0];
            M.m[1][1] += k * M.m[0][1];
            break;
        }
        default: { // quarter turn
            std::swap(M.m[0], M.m[1]);
            M.m[0][0] = -M.m[0][0];
            M.m[0][1] = -M.m[0][1];
            break;
        }
        }
    }
    return M;
}

// Random smooth complete fan: a standard base with a random blow-up chain.
inline Fan2D random_smooth_fan(Rng& rng, long max_blowups = 8) {
    Fan2D fan;
    switch (pick(rng, 0, 4)) {
    case 0: fan = fix_p2(); break;
    case 1: fan = fix_p1xp1(); break;
    default: fan = fix_hirzebruch(pick(rng, 1, 3)); break;
    }
    long blowups = pick(rng, 0, max_blowups);
    for (long b = 0; b < blowups; ++b)
        fan = blow_up(fan, static_cast<std::size_t>(pick(rng, 0, static_cast<long>(fan.size()) - 1)));
    return fan;
}

// Random complete fan with at least one singular cone, found by deleting
// rays from a smooth fan until a deletion survives validation non-smooth.
inline Fan2D random_singular_fan(Rng& rng) {
    for (int attempt = 0; attempt < 500; ++attempt) {
        Fan2D smooth = random_smooth_fan(rng);
        if (smooth.size() < 4) continue;
        std::vector<LatticeVector> rays = smooth.rays;
        long removals = pick(rng, 1, 3);
        for (long r = 0; r < removals && rays.size() > 3; ++r)
            rays.erase(rays.begin() + pick(rng, 0, static_cast<long>(rays.size()) - 1));
        try {
            Fan2D fan = validate_surface_fan(rays);
            if (!fan.smooth) return fan;
        } catch (const TorstabError&) {
        }
    }
    // The loop above has never been observed to exhaust; keep a fixed
    // fallback so a pathological seed cannot hang the suite.
    return fix_quot_p1p1();
}

// Random weight system: distinct nonzero dual vectors with small entries.
inline WeightSystem random_weight_system(Rng& rng, std::size_t rank, std::size_t max_size) {
    std::vector<DualVector> weights;
    std::vector<std::size_t> dims;
    std::size_t target = static_cast<std::size_t>(pick(rng, 1, static_cast<long>(max_size)));
    while (weights.size() < target) {
        std::vector<Int> c;
        for (std::size_t i = 0; i < rank; ++i) c.emplace_back(pick(rng, -3, 3));
        DualVector w{c};
        if (w.is_zero()) continue;
        if (std::find(weights.begin(), weights.end(), w) != weights.end()) continue;
        weights.push_back(w);
        dims.push_back(static_cast<std::size_t>(pick(rng, 1, 3)));
    }
    return make_weight_system(std::move(weights), std::move(dims), {}, 0);
}

// Every lattice point of [-box, box]^rank, for brute-force searches.
inline std::vector<LatticeVector> box_points(std::size_t rank, long box) {
    std::vector<LatticeVector> pts;
    std::vector<long> cur(rank, -box);
    for (;;) {
        std::vector<Int> c(cur.begin(), cur.end());
        pts.push_back(LatticeVector{c});
        std::size_t i = 0;
        while (i < rank && cur[i] == box) cur[i++] = -box;
        if (i == rank) break;
        ++cur[i];
    }
    return pts;
}

// Brute-force destabilizer: p with <R_i, p> >= 1 for every i in I.
inline std::optional<LatticeVector> box_destabilizer(const std::vector<DualVector>& family,
                                                     const SupportSet& I, long box) {
    for (const LatticeVector& p : box_points(family[0].rank(), box)) {
        bool ok = true;
        for (std::size_t i : I)
            if (pairing(family[i], p) < 1) {
                ok = false;
                break;
            }
        if (ok) return p;
    }
    return std::nullopt;
}

// Brute-force separator: p with <R_i, p> >= 0 on I and > 0 somewhere on I.
inline std::optional<LatticeVector> box_separator(const std::vector<DualVector>& family,
                                                  const SupportSet& I, long box) {
    for (const LatticeVector& p : box_points(family[0].rank(), box)) {
        bool nonneg = true, strict = false;
        for (std::size_t i : I) {
            Int v = pairing(family[i], p);
            if (v < 0) {
                nonneg = false;
                break;
            }
            if (v > 0) strict = true;
        }
        if (nonneg && strict) return p;
    }
    return std::nullopt;
}

// Brute-force nonzero nonnegative relation with coefficients in [0, cap].
inline bool box_has_relation(const std::vector<DualVector>& family, const SupportSet& I,
                             long cap) {
    std::size_t n = I.size();
    std::vector<long> a(n, 0);
    for (;;) {
        std::size_t i = 0;
        while (i < n && a[i] == cap) a[i++] = 0;
        if (i == n) return false;
        ++a[i];
        std::vector<Int> sum(family[0].rank(), 0);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < sum.size(); ++j)
                sum[j] += Int(a[k]) * family[I[k]].c[j];
        if (std::all_of(sum.begin(), sum.end(), [](const Int& x) { return x == 0; })) return true;
    }
}

inline std::vector<DualVector> alphas(const RootSystem& rs) {
    std::vector<DualVector> out;
    for (const Root& r : rs.roots) out.push_back(r.alpha);
    return out;
}

inline std::vector<LatticeVector> sorted_rays(const Fan2D& fan) {
    std::vector<LatticeVector> out = fan.rays;
    std::sort(out.begin(), out.end());
    return out;
}

// Supports as sets of weights, for comparisons that ignore index order.
inline std::vector<std::vector<DualVector>> support_weight_sets(
    const WeightSystem& ws, const std::vector<SupportSet>& supports) {
    std::vector<std::vector<DualVector>> out;
    for (const SupportSet& I : supports) {
        std::vector<DualVector> one;
        for (std::size_t i : I) one.push_back(ws.weights[i]);
        std::sort(one.begin(), one.end());
        out.push_back(std::move(one));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace torstab::testing

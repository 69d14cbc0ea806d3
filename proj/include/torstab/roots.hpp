#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "torstab/fan.hpp"
#include "torstab/lattice.hpp"

namespace torstab {

// A root of the fan: a character pairing to 1 with exactly one ray and
// nonpositively with every other ray. Each root generates a one-parameter
// unipotent group of automorphisms beyond the torus.
struct Root {
    DualVector alpha;
    std::size_t ray = 0; // index of the unique ray with <alpha, ray> = 1
};

struct RootSystem {
    std::vector<Root> roots; // lexicographically ascending in alpha
    // Index pairs (i, j), i < j, with roots[j].alpha = -roots[i].alpha.
    // Each such pair generates an sl(2) inside the automorphism algebra.
    std::vector<std::pair<std::size_t, std::size_t>> semisimple_pairs;
};

// Enumerates every root of a complete surface fan. For a candidate ray the
// solutions of <alpha, ray> = 1 form an affine line; the nonpositivity
// constraints against the other rays cut a bounded lattice segment because
// the rays positively span the plane.
RootSystem root_system(const Fan2D& fan);

// True iff no root comes with its negative, so the reductive part of the
// identity component of the automorphism group is the torus alone.
bool is_reductive_part_torus(const RootSystem& rs);

// Shortcut predicate for blow-ups of the Hirzebruch surface with parameter a
// (a = 0 meaning the product of two projective lines) at the given new rays:
// decides whether the blown-up surface has torus reductive part without
// computing its root system. Needs at least two blow-up rays.
bool blowup_criterion(long a, const std::vector<LatticeVector>& blowup_rays);

// Roots of a refined fan are exactly the roots of the coarse fan that pair
// nonpositively with every inserted ray. Recomputes both sides independently
// and returns whether they agree. The refined fan must contain every ray of
// the coarse one.
bool root_restriction_check(const Fan2D& fan, const Fan2D& blown_up);

} // namespace torstab

#pragma once

#include "torstab/fan.hpp"
#include "torstab/lattice.hpp"

namespace torstab {

struct StandardFanSpec {
    enum class Kind { ProjectivePlane, P1xP1, Hirzebruch };
    Kind kind = Kind::ProjectivePlane;
    long a = 0; // Hirzebruch degree, >= 1
};

Fan2D standard_fan(const StandardFanSpec& spec);

// Fans of cyclic quotient surfaces: the product of two projective lines by
// the diagonal scaling of order q, and the degree-a Hirzebruch surface by the
// order-p fiberwise scaling. Ray formulas follow from the invariant character
// sublattice; the derivation is in docs/derivations.md.
struct QuotientSpec {
    enum class Kind { DiagonalP1xP1, HirzebruchQuotient };
    Kind kind = Kind::DiagonalP1xP1;
    long q = 0; // DiagonalP1xP1: group order, >= 2
    long a = 0; // HirzebruchQuotient: surface degree, >= 1
    long p = 0; // HirzebruchQuotient: group order, >= 2
};

Fan2D quotient_fan(const QuotientSpec& spec);

// Minimal resolution: each singular cone is subdivided along the lattice
// points of the compact faces of the convex hull of its nonzero lattice
// points. Smooth input comes back unchanged; the output is always smooth and
// keeps every input ray.
Fan2D hj_resolve(const Fan2D& fan);

// The resolved Hirzebruch quotient blown up twice more, adding the rays
// e1+e2 and -e1+e2. Only (a, p) = (2, 3) is wired up.
Fan2D xhat2_fan(long a, long p);

} // namespace torstab

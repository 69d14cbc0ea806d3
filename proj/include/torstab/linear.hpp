#pragma once

#include <optional>
#include <vector>

#include "torstab/lattice.hpp"

namespace torstab {

// One constraint sum_j a[j] x_j >= b, or == b when eq is set.
struct LinearConstraint {
    std::vector<Rat> a;
    Rat b;
    bool eq = false;
};

// Exact rational feasibility by Fourier-Motzkin elimination. Equalities are
// removed first by substitution; a feasible point is recovered by
// back-substitution with a deterministic value rule, so repeated runs give
// identical certificates.
std::optional<std::vector<Rat>> solve_rational(std::size_t nvars,
                                               const std::vector<LinearConstraint>& constraints);

// Strictly positive integer relation sum a_i R_i = 0, all a_i >= 1.
struct PositiveRelation {
    std::vector<Int> coefficients;
};

// For each family index i: multiplier[i] * (-R_i) = sum_j combo[i][j] R_j
// with multiplier[i] >= 1 and combo[i][j] >= 0. Cone membership is
// scale-invariant, so this certifies -R_i in the cone of the family.
struct SubspaceWitness {
    std::vector<Int> multiplier;
    std::vector<std::vector<Int>> combo;
};

// <R_i, p> >= 0 for all i in the family, > 0 at strict_index.
struct SeparatingVector {
    LatticeVector p;
    std::size_t strict_index;
};

struct ConeCertificate {
    std::optional<SubspaceWitness> witness;      // present iff subspace
    std::optional<SeparatingVector> separating;  // present iff not
};

std::optional<PositiveRelation> positive_kernel_vector(const std::vector<DualVector>& family);

struct SubspaceCheck {
    bool is_subspace;
    ConeCertificate certificate;
};
SubspaceCheck positive_span_is_subspace(const std::vector<DualVector>& family);

// Nonzero nonnegative relation on the subfamily indexed by sub: a_i >= 0,
// sum a_i >= 1, sum a_i R_i = 0. The strictly positive indices form the
// support; restricted there the relation is a PositiveRelation.
struct NonnegRelation {
    std::vector<std::size_t> support; // indices into the family, sorted
    std::vector<Int> coefficients;    // aligned with support, all >= 1
};
std::optional<NonnegRelation> nonzero_nonneg_relation(const std::vector<DualVector>& family,
                                                      const std::vector<std::size_t>& sub);

// Integer p with <R_i, p> >= 1 for every i in sub. Exists iff no nonzero
// nonnegative relation on sub (Gordan duality).
std::optional<LatticeVector> all_positive_functional(const std::vector<DualVector>& family,
                                                     const std::vector<std::size_t>& sub);

} // namespace torstab

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torstab/fan.hpp"
#include "torstab/lattice.hpp"
#include "torstab/linear.hpp"
#include "torstab/weights.hpp"

namespace torstab {

// Sorted 0-based indices into a WeightSystem's weight list. A support stands
// for the set of points whose coordinates are nonzero exactly there.
using SupportSet = std::vector<std::size_t>;

// Indices into the weight system plus strictly positive coefficients with
// sum_k coefficients[k] * weights[indices[k]] = 0.
struct BalancedSubfamily {
    std::vector<std::size_t> indices;
    std::vector<Int> coefficients;
};

// Strictly positive integer relation on the whole subfamily {weights[i], i in I},
// coefficients aligned with I after sorting. Empty I is an error.
std::optional<PositiveRelation> is_balanced(const WeightSystem& ws, const SupportSet& I);

// All supports whose full weight subfamily is balanced, lexicographically
// ordered. Subset enumeration, capped at 20 weights.
std::vector<SupportSet> nu_sigma(const WeightSystem& ws);

// All supports containing a balanced subfamily whose positive span is a
// linear subspace: the supports carrying polystable points. Same cap.
std::vector<SupportSet> mu_sigma(const WeightSystem& ws);

struct Stratum {
    SupportSet support; // empty = the origin
    std::vector<DualVector> weights;
    std::vector<std::size_t> dims;
    std::string description;
};

// The origin stratum followed by one stratum per element of mu_sigma.
std::vector<Stratum> strata(const WeightSystem& ws);

enum class StabilityClass { Polystable, StrictlySemistable, Unstable };
const char* stability_class_name(StabilityClass c);

struct Classification {
    StabilityClass cls = StabilityClass::Polystable;
    SupportSet support;
    // Present unless Unstable or the support is empty: a balanced subfamily.
    std::optional<BalancedSubfamily> balanced;
    // Polystable with nonempty support: row i certifies -weights[support[i]]
    // inside the positive span; rows and columns follow support order.
    std::optional<SubspaceWitness> subspace;
    // StrictlySemistable: pairs >= 0 with every support weight, > 0 with
    // weights[separating_strict].
    std::optional<LatticeVector> separating;
    std::optional<std::size_t> separating_strict;
    // Unstable: pairs >= 1 with every support weight.
    std::optional<LatticeVector> destabilizing;
};

Classification classify_support(const WeightSystem& ws, const SupportSet& I);

struct OnePsLimit {
    bool has_limit = false;
    SupportSet surviving; // indices with pairing 0, when the limit exists
};

// Limit under the one-parameter subgroup of p: no limit iff some support
// weight pairs negatively; otherwise the zero-pairing coordinates survive.
OnePsLimit one_ps_limit(const WeightSystem& ws, const SupportSet& I, const LatticeVector& p);

// Decomposition N = N_f + N_a by a combined Z-basis. fixed_basis spans the
// sublattice of the fixed subtorus; either part may be empty.
struct Splitting {
    std::vector<LatticeVector> fixed_basis;
    std::vector<LatticeVector> complement_basis;
};

Splitting make_splitting(std::vector<LatticeVector> fixed_basis,
                         std::vector<LatticeVector> complement_basis);

// Rank-2 convenience: N_f spanned by one primitive vector, complement
// completed to a unimodular basis.
Splitting splitting_from_fixed_ray(const LatticeVector& f);

// Sub-system of weights vanishing on every fixed-basis vector; dims and
// certifying rays carried over.
WeightSystem restrict_weights(const WeightSystem& ws, const Splitting& split);

// Indices (into ws) of the weights surviving restriction, ascending.
std::vector<std::size_t> restricted_indices(const WeightSystem& ws, const Splitting& split);

// mu_sigma of the restricted system, reported as supports of the original
// system.
std::vector<SupportSet> mu_relative(const WeightSystem& ws, const Splitting& split);

struct Verdict {
    bool hypothesis_torus_maximal = false;
    std::string hypothesis_label; // what the hypothesis flag actually checked
    bool exists_balanced = false;
    std::vector<Stratum> strata;
    std::string statement;
};

// Existence of deformations with constant scalar curvature Kahler metrics:
// positive iff the deformation weights contain a balanced family. Sufficient
// by the theory; necessary only for integral Kahler classes under the torus
// hypothesis, and the statement says so.
Verdict csck_verdict(const Fan2D& fan);

// Relative variant for deformations preserving the subtorus of the splitting
// (the extremal vector field is assumed to lie in its Lie algebra).
Verdict extremal_verdict(const Fan2D& fan, const Splitting& split);

} // namespace torstab

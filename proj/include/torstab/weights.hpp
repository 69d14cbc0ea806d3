#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "torstab/fan.hpp"
#include "torstab/lattice.hpp"
#include "torstab/roots.hpp"

namespace torstab {

// Graph attached to a weight at a base ray: vertices are the other rays
// pairing strictly positively with the weight, edges join rays spanning a
// common cone. Defined only when <weight, base_ray> = 1.
struct GammaGraph {
    std::size_t base_ray = 0;
    DualVector weight;
    std::vector<std::size_t> vertices; // ray indices, ascending
    std::vector<std::pair<std::size_t, std::size_t>> edges; // ray index pairs, first < second
    std::size_t components = 0;
};

GammaGraph gamma_graph(const GeneralFan& fan, std::size_t base_ray, const DualVector& weight);
GammaGraph gamma_graph(const Fan2D& fan, std::size_t base_ray, const DualVector& weight);

// Rays rho with <weight, rho> = 1 whose graph has at least one vertex,
// in fan order.
std::vector<LatticeVector> omega_set(const GeneralFan& fan, const DualVector& weight);
std::vector<LatticeVector> omega_set(const Fan2D& fan, const DualVector& weight);

// Membership test for deformation weights on an arbitrary simplicial fan:
// R qualifies iff for some ray rho with <R, rho> = -1 the graph of -R at rho
// has at least two connected components.
bool is_def_weight_general(const GeneralFan& fan, const DualVector& R);

// Torus weights of the deformation space with multiplicities. weights are
// distinct, nonzero and lexicographically ascending; dims[i] >= 1. When the
// system came from a surface enumeration, certifying_rays[i] lists the rays
// witnessing weights[i] and dims[i] equals its length.
struct WeightSystem {
    std::vector<DualVector> weights;
    std::vector<std::size_t> dims;
    std::vector<std::vector<std::size_t>> certifying_rays; // empty when not tracked
    std::size_t fan_rays = 0;
};

WeightSystem make_weight_system(std::vector<DualVector> weights, std::vector<std::size_t> dims,
                                std::vector<std::vector<std::size_t>> certifying_rays,
                                std::size_t fan_rays);

// Weight enumeration for a smooth complete surface fan. A ray rho certifies R
// when <R, rho> = -1 and both cyclic neighbors of rho pair strictly
// negatively with R; dims counts certifying rays. Exhaustive: per ray the
// solutions live on a line and the neighbor constraints bound a segment.
WeightSystem def_weights_surface(const Fan2D& fan);

// Sum of dims.
std::size_t h1_total(const WeightSystem& ws);

struct EulerCheck {
    Int expected;
    Int actual;
    bool ok = false;
};

// Independent dimension cross-check: the expected total is determined by the
// ray count and the root count alone (see docs/derivations.md). Any mismatch
// means the weight enumeration or the root enumeration is wrong.
EulerCheck euler_check(const Fan2D& fan, const WeightSystem& ws, const RootSystem& roots);

} // namespace torstab

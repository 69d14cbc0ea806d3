#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "torstab/lattice.hpp"

namespace torstab {

// Complete 2D fan. Rays are primitive, pairwise non-parallel, and stored
// counterclockwise starting at the smallest polar angle; cone i is spanned by
// rays[i], rays[i+1 mod l]. Constructed only through validate_surface_fan, so
// every instance satisfies det(rays[i], rays[i+1]) > 0 cyclically.
struct Fan2D {
    std::vector<LatticeVector> rays;
    bool smooth = false;
    bool complete = false;
    std::vector<std::size_t> singular_cones; // cone indices with det > 1

    std::size_t size() const { return rays.size(); }
    Int cone_det(std::size_t i) const { return det2(rays[i], rays[(i + 1) % rays.size()]); }
};

// Canonicalize a raw ray list into a Fan2D. Exact angle sort (quadrant index
// plus cross-product sign); identical input vectors are silently merged, but
// two distinct inputs on the same half-line raise ParallelRays.
Fan2D validate_surface_fan(const std::vector<LatticeVector>& raw_rays);

// Star subdivision of cone i at rays[i] + rays[i+1]. The target cone must be
// unimodular; the rest of the fan may be singular.
Fan2D blow_up(const Fan2D& fan, std::size_t cone_index);

// Cyclic predecessor and successor of rays[i].
std::pair<LatticeVector, LatticeVector> neighbors(const Fan2D& fan, std::size_t ray_index);

std::optional<std::size_t> find_ray(const Fan2D& fan, const LatticeVector& v);

// True if u comes strictly before v counterclockwise from the positive x-axis.
bool angle_less(const LatticeVector& u, const LatticeVector& v);

// Rank-n simplicial fan container: rays plus maximal cones as index sets.
// No completeness or smoothness claims; used for the graph machinery only.
struct GeneralFan {
    std::size_t rank = 0;
    std::vector<LatticeVector> rays;
    std::vector<std::vector<std::size_t>> max_cones;
};

GeneralFan make_general_fan(std::size_t rank, std::vector<LatticeVector> rays,
                            std::vector<std::vector<std::size_t>> max_cones);

// The 2D fan as a GeneralFan (cones = cyclically adjacent ray pairs).
GeneralFan to_general(const Fan2D& fan);

Fan2D apply_basis_change(const IntMatrix& M, const Fan2D& fan);

} // namespace torstab

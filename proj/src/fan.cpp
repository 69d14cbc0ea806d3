#include "torstab/fan.hpp"

#include <algorithm>
#include <map>

namespace torstab {

namespace {

// Position of the open sector containing v, walking ccw from the positive
// x-axis: 0 = +x axis, 1 = open quadrant I, 2 = +y axis, ... 7 = quadrant IV.
int octant(const LatticeVector& v) {
    int sx = sgn(v.c[0]), sy = sgn(v.c[1]);
    if (sy == 0) return sx > 0 ? 0 : 4;
    if (sy > 0) {
        if (sx > 0) return 1;
        return sx == 0 ? 2 : 3;
    }
    if (sx < 0) return 5;
    return sx == 0 ? 6 : 7;
}

} // namespace

bool angle_less(const LatticeVector& u, const LatticeVector& v) {
    int ou = octant(u), ov = octant(v);
    if (ou != ov) return ou < ov;
    return det2(u, v) > 0;
}

Fan2D validate_surface_fan(const std::vector<LatticeVector>& raw_rays) {
    for (const LatticeVector& v : raw_rays)
        if (v.rank() != 2) fail(errc::rank_mismatch, "surface fan rays must have rank 2");

    // Merge exact duplicates first; distinct inputs colliding after
    // primitivization are a user error, not a dedup case.
    std::vector<LatticeVector> distinct = raw_rays;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::map<LatticeVector, LatticeVector> seen; // primitive -> original
    std::vector<LatticeVector> rays;
    for (const LatticeVector& v : distinct) {
        LatticeVector p = primitive(v);
        auto [it, inserted] = seen.emplace(p, v);
        if (!inserted)
            fail(errc::parallel_rays, "rays " + coords_label(it->second.c) + " and " +
                                          coords_label(v.c) + " are positively parallel");
        rays.push_back(std::move(p));
    }
    if (rays.size() < 3) fail(errc::too_few_rays, "a complete surface fan needs at least 3 rays");

    std::sort(rays.begin(), rays.end(), angle_less);

    Fan2D fan;
    fan.rays = std::move(rays);
    fan.complete = true;
    fan.smooth = true;
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        Int d = fan.cone_det(i);
        if (d <= 0)
            fail(errc::not_complete, "rays do not positively span the plane (gap at cone " +
                                         std::to_string(i) + ")");
        if (d != 1) {
            fan.smooth = false;
            fan.singular_cones.push_back(i);
        }
    }
    return fan;
}

Fan2D blow_up(const Fan2D& fan, std::size_t cone_index) {
    std::size_t l = fan.size();
    if (cone_index >= l) fail(errc::bad_index, "cone index out of range");
    Int d = fan.cone_det(cone_index);
    if (d != 1)
        fail(errc::singular_cone,
             "cone " + std::to_string(cone_index) + " has determinant " + d.get_str());
    LatticeVector sum = add(fan.rays[cone_index], fan.rays[(cone_index + 1) % l]);
    std::vector<LatticeVector> rays = fan.rays;
    rays.push_back(std::move(sum));
    return validate_surface_fan(rays);
}

std::pair<LatticeVector, LatticeVector> neighbors(const Fan2D& fan, std::size_t ray_index) {
    std::size_t l = fan.size();
    if (ray_index >= l) fail(errc::bad_index, "ray index out of range");
    return {fan.rays[(ray_index + l - 1) % l], fan.rays[(ray_index + 1) % l]};
}

std::optional<std::size_t> find_ray(const Fan2D& fan, const LatticeVector& v) {
    for (std::size_t i = 0; i < fan.size(); ++i)
        if (fan.rays[i] == v) return i;
    return std::nullopt;
}

GeneralFan make_general_fan(std::size_t rank, std::vector<LatticeVector> rays,
                            std::vector<std::vector<std::size_t>> max_cones) {
    for (const LatticeVector& v : rays) {
        if (v.rank() != rank) fail(errc::rank_mismatch, "ray rank differs from declared rank");
        if (primitive(v) != v) fail(errc::bad_parameter, "general fan rays must be primitive");
    }
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t j = i + 1; j < rays.size(); ++j)
            if (rays[i] == rays[j]) fail(errc::parallel_rays, "duplicate ray in general fan");

    std::vector<bool> used(rays.size(), false);
    for (auto& cone : max_cones) {
        std::sort(cone.begin(), cone.end());
        if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
            fail(errc::bad_index, "repeated ray index within a cone");
        if (cone.empty()) fail(errc::bad_index, "empty cone");
        for (std::size_t i : cone) {
            if (i >= rays.size()) fail(errc::bad_index, "cone index out of range");
            used[i] = true;
        }
        // Simpliciality: generators are linearly independent. Gaussian
        // elimination over the rationals, exact.
        std::vector<std::vector<Rat>> m;
        for (std::size_t i : cone) {
            std::vector<Rat> row;
            for (const Int& x : rays[i].c) row.emplace_back(x);
            m.push_back(std::move(row));
        }
        std::size_t r = 0;
        for (std::size_t col = 0; col < rank && r < m.size(); ++col) {
            std::size_t piv = r;
            while (piv < m.size() && m[piv][col] == 0) ++piv;
            if (piv == m.size()) continue;
            std::swap(m[r], m[piv]);
            for (std::size_t k = r + 1; k < m.size(); ++k) {
                if (m[k][col] == 0) continue;
                Rat f = m[k][col] / m[r][col];
                for (std::size_t c2 = col; c2 < rank; ++c2) m[k][c2] -= f * m[r][c2];
            }
            ++r;
        }
        if (r != cone.size()) fail(errc::bad_parameter, "cone generators are linearly dependent");
    }
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (!used[i]) fail(errc::bad_parameter, "ray " + std::to_string(i) + " is in no cone");

    return GeneralFan{rank, std::move(rays), std::move(max_cones)};
}

GeneralFan to_general(const Fan2D& fan) {
    std::vector<std::vector<std::size_t>> cones;
    std::size_t l = fan.size();
    for (std::size_t i = 0; i < l; ++i) cones.push_back({i, (i + 1) % l});
    return make_general_fan(2, fan.rays, std::move(cones));
}

Fan2D apply_basis_change(const IntMatrix& M, const Fan2D& fan) {
    std::vector<LatticeVector> rays;
    for (const LatticeVector& v : fan.rays) rays.push_back(change_of_basis(M, v));
    return validate_surface_fan(rays);
}

} // namespace torstab

#include "torstab/weights.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

namespace torstab {

namespace {

std::size_t component_count(const std::vector<std::size_t>& vertices,
                            const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::map<std::size_t, std::size_t> rep;
    for (std::size_t v : vertices) rep[v] = v;
    auto find = [&](std::size_t v) {
        while (rep[v] != v) v = rep[v] = rep[rep[v]];
        return v;
    };
    for (auto [a, b] : edges) rep[find(a)] = find(b);
    std::size_t n = 0;
    for (std::size_t v : vertices)
        if (find(v) == v) ++n;
    return n;
}

} // namespace

GammaGraph gamma_graph(const GeneralFan& fan, std::size_t base_ray, const DualVector& weight) {
    if (base_ray >= fan.rays.size()) fail(errc::bad_index, "base ray index out of range");
    if (pairing(weight, fan.rays[base_ray]) != 1)
        fail(errc::bad_normalization,
             "graph needs <weight, base ray> = 1, got weight " + weight_label(weight) +
                 " at ray " + coords_label(fan.rays[base_ray].c));

    GammaGraph g;
    g.base_ray = base_ray;
    g.weight = weight;
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
        if (i != base_ray && pairing(weight, fan.rays[i]) > 0) g.vertices.push_back(i);

    for (std::size_t a = 0; a < g.vertices.size(); ++a)
        for (std::size_t b = a + 1; b < g.vertices.size(); ++b) {
            std::size_t i = g.vertices[a], j = g.vertices[b];
            bool common = std::any_of(fan.max_cones.begin(), fan.max_cones.end(),
                                      [&](const std::vector<std::size_t>& cone) {
                                          return std::binary_search(cone.begin(), cone.end(), i) &&
                                                 std::binary_search(cone.begin(), cone.end(), j);
                                      });
            if (common) g.edges.emplace_back(i, j);
        }
    g.components = component_count(g.vertices, g.edges);
    return g;
}

GammaGraph gamma_graph(const Fan2D& fan, std::size_t base_ray, const DualVector& weight) {
    return gamma_graph(to_general(fan), base_ray, weight);
}

std::vector<LatticeVector> omega_set(const GeneralFan& fan, const DualVector& weight) {
    std::vector<LatticeVector> out;
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        if (pairing(weight, fan.rays[i]) != 1) continue;
        if (!gamma_graph(fan, i, weight).vertices.empty()) out.push_back(fan.rays[i]);
    }
    return out;
}

std::vector<LatticeVector> omega_set(const Fan2D& fan, const DualVector& weight) {
    return omega_set(to_general(fan), weight);
}

bool is_def_weight_general(const GeneralFan& fan, const DualVector& R) {
    DualVector w = negate(R);
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        if (pairing(w, fan.rays[i]) != 1) continue;
        if (gamma_graph(fan, i, w).components >= 2) return true;
    }
    return false;
}

WeightSystem make_weight_system(std::vector<DualVector> weights, std::vector<std::size_t> dims,
                                std::vector<std::vector<std::size_t>> certifying_rays,
                                std::size_t fan_rays) {
    if (weights.size() != dims.size())
        fail(errc::bad_parameter, "weight and dimension counts differ");
    if (!certifying_rays.empty() && certifying_rays.size() != weights.size())
        fail(errc::bad_parameter, "certifying ray list count differs from weight count");

    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (weights[k].is_zero()) fail(errc::bad_parameter, "zero weight");
        if (weights[k].rank() != weights[0].rank())
            fail(errc::rank_mismatch, "weights of mixed rank");
        if (dims[k] < 1) fail(errc::bad_parameter, "weight dimension must be positive");
    }

    std::vector<std::size_t> order(weights.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return weights[a] < weights[b]; });

    WeightSystem ws;
    ws.fan_rays = fan_rays;
    for (std::size_t k : order) {
        if (!ws.weights.empty() && ws.weights.back() == weights[k])
            fail(errc::bad_parameter, "duplicate weight " + weight_label(weights[k]));
        ws.weights.push_back(std::move(weights[k]));
        ws.dims.push_back(dims[k]);
        if (!certifying_rays.empty()) ws.certifying_rays.push_back(std::move(certifying_rays[k]));
    }
    return ws;
}

WeightSystem def_weights_surface(const Fan2D& fan) {
    if (!fan.complete) fail(errc::not_complete, "weight enumeration needs a complete fan");
    if (!fan.smooth) fail(errc::not_smooth, "weight enumeration needs a smooth fan");

    std::map<DualVector, std::vector<std::size_t>> found;
    for (std::size_t i = 0; i < fan.size(); ++i) {
        const LatticeVector& rho = fan.rays[i];
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), rho.c[0].get_mpz_t(),
                   rho.c[1].get_mpz_t());
        if (g != 1) fail(errc::internal, "non-primitive ray in a validated fan");
        DualVector base(std::vector<Int>{-s, -t}); // <base, rho> = -1
        DualVector dir(std::vector<Int>{rho.c[1], -rho.c[0]}); // <dir, rho> = 0

        auto [prev, next] = neighbors(fan, i);
        std::optional<Int> lo, hi;
        for (const LatticeVector* n : {&prev, &next}) {
            Int k = pairing(base, *n);
            Int c = pairing(dir, *n);
            if (c == 0) fail(errc::internal, "fan neighbor parallel to its ray");
            Int rhs = -1 - k; // want c * step <= rhs
            Int b;
            if (c > 0) {
                mpz_fdiv_q(b.get_mpz_t(), rhs.get_mpz_t(), c.get_mpz_t());
                hi = hi ? std::min(*hi, b) : b;
            } else {
                mpz_cdiv_q(b.get_mpz_t(), rhs.get_mpz_t(), c.get_mpz_t());
                lo = lo ? std::max(*lo, b) : b;
            }
        }
        if (!lo || !hi) fail(errc::internal, "unbounded weight segment on a complete fan");

        for (Int step = *lo; step <= *hi; ++step) {
            DualVector r = add(base, scale(step, dir));
            if (pairing(r, rho) != -1 || pairing(r, prev) >= 0 || pairing(r, next) >= 0)
                fail(errc::internal, "weight segment produced a non-certified weight");
            found[r].push_back(i);
        }
    }

    WeightSystem ws;
    ws.fan_rays = fan.size();
    for (auto& [r, certs] : found) {
        ws.weights.push_back(r);
        ws.dims.push_back(certs.size());
        std::sort(certs.begin(), certs.end());
        ws.certifying_rays.push_back(certs);
    }
    return ws;
}

std::size_t h1_total(const WeightSystem& ws) {
    return std::accumulate(ws.dims.begin(), ws.dims.end(), std::size_t{0});
}

EulerCheck euler_check(const Fan2D& fan, const WeightSystem& ws, const RootSystem& roots) {
    if (!fan.smooth) fail(errc::not_smooth, "dimension cross-check needs a smooth fan");
    EulerCheck ec;
    ec.expected = Int(2) + Int(roots.roots.size()) + Int(2) * Int(fan.size()) - 14;
    ec.actual = Int(h1_total(ws));
    ec.ok = ec.expected == ec.actual;
    return ec;
}

} // namespace torstab

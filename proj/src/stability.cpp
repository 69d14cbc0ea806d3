#include "torstab/stability.hpp"

#include <algorithm>
#include <numeric>

namespace torstab {

namespace {

constexpr std::size_t kEnumerationCap = 20;

bool has_balanced_subfamily(const WeightSystem& ws) {
    if (ws.weights.empty()) return false;
    std::vector<std::size_t> all(ws.weights.size());
    std::iota(all.begin(), all.end(), 0);
    return nonzero_nonneg_relation(ws.weights, all).has_value();
}

SupportSet canonical_support(const WeightSystem& ws, SupportSet I) {
    std::sort(I.begin(), I.end());
    I.erase(std::unique(I.begin(), I.end()), I.end());
    for (std::size_t i : I)
        if (i >= ws.weights.size())
            fail(errc::bad_index, "support index " + std::to_string(i) + " out of range");
    return I;
}

std::vector<DualVector> subfamily(const WeightSystem& ws, const SupportSet& I) {
    std::vector<DualVector> out;
    for (std::size_t i : I) out.push_back(ws.weights[i]);
    return out;
}

std::vector<SupportSet> all_nonempty_supports(const WeightSystem& ws) {
    std::size_t s = ws.weights.size();
    if (s > kEnumerationCap)
        fail(errc::too_many_weights, "subset enumeration capped at " +
                                         std::to_string(kEnumerationCap) + " weights, got " +
                                         std::to_string(s));
    std::vector<SupportSet> out;
    for (std::size_t mask = 1; mask < (std::size_t{1} << s); ++mask) {
        SupportSet I;
        for (std::size_t i = 0; i < s; ++i)
            if (mask & (std::size_t{1} << i)) I.push_back(i);
        out.push_back(std::move(I));
    }
    return out;
}

std::string support_labels(const WeightSystem& ws, const SupportSet& I) {
    std::string out;
    for (std::size_t k = 0; k < I.size(); ++k) {
        if (k) out += ", ";
        out += weight_label(ws.weights[I[k]]);
    }
    return out;
}

Stratum make_stratum(const WeightSystem& ws, const SupportSet& I) {
    Stratum st;
    st.support = I;
    if (I.empty()) {
        st.description = "the origin";
        return st;
    }
    for (std::size_t i : I) {
        st.weights.push_back(ws.weights[i]);
        st.dims.push_back(ws.dims[i]);
    }
    st.description = "coordinates nonzero exactly in the weight spaces " + support_labels(ws, I);
    return st;
}

std::string necessity_hedge() {
    return " The criterion is sufficient; it is necessary only when the Kahler class is"
           " integral and the torus hypothesis holds.";
}

} // namespace

std::optional<PositiveRelation> is_balanced(const WeightSystem& ws, const SupportSet& I) {
    SupportSet canon = canonical_support(ws, I);
    if (canon.empty()) fail(errc::empty_index_set, "balanced test needs a nonempty support");
    return positive_kernel_vector(subfamily(ws, canon));
}

std::vector<SupportSet> nu_sigma(const WeightSystem& ws) {
    std::vector<SupportSet> out;
    for (SupportSet& I : all_nonempty_supports(ws))
        if (positive_kernel_vector(subfamily(ws, I))) out.push_back(std::move(I));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SupportSet> mu_sigma(const WeightSystem& ws) {
    std::vector<SupportSet> out;
    for (SupportSet& I : all_nonempty_supports(ws)) {
        if (!nonzero_nonneg_relation(ws.weights, I)) continue;
        if (!positive_span_is_subspace(subfamily(ws, I)).is_subspace) continue;
        out.push_back(std::move(I));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Stratum> strata(const WeightSystem& ws) {
    std::vector<Stratum> out;
    out.push_back(make_stratum(ws, {}));
    for (const SupportSet& I : mu_sigma(ws)) out.push_back(make_stratum(ws, I));
    return out;
}

const char* stability_class_name(StabilityClass c) {
    switch (c) {
        case StabilityClass::Polystable: return "Polystable";
        case StabilityClass::StrictlySemistable: return "StrictlySemistable";
        case StabilityClass::Unstable: return "Unstable";
    }
    return "?";
}

Classification classify_support(const WeightSystem& ws, const SupportSet& I) {
    Classification out;
    out.support = canonical_support(ws, I);
    if (out.support.empty()) {
        out.cls = StabilityClass::Polystable;
        return out;
    }

    std::optional<NonnegRelation> rel = nonzero_nonneg_relation(ws.weights, out.support);
    if (!rel) {
        out.cls = StabilityClass::Unstable;
        std::optional<LatticeVector> p = all_positive_functional(ws.weights, out.support);
        if (!p) fail(errc::internal, "no relation and no positive functional: duality violated");
        out.destabilizing = std::move(*p);
        return out;
    }
    out.balanced = BalancedSubfamily{rel->support, rel->coefficients};

    SubspaceCheck chk = positive_span_is_subspace(subfamily(ws, out.support));
    if (chk.is_subspace) {
        out.cls = StabilityClass::Polystable;
        if (!chk.certificate.witness) fail(errc::internal, "subspace verdict without witness");
        out.subspace = std::move(chk.certificate.witness);
    } else {
        out.cls = StabilityClass::StrictlySemistable;
        if (!chk.certificate.separating) fail(errc::internal, "cone verdict without separator");
        out.separating = chk.certificate.separating->p;
        out.separating_strict = out.support[chk.certificate.separating->strict_index];
    }
    return out;
}

OnePsLimit one_ps_limit(const WeightSystem& ws, const SupportSet& I, const LatticeVector& p) {
    SupportSet canon = canonical_support(ws, I);
    OnePsLimit out;
    out.has_limit = true;
    for (std::size_t i : canon) {
        Int v = pairing(ws.weights[i], p);
        if (v < 0) return OnePsLimit{};
        if (v == 0) out.surviving.push_back(i);
    }
    return out;
}

Splitting make_splitting(std::vector<LatticeVector> fixed_basis,
                         std::vector<LatticeVector> complement_basis) {
    std::size_t n = fixed_basis.size() + complement_basis.size();
    if (n == 0) fail(errc::invalid_splitting, "empty splitting");

    IntMatrix M;
    M.m.assign(n, std::vector<Int>(n, 0));
    std::size_t col = 0;
    for (const std::vector<LatticeVector>* part : {&fixed_basis, &complement_basis})
        for (const LatticeVector& v : *part) {
            if (v.rank() != n)
                fail(errc::invalid_splitting, "basis vector rank differs from basis size");
            for (std::size_t r = 0; r < n; ++r) M.m[r][col] = v.c[r];
            ++col;
        }
    Int d = det(M);
    if (d != 1 && d != -1)
        fail(errc::invalid_splitting, "combined basis has determinant " + d.get_str());
    return Splitting{std::move(fixed_basis), std::move(complement_basis)};
}

Splitting splitting_from_fixed_ray(const LatticeVector& f) {
    if (f.rank() != 2) fail(errc::invalid_splitting, "fixed ray must have rank 2");
    if (f.is_zero()) fail(errc::invalid_splitting, "fixed ray is zero");
    LatticeVector p = primitive(f);
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p.c[0].get_mpz_t(),
               p.c[1].get_mpz_t());
    // det(p, q) = p0 * s - p1 * (-t) = 1 for q = (-t, s).
    LatticeVector q(std::vector<Int>{-t, s});
    return make_splitting({std::move(p)}, {std::move(q)});
}

WeightSystem restrict_weights(const WeightSystem& ws, const Splitting& split) {
    WeightSystem out;
    out.fan_rays = ws.fan_rays;
    for (std::size_t i : restricted_indices(ws, split)) {
        out.weights.push_back(ws.weights[i]);
        out.dims.push_back(ws.dims[i]);
        if (!ws.certifying_rays.empty()) out.certifying_rays.push_back(ws.certifying_rays[i]);
    }
    return out;
}

std::vector<std::size_t> restricted_indices(const WeightSystem& ws, const Splitting& split) {
    for (const LatticeVector& f : split.fixed_basis)
        if (!ws.weights.empty() && f.rank() != ws.weights[0].rank())
            fail(errc::invalid_splitting, "splitting rank differs from weight rank");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ws.weights.size(); ++i) {
        bool vanishes = std::all_of(
            split.fixed_basis.begin(), split.fixed_basis.end(),
            [&](const LatticeVector& f) { return pairing(ws.weights[i], f) == 0; });
        if (vanishes) out.push_back(i);
    }
    return out;
}

std::vector<SupportSet> mu_relative(const WeightSystem& ws, const Splitting& split) {
    std::vector<std::size_t> idx = restricted_indices(ws, split);
    std::vector<SupportSet> out;
    for (const SupportSet& I : mu_sigma(restrict_weights(ws, split))) {
        SupportSet translated;
        for (std::size_t k : I) translated.push_back(idx[k]);
        out.push_back(std::move(translated));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Verdict csck_verdict(const Fan2D& fan) {
    WeightSystem ws = def_weights_surface(fan);
    RootSystem rs = root_system(fan);

    Verdict v;
    v.hypothesis_torus_maximal = is_reductive_part_torus(rs);
    v.hypothesis_label = "no-opposite-root-pair";
    v.exists_balanced = has_balanced_subfamily(ws);
    v.strata = strata(ws);
    if (v.exists_balanced) {
        v.statement = "admits nontrivial CSCK deformations";
        if (!v.hypothesis_torus_maximal)
            v.statement += " (conditional: the torus hypothesis was NOT verified)";
        v.statement += ".";
    } else {
        v.statement = "no balanced family of deformation weights: the criterion produces no"
                      " CSCK deformation.";
    }
    v.statement += necessity_hedge();
    return v;
}

Verdict extremal_verdict(const Fan2D& fan, const Splitting& split) {
    WeightSystem ws = def_weights_surface(fan);
    WeightSystem rws = restrict_weights(ws, split);
    RootSystem rs = root_system(fan);

    Verdict v;
    v.hypothesis_torus_maximal = is_reductive_part_torus(rs);
    v.hypothesis_label = "no-opposite-root-pair";
    v.exists_balanced = has_balanced_subfamily(rws);
    v.strata.push_back(make_stratum(ws, {}));
    for (const SupportSet& I : mu_relative(ws, split)) v.strata.push_back(make_stratum(ws, I));
    if (v.exists_balanced) {
        v.statement = "admits extremal deformations relative to the fixed subtorus";
        if (!v.hypothesis_torus_maximal)
            v.statement += " (conditional: the torus hypothesis was NOT verified)";
        v.statement += ".";
    } else {
        v.statement = "no balanced family among the invariant deformation weights: the"
                      " criterion produces no extremal deformation relative to the fixed"
                      " subtorus.";
    }
    v.statement += necessity_hedge();
    return v;
}

} // namespace torstab

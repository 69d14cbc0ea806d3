#include "torstab/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace torstab {

namespace {

using nlohmann::json;

long long to_file_int(const Int& x) {
    if (!x.fits_slong_p())
        fail(errc::bad_parameter, "value does not fit the report format: " + x.get_str());
    return x.get_si();
}

json coords_json(const std::vector<Int>& c) {
    json out = json::array();
    for (const Int& x : c) out.push_back(to_file_int(x));
    return out;
}

json supports_json(const std::vector<SupportSet>& sets) {
    json out = json::array();
    for (const SupportSet& I : sets) out.push_back(I);
    return out;
}

json weights_json(const WeightSystem& ws) {
    json out;
    out["coords"] = json::array();
    out["labels"] = json::array();
    for (const DualVector& r : ws.weights) {
        out["coords"].push_back(coords_json(r.c));
        out["labels"].push_back(weight_label(r));
    }
    out["dims"] = ws.dims;
    out["certifying_rays"] = ws.certifying_rays;
    out["fan_rays"] = ws.fan_rays;
    return out;
}

json verdict_json(const Verdict& v) {
    json out;
    out["hypothesis_torus_maximal"] = v.hypothesis_torus_maximal;
    out["hypothesis_label"] = v.hypothesis_label;
    out["exists_balanced"] = v.exists_balanced;
    out["statement"] = v.statement;
    out["strata"] = json::array();
    for (const Stratum& st : v.strata) {
        json s;
        s["support"] = st.support;
        s["weights"] = json::array();
        for (const DualVector& r : st.weights) s["weights"].push_back(coords_json(r.c));
        s["dims"] = st.dims;
        s["description"] = st.description;
        out["strata"].push_back(std::move(s));
    }
    return out;
}

const json& expect(const json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key))
        fail(errc::bad_parameter, std::string("report is missing \"") + key + "\"");
    return doc[key];
}

std::vector<Int> parse_coords(const json& arr) {
    if (!arr.is_array()) fail(errc::bad_parameter, "coordinate list must be an array");
    std::vector<Int> out;
    for (const json& x : arr) {
        if (!x.is_number_integer()) fail(errc::bad_parameter, "coordinates must be integers");
        out.emplace_back(static_cast<long>(x.get<long long>()));
    }
    return out;
}

std::vector<SupportSet> parse_supports(const json& arr) {
    std::vector<SupportSet> out;
    for (const json& entry : arr) out.push_back(entry.get<SupportSet>());
    return out;
}

WeightSystem parse_weights(const json& doc) {
    std::vector<DualVector> coords;
    for (const json& entry : expect(doc, "coords")) coords.emplace_back(parse_coords(entry));
    WeightSystem ws = make_weight_system(
        std::move(coords), expect(doc, "dims").get<std::vector<std::size_t>>(),
        expect(doc, "certifying_rays").get<std::vector<std::vector<std::size_t>>>(),
        expect(doc, "fan_rays").get<std::size_t>());
    return ws;
}

Verdict parse_verdict(const json& doc) {
    Verdict v;
    v.hypothesis_torus_maximal = expect(doc, "hypothesis_torus_maximal").get<bool>();
    v.hypothesis_label = expect(doc, "hypothesis_label").get<std::string>();
    v.exists_balanced = expect(doc, "exists_balanced").get<bool>();
    v.statement = expect(doc, "statement").get<std::string>();
    for (const json& s : expect(doc, "strata")) {
        Stratum st;
        st.support = expect(s, "support").get<SupportSet>();
        for (const json& w : expect(s, "weights")) st.weights.emplace_back(parse_coords(w));
        st.dims = expect(s, "dims").get<std::vector<std::size_t>>();
        st.description = expect(s, "description").get<std::string>();
        v.strata.push_back(std::move(st));
    }
    return v;
}

std::string support_label(const WeightSystem& ws, const SupportSet& I) {
    std::string out = "{";
    for (std::size_t k = 0; k < I.size(); ++k) {
        if (k) out += ", ";
        out += weight_label(ws.weights[I[k]]);
    }
    return out + "}";
}

} // namespace

AnalysisReport analyze_fan(const Fan2D& fan, const std::optional<Splitting>& split) {
    AnalysisReport r;
    r.fan = fan;
    r.weights = def_weights_surface(fan);
    r.roots = root_system(fan);
    r.torus_maximal = is_reductive_part_torus(r.roots);
    r.euler = euler_check(fan, r.weights, r.roots);

    std::vector<SupportSet> nu = nu_sigma(r.weights);
    for (const SupportSet& I : nu) {
        bool minimal = std::none_of(nu.begin(), nu.end(), [&](const SupportSet& J) {
            return J.size() < I.size() && std::includes(I.begin(), I.end(), J.begin(), J.end());
        });
        if (minimal) r.nu_minimal.push_back(I);
    }
    r.mu = mu_sigma(r.weights);
    r.csck = csck_verdict(fan);

    if (split) {
        r.has_relative = true;
        r.splitting = *split;
        r.restricted = restrict_weights(r.weights, *split);
        r.restricted_idx = restricted_indices(r.weights, *split);
        r.mu_rel = mu_relative(r.weights, *split);
        r.extremal = extremal_verdict(fan, *split);
    }
    return r;
}

std::string emit_report_json(const AnalysisReport& r) {
    json doc;
    doc["fan"]["rank"] = 2;
    doc["fan"]["rays"] = json::array();
    for (const LatticeVector& v : r.fan.rays) doc["fan"]["rays"].push_back(coords_json(v.c));
    doc["fan"]["smooth"] = r.fan.smooth;
    doc["fan"]["complete"] = r.fan.complete;

    doc["weights"] = weights_json(r.weights);
    doc["weights"]["h1_total"] = h1_total(r.weights);
    doc["euler"]["expected"] = to_file_int(r.euler.expected);
    doc["euler"]["actual"] = to_file_int(r.euler.actual);
    doc["euler"]["ok"] = r.euler.ok;

    doc["roots"]["coords"] = json::array();
    doc["roots"]["labels"] = json::array();
    doc["roots"]["certifying_ray"] = json::array();
    for (const Root& root : r.roots.roots) {
        doc["roots"]["coords"].push_back(coords_json(root.alpha.c));
        doc["roots"]["labels"].push_back(weight_label(root.alpha));
        doc["roots"]["certifying_ray"].push_back(root.ray);
    }
    doc["roots"]["semisimple_pairs"] = json::array();
    for (auto [i, j] : r.roots.semisimple_pairs)
        doc["roots"]["semisimple_pairs"].push_back({i, j});
    doc["torus_maximal"] = r.torus_maximal;

    doc["nu_minimal"] = supports_json(r.nu_minimal);
    doc["mu"] = supports_json(r.mu);
    doc["verdict_csck"] = verdict_json(r.csck);

    if (r.has_relative) {
        json rel;
        rel["fixed_basis"] = json::array();
        for (const LatticeVector& v : r.splitting.fixed_basis)
            rel["fixed_basis"].push_back(coords_json(v.c));
        rel["complement_basis"] = json::array();
        for (const LatticeVector& v : r.splitting.complement_basis)
            rel["complement_basis"].push_back(coords_json(v.c));
        rel["restricted_weights"] = weights_json(r.restricted);
        rel["restricted_indices"] = r.restricted_idx;
        rel["mu_relative"] = supports_json(r.mu_rel);
        rel["verdict_extremal"] = verdict_json(r.extremal);
        doc["relative"] = std::move(rel);
    }
    return doc.dump(2) + "\n";
}

AnalysisReport parse_report_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        fail(errc::bad_parameter, std::string("report is not valid JSON: ") + e.what());
    }

    AnalysisReport r;
    const json& fan = expect(doc, "fan");
    std::vector<LatticeVector> rays;
    for (const json& entry : expect(fan, "rays")) rays.emplace_back(parse_coords(entry));
    r.fan = validate_surface_fan(rays);
    if (expect(fan, "smooth").get<bool>() != r.fan.smooth ||
        expect(fan, "complete").get<bool>() != r.fan.complete)
        fail(errc::bad_parameter, "report fan flags disagree with its rays");

    r.weights = parse_weights(expect(doc, "weights"));
    const json& euler = expect(doc, "euler");
    r.euler.expected = Int(static_cast<long>(expect(euler, "expected").get<long long>()));
    r.euler.actual = Int(static_cast<long>(expect(euler, "actual").get<long long>()));
    r.euler.ok = expect(euler, "ok").get<bool>();

    const json& roots = expect(doc, "roots");
    const json& root_coords = expect(roots, "coords");
    const json& root_rays = expect(roots, "certifying_ray");
    if (root_coords.size() != root_rays.size())
        fail(errc::bad_parameter, "root list lengths disagree");
    for (std::size_t i = 0; i < root_coords.size(); ++i)
        r.roots.roots.push_back(
            Root{DualVector(parse_coords(root_coords[i])), root_rays[i].get<std::size_t>()});
    for (const json& pair : expect(roots, "semisimple_pairs"))
        r.roots.semisimple_pairs.emplace_back(pair.at(0).get<std::size_t>(),
                                              pair.at(1).get<std::size_t>());
    r.torus_maximal = expect(doc, "torus_maximal").get<bool>();

    r.nu_minimal = parse_supports(expect(doc, "nu_minimal"));
    r.mu = parse_supports(expect(doc, "mu"));
    r.csck = parse_verdict(expect(doc, "verdict_csck"));

    if (doc.contains("relative")) {
        const json& rel = doc["relative"];
        r.has_relative = true;
        std::vector<LatticeVector> fixed, complement;
        for (const json& entry : expect(rel, "fixed_basis"))
            fixed.emplace_back(parse_coords(entry));
        for (const json& entry : expect(rel, "complement_basis"))
            complement.emplace_back(parse_coords(entry));
        r.splitting = make_splitting(std::move(fixed), std::move(complement));
        r.restricted = parse_weights(expect(rel, "restricted_weights"));
        r.restricted_idx = expect(rel, "restricted_indices").get<std::vector<std::size_t>>();
        r.mu_rel = parse_supports(expect(rel, "mu_relative"));
        r.extremal = parse_verdict(expect(rel, "verdict_extremal"));
    }
    return r;
}

std::string report_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "Fan: " << r.fan.size() << " rays, " << (r.fan.smooth ? "smooth" : "singular") << ", "
       << (r.fan.complete ? "complete" : "incomplete") << "\n";
    os << "Rays:";
    for (const LatticeVector& v : r.fan.rays) os << " " << coords_label(v.c);
    os << "\n";

    os << "Deformation weights: h1 total " << h1_total(r.weights) << "; dimension check "
       << r.euler.actual.get_str() << " against " << r.euler.expected.get_str() << " ("
       << (r.euler.ok ? "ok" : "MISMATCH") << ")\n";
    for (std::size_t i = 0; i < r.weights.weights.size(); ++i) {
        os << "  " << weight_label(r.weights.weights[i]) << "  dim " << r.weights.dims[i];
        if (i < r.weights.certifying_rays.size()) {
            os << "  certified by rays";
            for (std::size_t k : r.weights.certifying_rays[i])
                os << " " << coords_label(r.fan.rays[k].c);
        }
        os << "\n";
    }
    if (r.weights.weights.empty()) os << "  none (rigid)\n";

    os << "Roots (" << r.roots.roots.size() << "):";
    for (const Root& root : r.roots.roots) os << " " << weight_label(root.alpha);
    if (r.roots.roots.empty()) os << " none";
    os << "\n";
    os << "Opposite root pairs: " << r.roots.semisimple_pairs.size()
       << "; reductive part of Aut0 is the torus: " << (r.torus_maximal ? "yes" : "no") << "\n";

    os << "Minimal balanced supports:";
    for (const SupportSet& I : r.nu_minimal) os << " " << support_label(r.weights, I);
    if (r.nu_minimal.empty()) os << " none";
    os << "\n";
    os << "Polystable supports:";
    for (const SupportSet& I : r.mu) os << " " << support_label(r.weights, I);
    if (r.mu.empty()) os << " none";
    os << "\n";
    os << "Strata:\n";
    for (const Stratum& st : r.csck.strata) os << "  - " << st.description << "\n";
    os << "CSCK verdict: " << r.csck.statement << "\n";

    if (r.has_relative) {
        os << "Relative analysis, fixed subtorus basis:";
        for (const LatticeVector& v : r.splitting.fixed_basis) os << " " << coords_label(v.c);
        os << "\n";
        os << "  invariant weights:";
        for (const DualVector& w : r.restricted.weights) os << " " << weight_label(w);
        if (r.restricted.weights.empty()) os << " none";
        os << "\n";
        os << "  relative polystable supports:";
        for (const SupportSet& I : r.mu_rel) os << " " << support_label(r.weights, I);
        if (r.mu_rel.empty()) os << " none";
        os << "\n";
        os << "Extremal verdict: " << r.extremal.statement << "\n";
    }
    return os.str();
}

} // namespace torstab

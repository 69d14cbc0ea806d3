#include "torstab/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "torstab/constructions.hpp"
#include "torstab/fan_io.hpp"
#include "torstab/report.hpp"
#include "torstab/svg.hpp"

namespace torstab {

namespace {

std::vector<long> parse_long_list(const std::string& text, const char* what) {
    std::vector<long> out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        try {
            std::size_t used = 0;
            long v = std::stol(item, &used);
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
                ++used;
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            fail(errc::bad_parameter,
                 std::string(what) + " must be a comma-separated integer list, got \"" + text +
                     "\"");
        }
    }
    if (out.empty())
        fail(errc::bad_parameter, std::string(what) + " must not be empty");
    return out;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) fail(errc::bad_parameter, "cannot write " + path);
    f << text;
    if (!f) fail(errc::bad_parameter, "write failed for " + path);
}

int require_smooth(const Fan2D& fan, std::ostream& err) {
    if (fan.smooth) return 0;
    err << "fan is singular: cone";
    if (fan.singular_cones.size() > 1) err << "s";
    for (std::size_t k = 0; k < fan.singular_cones.size(); ++k) {
        std::size_t i = fan.singular_cones[k];
        err << (k ? ", " : " ") << coords_label(fan.rays[i].c) << ","
            << coords_label(fan.rays[(i + 1) % fan.size()].c);
    }
    err << ". Analysis needs a smooth fan; run `torstab resolve` on it first.\n";
    return 3;
}

int do_analyze(const std::string& fan_path, const std::string& splitting,
               const std::string& format, std::ostream& out, std::ostream& err) {
    Fan2D fan = load_fan2d(fan_path);
    if (int rc = require_smooth(fan, err)) return rc;

    std::optional<Splitting> split;
    if (!splitting.empty()) {
        std::vector<long> coords = parse_long_list(splitting, "--splitting");
        if (coords.size() != 2)
            fail(errc::bad_parameter, "--splitting needs exactly 2 coordinates");
        split = splitting_from_fixed_ray(LatticeVector{coords[0], coords[1]});
    }

    AnalysisReport report = analyze_fan(fan, split);
    out << (format == "json" ? emit_report_json(report) : report_text(report));
    return 0;
}

Fan2D build_spec_fan(const std::string& spec) {
    std::string head = spec, params;
    if (std::size_t colon = spec.find(':'); colon != std::string::npos) {
        head = spec.substr(0, colon);
        params = spec.substr(colon + 1);
    }
    auto one_param = [&](const char* what) {
        std::vector<long> v = parse_long_list(params, what);
        if (v.size() != 1) fail(errc::bad_parameter, std::string(what) + " needs one integer");
        return v[0];
    };
    if (head == "p2") return standard_fan({StandardFanSpec::Kind::ProjectivePlane, 0});
    if (head == "p1xp1") return standard_fan({StandardFanSpec::Kind::P1xP1, 0});
    if (head == "hirzebruch")
        return standard_fan({StandardFanSpec::Kind::Hirzebruch, one_param("hirzebruch degree")});
    if (head == "quotient-p1p1") {
        QuotientSpec q;
        q.kind = QuotientSpec::Kind::DiagonalP1xP1;
        q.q = one_param("quotient order");
        return quotient_fan(q);
    }
    if (head == "quotient-fa") {
        std::vector<long> v = parse_long_list(params, "quotient-fa parameters");
        if (v.size() != 2) fail(errc::bad_parameter, "quotient-fa needs \"a,p\"");
        QuotientSpec q;
        q.kind = QuotientSpec::Kind::HirzebruchQuotient;
        q.a = v[0];
        q.p = v[1];
        return quotient_fan(q);
    }
    if (head == "xhat2") return xhat2_fan(2, 3);
    fail(errc::bad_parameter,
         "unknown construction \"" + spec +
             "\" (expected p2 | p1xp1 | hirzebruch:a | quotient-p1p1:q | quotient-fa:a,p |"
             " xhat2)");
}

int do_construct(const std::string& spec, bool resolve, const std::vector<long>& blowups,
                 const std::string& out_path, std::ostream& out) {
    Fan2D fan = build_spec_fan(spec);
    if (resolve) fan = hj_resolve(fan);

    // Blow-up indices address the cones of the fan as built above, before
    // any of the blow-ups; descending application keeps them valid because
    // each inserted ray lands after the position it was derived from.
    std::vector<long> order = blowups;
    std::sort(order.rbegin(), order.rend());
    if (std::adjacent_find(order.begin(), order.end()) != order.end())
        fail(errc::bad_parameter, "duplicate --blowup index");
    std::size_t base_size = fan.size();
    for (long i : order) {
        if (i < 0 || static_cast<std::size_t>(i) >= base_size)
            fail(errc::bad_index, "--blowup index " + std::to_string(i) + " out of range 0.." +
                                      std::to_string(base_size - 1));
        fan = blow_up(fan, static_cast<std::size_t>(i));
    }
    write_output(emit_fan2d(fan), out_path, out);
    return 0;
}

int do_classify(const std::string& fan_path, const std::string& support, std::ostream& out,
                std::ostream& err) {
    Fan2D fan = load_fan2d(fan_path);
    if (int rc = require_smooth(fan, err)) return rc;
    WeightSystem ws = def_weights_surface(fan);

    SupportSet I;
    for (long k : parse_long_list(support, "--support")) {
        if (k < 1 || static_cast<std::size_t>(k) > ws.weights.size())
            fail(errc::bad_index, "support index " + std::to_string(k) + " out of range 1.." +
                                      std::to_string(ws.weights.size()));
        I.push_back(static_cast<std::size_t>(k - 1));
    }

    Classification c = classify_support(ws, I);
    out << "support {";
    for (std::size_t k = 0; k < c.support.size(); ++k)
        out << (k ? ", " : "") << weight_label(ws.weights[c.support[k]]);
    out << "}: " << stability_class_name(c.cls) << "\n";

    if (c.balanced) {
        out << "  balanced subfamily:";
        for (std::size_t k = 0; k < c.balanced->indices.size(); ++k)
            out << (k ? " +" : "") << " " << c.balanced->coefficients[k].get_str() << "*("
                << weight_label(ws.weights[c.balanced->indices[k]]) << ")";
        out << " = 0\n";
    }
    if (c.subspace)
        out << "  subspace witness: every negated support weight is a nonnegative"
               " combination of the support\n";
    if (c.separating)
        out << "  separating vector p = " << coords_label(c.separating->c)
            << ": pairings >= 0 on the support, > 0 with "
            << weight_label(ws.weights[*c.separating_strict]) << "\n";
    if (c.destabilizing)
        out << "  destabilizing one-parameter subgroup p = " << coords_label(c.destabilizing->c)
            << ": every support pairing >= 1\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"deformation and stability analysis of smooth compact toric surfaces"};
    app.require_subcommand(1);

    std::string fan_path, splitting, format = "text", spec, out_path, support;
    bool resolve = false;
    std::vector<long> blowups;

    CLI::App* analyze = app.add_subcommand(
        "analyze", "weights, roots, stability strata and verdicts for a fan file");
    analyze->add_option("fan", fan_path, "fan JSON file")->required();
    analyze->add_option("--splitting", splitting,
                        "fixed subtorus generator \"x,y\" for the relative analysis");
    analyze->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* construct = app.add_subcommand(
        "construct",
        "build a fan (p2 | p1xp1 | hirzebruch:a | quotient-p1p1:q | quotient-fa:a,p | xhat2)");
    construct->add_option("spec", spec, "construction spec")->required();
    construct->add_flag("--resolve", resolve, "resolve singular cones first");
    construct->add_option("--blowup", blowups,
                          "cone index to blow up (repeatable; indices address the fan before"
                          " any blow-up)");
    construct->add_option("-o,--output", out_path, "output file (default: stdout)");

    CLI::App* classify = app.add_subcommand(
        "classify", "classify a support of the weight system of a fan file");
    classify->add_option("fan", fan_path, "fan JSON file")->required();
    classify->add_option("--support", support, "1-based weight indices \"i,j,...\"")->required();

    CLI::App* resolve_cmd = app.add_subcommand("resolve", "minimal resolution of a fan file");
    resolve_cmd->add_option("fan", fan_path, "fan JSON file")->required();
    resolve_cmd->add_option("-o,--output", out_path, "output file (default: stdout)");

    CLI::App* svg = app.add_subcommand("svg", "render a fan file as SVG");
    svg->add_option("fan", fan_path, "fan JSON file")->required();
    svg->add_option("-o,--output", out_path, "output file (default: stdout)");

    std::vector<const char*> argv;
    argv.push_back("torstab");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*analyze) return do_analyze(fan_path, splitting, format, out, err);
        if (*construct) return do_construct(spec, resolve, blowups, out_path, out);
        if (*classify) return do_classify(fan_path, support, out, err);
        if (*resolve_cmd) {
            write_output(emit_fan2d(hj_resolve(load_fan2d(fan_path))), out_path, out);
            return 0;
        }
        if (*svg) {
            write_output(fan_svg(load_fan2d(fan_path)), out_path, out);
            return 0;
        }
    } catch (const TorstabError& e) {
        err << e.what() << "\n";
        return e.code == errc::not_smooth ? 3 : 2;
    }
    err << "no command given\n";
    return 2;
}

} // namespace torstab

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torstab/fan.hpp"
#include "torstab/roots.hpp"
#include "torstab/stability.hpp"
#include "torstab/weights.hpp"

namespace torstab {

// Everything the analyze command reports. The JSON form is the source of
// truth and round-trips through parse_report_json; the text form is a
// projection of the same facts.
struct AnalysisReport {
    Fan2D fan;
    WeightSystem weights;
    EulerCheck euler;
    RootSystem roots;
    bool torus_maximal = false;
    std::vector<SupportSet> nu_minimal; // inclusion-minimal balanced supports
    std::vector<SupportSet> mu;
    Verdict csck;

    bool has_relative = false;
    Splitting splitting;
    WeightSystem restricted;
    std::vector<std::size_t> restricted_idx; // surviving weights, full-system indices
    std::vector<SupportSet> mu_rel;          // full-system indices
    Verdict extremal;
};

AnalysisReport analyze_fan(const Fan2D& fan, const std::optional<Splitting>& split);

std::string emit_report_json(const AnalysisReport& r);
AnalysisReport parse_report_json(const std::string& text);
std::string report_text(const AnalysisReport& r);

} // namespace torstab

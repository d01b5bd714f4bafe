#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypermon/engine.hpp"
#include "hypermon/spec_analysis.hpp"

namespace hypermon {

struct SpecFlags {
    bool symmetric = false;
    bool transitive = false;
    bool reflexive = false;

    bool operator==(const SpecFlags&) const = default;
};

/// Summary of a monitoring run, printable as text or JSON.
struct SessionReport {
    std::string formula;
    std::string fragment;
    Verdict verdict;
    MonitorStats stats;
    ActiveOptimizations optimizations;
    std::optional<SpecFlags> spec_analysis;
    std::vector<std::string> warnings;

    bool operator==(const SessionReport&) const = default;
};

SessionReport make_report(const Session& s);

/// JSON with fixed field names; `parse_report` inverts it exactly.
std::string report_to_json(const SessionReport& r);
/// Throws Error on malformed input.
SessionReport parse_report(std::string_view json);

std::string report_to_text(const SessionReport& r);

/// Specification analysis as JSON or text, witnesses printed in trace-file form.
std::string analysis_to_json(const QuantifiedFormula& qf, const SpecAnalysisResult& r);
std::string analysis_to_text(const QuantifiedFormula& qf, const SpecAnalysisResult& r);

}  // namespace hypermon

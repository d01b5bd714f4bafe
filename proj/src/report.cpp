#include "hypermon/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "hypermon/error.hpp"
#include "hypermon/trace_io.hpp"

namespace hypermon {

using nlohmann::json;

namespace {

Verdict::Kind verdict_kind(const std::string& s) {
    for (auto k : {Verdict::Kind::clean, Verdict::Kind::violation, Verdict::Kind::current_satisfied,
                   Verdict::Kind::current_violated}) {
        if (to_string(k) == s) {
            return k;
        }
    }
    throw Error("unknown verdict '" + s + "'");
}

json witness_json(const std::optional<TraceAssignment>& w) {
    if (!w) {
        return nullptr;
    }
    json out = json::object();
    for (const auto& [var, trace] : *w) {
        out[var.name] = print_trace(trace);
    }
    return out;
}

json check_json(const PropertyCheck& c) {
    json j{{"holds", c.holds}, {"seconds", c.seconds}, {"witness", witness_json(c.witness)}};
    j["skipped"] = c.skipped ? json(*c.skipped) : json(nullptr);
    return j;
}

std::string mark(bool b) { return b ? "yes" : "no"; }

}  // namespace

SessionReport make_report(const Session& s) {
    SessionReport r;
    r.formula = to_string(s.formula());
    r.fragment = to_string(s.fragment());
    r.verdict = s.verdict();
    r.stats = s.stats();
    r.optimizations = s.optimizations();
    if (s.spec_analysis()) {
        r.spec_analysis = SpecFlags{s.spec_analysis()->symmetric(), s.spec_analysis()->transitive(),
                                    s.spec_analysis()->reflexive()};
    }
    r.warnings = s.warnings();
    return r;
}

std::string report_to_json(const SessionReport& r) {
    json j;
    j["formula"] = r.formula;
    j["fragment"] = r.fragment;
    j["verdict"] = to_string(r.verdict.kind);
    if (r.verdict.counterexample) {
        json tuple = json::array();
        for (const auto& [var, name] : r.verdict.counterexample->tuple) {
            tuple.push_back({{"variable", var.name}, {"trace", name}});
        }
        j["counterexample"] = {{"tuple", tuple},
                               {"rejecting_position", r.verdict.counterexample->rejecting_position}};
    } else {
        j["counterexample"] = nullptr;
    }
    j["stats"] = {{"traces_seen", r.stats.traces_seen},         {"traces_stored", r.stats.traces_stored},
                  {"instances_run", r.stats.instances_run},     {"inclusion_checks", r.stats.inclusion_checks},
                  {"wall_time_seconds", r.stats.wall_time}};
    j["optimizations"] = {{"trace_analysis", r.optimizations.trace_analysis},
                          {"symmetric", r.optimizations.symmetric},
                          {"reflexive", r.optimizations.reflexive},
                          {"transitive", r.optimizations.transitive}};
    if (r.spec_analysis) {
        j["spec_analysis"] = {{"symmetric", r.spec_analysis->symmetric},
                              {"transitive", r.spec_analysis->transitive},
                              {"reflexive", r.spec_analysis->reflexive}};
    } else {
        j["spec_analysis"] = nullptr;
    }
    j["warnings"] = r.warnings;
    return j.dump(2) + "\n";
}

SessionReport parse_report(std::string_view text) {
    try {
        const json j = json::parse(text);
        SessionReport r;
        r.formula = j.at("formula").get<std::string>();
        r.fragment = j.at("fragment").get<std::string>();
        r.verdict.kind = verdict_kind(j.at("verdict").get<std::string>());
        if (!j.at("counterexample").is_null()) {
            CounterExample ce;
            for (const auto& e : j.at("counterexample").at("tuple")) {
                ce.tuple.emplace_back(TraceVariable{e.at("variable").get<std::string>()},
                                      e.at("trace").get<std::string>());
            }
            ce.rejecting_position = j.at("counterexample").at("rejecting_position").get<std::size_t>();
            r.verdict.counterexample = std::move(ce);
        }
        const json& s = j.at("stats");
        r.stats.traces_seen = s.at("traces_seen").get<std::size_t>();
        r.stats.traces_stored = s.at("traces_stored").get<std::size_t>();
        r.stats.instances_run = s.at("instances_run").get<std::size_t>();
        r.stats.inclusion_checks = s.at("inclusion_checks").get<std::size_t>();
        r.stats.wall_time = s.at("wall_time_seconds").get<double>();
        const json& o = j.at("optimizations");
        r.optimizations = ActiveOptimizations{o.at("trace_analysis").get<bool>(), o.at("symmetric").get<bool>(),
                                              o.at("reflexive").get<bool>(), o.at("transitive").get<bool>()};
        if (!j.at("spec_analysis").is_null()) {
            const json& a = j.at("spec_analysis");
            r.spec_analysis =
                SpecFlags{a.at("symmetric").get<bool>(), a.at("transitive").get<bool>(), a.at("reflexive").get<bool>()};
        }
        r.warnings = j.at("warnings").get<std::vector<std::string>>();
        return r;
    } catch (const json::exception& e) {
        throw Error(std::string("malformed report: ") + e.what());
    }
}

std::string report_to_text(const SessionReport& r) {
    std::ostringstream out;
    out << "formula:        " << r.formula << "\n";
    out << "fragment:       " << r.fragment << "\n";
    out << "verdict:        " << to_string(r.verdict.kind) << "\n";
    if (r.verdict.counterexample) {
        out << "counterexample:";
        for (const auto& [var, name] : r.verdict.counterexample->tuple) {
            out << " " << var.name << "=" << name;
        }
        out << " (rejected at position " << r.verdict.counterexample->rejecting_position << ")\n";
    }
    out << "traces seen:    " << r.stats.traces_seen << "\n";
    out << "traces stored:  " << r.stats.traces_stored << "\n";
    out << "instances run:  " << r.stats.instances_run << "\n";
    out << "inclusions:     " << r.stats.inclusion_checks << "\n";
    out << "wall time:      " << std::fixed << std::setprecision(3) << r.stats.wall_time << " s\n";
    out << "optimizations:  trace-analysis=" << mark(r.optimizations.trace_analysis)
        << " symmetric=" << mark(r.optimizations.symmetric) << " reflexive=" << mark(r.optimizations.reflexive)
        << " transitive=" << mark(r.optimizations.transitive) << "\n";
    for (const auto& w : r.warnings) {
        out << "warning: " << w << "\n";
    }
    return out.str();
}

std::string analysis_to_json(const QuantifiedFormula& qf, const SpecAnalysisResult& r) {
    json j{{"formula", to_string(qf)},
           {"symmetric", check_json(r.symmetry)},
           {"transitive", check_json(r.transitivity)},
           {"reflexive", check_json(r.reflexivity)}};
    return j.dump(2) + "\n";
}

std::string analysis_to_text(const QuantifiedFormula& qf, const SpecAnalysisResult& r) {
    std::ostringstream out;
    out << "formula: " << to_string(qf) << "\n";
    auto line = [&](const char* label, const PropertyCheck& c) {
        out << label << (c.holds ? "yes" : "no") << "  (" << std::fixed << std::setprecision(3) << c.seconds
            << " s)";
        if (c.skipped) {
            out << "  not decided: " << *c.skipped;
        }
        out << "\n";
        if (c.witness) {
            for (const auto& [var, trace] : *c.witness) {
                out << "  witness " << var.name << ":";
                if (trace.empty()) {
                    out << " (empty trace)";
                }
                for (const auto& s : trace.steps) {
                    out << " ";
                    std::string step;
                    for (const auto& p : s) {
                        step += (step.empty() ? "" : ",") + p;
                    }
                    out << "{" << step << "}";
                }
                out << "\n";
            }
        }
    };
    line("symmetric:  ", r.symmetry);
    line("transitive: ", r.transitivity);
    line("reflexive:  ", r.reflexivity);
    return out.str();
}

}  // namespace hypermon

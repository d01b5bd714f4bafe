// hypermon: monitor trace corpora against HyperLTL specifications.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypermon/circuit.hpp"
#include "hypermon/engine.hpp"
#include "hypermon/error.hpp"
#include "hypermon/parser.hpp"
#include "hypermon/report.hpp"
#include "hypermon/spec_analysis.hpp"
#include "hypermon/trace_io.hpp"

namespace fs = std::filesystem;
using namespace hypermon;

namespace {

enum Exit { ok = 0, violated = 1, usage = 2, resource = 3 };

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) {
        throw Error("cannot read " + p.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

QuantifiedFormula read_spec(const fs::path& p) {
    try {
        return parse_formula(slurp(p));
    } catch (const ParseError& e) {
        throw ParseError(p.string() + ": " + e.what(), e.line(), e.column());
    }
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    f << text;
    if (!f) {
        throw Error("cannot write " + out);
    }
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

circuit::Kind kind_of(const std::string& name) {
    if (auto k = circuit::parse_kind(name)) {
        return *k;
    }
    throw Error("unknown circuit kind '" + name + "' (xor4, mux_comb, mux_seq, counter3)");
}

struct MonitorArgs {
    std::string spec;
    std::vector<std::string> traces;
    bool no_trace_analysis = false;
    bool no_spec_analysis = false;
    bool parallel = false;
    unsigned threads = 0;
    std::size_t state_limit = 0;
    bool continue_after_violation = false;
    std::string stats_format = "text";
    std::string out;
};

int cmd_monitor(const MonitorArgs& a) {
    SessionOptions o;
    o.trace_analysis = !a.no_trace_analysis;
    o.spec_analysis = !a.no_spec_analysis;
    o.parallel = a.parallel;
    o.threads = a.threads;
    o.continue_after_violation = a.continue_after_violation;
    if (a.state_limit) {
        o.limits.max_states = a.state_limit;
    }
    Session s(read_spec(a.spec), o);
    std::vector<fs::path> inputs(a.traces.begin(), a.traces.end());
    for (const auto& p : expand_trace_paths(inputs)) {
        Trace t;
        try {
            t = read_trace_file(p);
        } catch (const ParseError& e) {
            throw ParseError(p.string() + ": " + e.what(), e.line(), e.column());
        }
        const Verdict v = s.process_trace(t);
        if (v.kind == Verdict::Kind::violation && !a.continue_after_violation) {
            break;
        }
    }
    const SessionReport r = make_report(s);
    for (const auto& w : r.warnings) {
        std::cerr << "hypermon: warning: " << w << "\n";
    }
    emit(a.stats_format == "json" ? report_to_json(r) : report_to_text(r), a.out);
    return r.verdict.violated() ? violated : ok;
}

int cmd_analyze(const std::string& spec, const std::string& format, std::size_t state_limit) {
    const QuantifiedFormula qf = read_spec(spec);
    BuildLimits limits;
    if (state_limit) {
        limits.max_states = state_limit;
    }
    const SpecAnalysisResult r = analyze(qf, limits);
    std::cout << (format == "json" ? analysis_to_json(qf, r) : analysis_to_text(qf, r));
    return ok;
}

int cmd_gen(const std::string& kind_name, std::size_t n, std::size_t length, std::uint64_t seed,
            const std::string& out_dir, const std::vector<std::string>& bias_specs) {
    const circuit::Kind kind = kind_of(kind_name);
    if (n == 0 || length == 0) {
        throw Error("--n and --length must be at least 1");
    }
    circuit::Bias bias;
    for (const auto& b : bias_specs) {
        const auto eq = b.find('=');
        if (eq == std::string::npos) {
            throw Error("--bias expects name=probability, got '" + b + "'");
        }
        try {
            bias[b.substr(0, eq)] = std::stod(b.substr(eq + 1));
        } catch (const std::exception&) {
            throw Error("--bias expects name=probability, got '" + b + "'");
        }
    }
    const auto traces = circuit::random_traces(kind, n, length, seed, bias);
    fs::create_directories(out_dir);
    const int width = std::max<int>(4, int(std::to_string(n - 1).size()));
    nlohmann::json files = nlohmann::json::array();
    for (std::size_t i = 0; i < traces.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "trace_%0*zu", width, i);
        write_trace_file(fs::path(out_dir) / (std::string(name) + ".trace"), circuit::to_trace(traces[i], name));
        files.push_back(std::string(name) + ".trace");
    }
    nlohmann::json manifest{{"kind", circuit::to_string(kind)},
                            {"n", n},
                            {"length", length},
                            {"seed", seed},
                            {"bias", bias},
                            {"inputs", circuit::input_bits(kind)},
                            {"outputs", circuit::output_bits(kind)},
                            {"files", files}};
    std::ofstream(fs::path(out_dir) / "manifest.json") << manifest.dump(2) << "\n";
    return ok;
}

int cmd_property(const std::string& kind_name, const std::string& sources, const std::string& targets,
                 const std::string& out) {
    const circuit::Kind kind = kind_of(kind_name);
    const auto src = sources.empty() ? circuit::default_sources(kind) : split_list(sources);
    const auto tgt = targets.empty() ? circuit::default_targets(kind) : split_list(targets);
    emit(to_string(circuit::independence_property(kind, src, tgt)) + "\n", out);
    return ok;
}

int cmd_template(const std::string& spec, const std::string& dot_out, std::size_t state_limit) {
    const QuantifiedFormula qf = read_spec(spec);
    BuildLimits limits;
    if (state_limit) {
        limits.max_states = state_limit;
    }
    const auto m = build_template(qf.body(), qf.variables(), collect_alphabet(qf.body()), limits);
    emit(to_dot(m.dfa()), dot_out);
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Runtime monitoring of HyperLTL hyperproperties over finite traces"};
    app.require_subcommand(1);

    MonitorArgs margs;
    auto* monitor = app.add_subcommand("monitor", "Check trace files against a specification");
    monitor->add_option("spec", margs.spec, "Specification file")->required();
    monitor->add_option("traces", margs.traces, "Trace files or directories of .trace files")->required();
    monitor->add_flag("--no-trace-analysis", margs.no_trace_analysis, "Keep every trace instead of pruning");
    monitor->add_flag("--no-spec-analysis", margs.no_spec_analysis, "Skip the symmetry/transitivity/reflexivity checks");
    monitor->add_flag("--parallel", margs.parallel, "Check the tuples of each trace on several threads");
    monitor->add_option("--threads", margs.threads, "Worker threads for --parallel (default: all cores)");
    monitor->add_option("--state-limit", margs.state_limit, "Maximum automaton states");
    monitor->add_flag("--continue-after-violation", margs.continue_after_violation,
                      "Process every trace even after a violation");
    monitor->add_option("--stats-format", margs.stats_format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
    monitor->add_option("--out", margs.out, "Write the report here instead of standard output");

    std::string aspec;
    std::string aformat = "text";
    std::size_t alimit = 0;
    auto* analyze_cmd = app.add_subcommand("analyze", "Decide symmetry, transitivity and reflexivity");
    analyze_cmd->add_option("spec", aspec, "Specification file")->required();
    analyze_cmd->add_option("--format", aformat, "Output format")->check(CLI::IsMember({"text", "json"}));
    analyze_cmd->add_option("--state-limit", alimit, "Maximum automaton states");

    std::string gkind;
    std::size_t gn = 0;
    std::size_t glen = 0;
    std::uint64_t gseed = 0;
    std::string gout;
    std::vector<std::string> gbias;
    auto* gen = app.add_subcommand("gen", "Generate circuit traces by random simulation");
    gen->add_option("kind", gkind, "xor4, mux_comb, mux_seq or counter3")->required();
    gen->add_option("--n", gn, "Number of traces")->required();
    gen->add_option("--length", glen, "Steps per trace")->required();
    gen->add_option("--seed", gseed, "Random seed")->required();
    gen->add_option("--out", gout, "Output directory")->required();
    gen->add_option("--bias", gbias, "Input bit probability, e.g. incr=0.9 (repeatable)");

    std::string pkind;
    std::string psources;
    std::string ptargets;
    std::string pout;
    auto* property = app.add_subcommand("property", "Print the independence property for a circuit");
    property->add_option("kind", pkind, "xor4, mux_comb, mux_seq or counter3")->required();
    property->add_option("--sources", psources, "Comma-separated inputs allowed to influence nothing");
    property->add_option("--targets", ptargets, "Comma-separated outputs to protect");
    property->add_option("--out", pout, "Write the specification here instead of standard output");

    std::string tspec;
    std::string tdot = "-";
    std::size_t tlimit = 0;
    auto* templ = app.add_subcommand("template", "Export the monitor template as Graphviz DOT");
    templ->add_option("spec", tspec, "Specification file")->required();
    templ->add_option("--dot", tdot, "Output file (default: standard output)");
    templ->add_option("--state-limit", tlimit, "Maximum automaton states");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*monitor) {
            return cmd_monitor(margs);
        }
        if (*analyze_cmd) {
            return cmd_analyze(aspec, aformat, alimit);
        }
        if (*gen) {
            return cmd_gen(gkind, gn, glen, gseed, gout, gbias);
        }
        if (*property) {
            return cmd_property(pkind, psources, ptargets, pout);
        }
        if (*templ) {
            return cmd_template(tspec, tdot, tlimit);
        }
    } catch (const ResourceError& e) {
        std::cerr << "hypermon: resource limit: " << e.what() << "\n";
        return resource;
    } catch (const std::exception& e) {
        std::cerr << "hypermon: " << e.what() << "\n";
        return usage;
    }
    return usage;
}

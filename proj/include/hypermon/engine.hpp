#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypermon/formula.hpp"
#include "hypermon/monitor.hpp"
#include "hypermon/semantics.hpp"
#include "hypermon/spec_analysis.hpp"
#include "hypermon/trace_analysis.hpp"

namespace hypermon {

struct SessionOptions {
    bool trace_analysis = true;
    bool spec_analysis = true;
    bool parallel = false;
    /// Worker count for parallel tuple checks; 0 picks the hardware concurrency.
    unsigned threads = 0;
    /// Keep monitoring after the first violation instead of freezing the session.
    bool continue_after_violation = false;
    BuildLimits limits;
};

struct CounterExample {
    std::vector<std::pair<TraceVariable, std::string>> tuple;
    /// Length of the shortest prefix of the joint word after which no
    /// extension is accepted; the full length when only the end rejects.
    std::size_t rejecting_position = 0;

    bool operator==(const CounterExample&) const = default;
};

struct Verdict {
    /// clean and violation answer universal prefixes. Other prefixes are
    /// evaluated over the traces seen so far, and that answer may still flip:
    /// current_satisfied / current_violated.
    enum class Kind : unsigned char { clean, violation, current_satisfied, current_violated };

    Kind kind = Kind::clean;
    std::optional<CounterExample> counterexample;

    bool violated() const { return kind == Kind::violation || kind == Kind::current_violated; }
    bool operator==(const Verdict&) const = default;
};

std::string to_string(Verdict::Kind k);

struct MonitorStats {
    std::size_t traces_seen = 0;
    std::size_t traces_stored = 0;
    std::size_t instances_run = 0;
    std::size_t inclusion_checks = 0;
    double wall_time = 0.0;

    bool operator==(const MonitorStats&) const = default;
};

/// Reductions the tuple loop actually applies.
struct ActiveOptimizations {
    bool trace_analysis = false;
    bool symmetric = false;
    bool reflexive = false;
    bool transitive = false;

    bool operator==(const ActiveOptimizations&) const = default;
};

/// One monitoring run over a stream of traces.
class Session {
public:
    /// Builds the template and, for universal prefixes, runs specification
    /// analysis. Throws ResourceError when the template is too large.
    Session(QuantifiedFormula qf, SessionOptions options = {});
    ~Session();
    Session(Session&&) noexcept;
    Session& operator=(Session&&) noexcept;

    /// Checks every new tuple involving `t`. Throws Error on a duplicate trace name.
    Verdict process_trace(const Trace& t);

    /// First violation seen, or the latest answer when nothing was violated.
    const Verdict& verdict() const;
    MonitorStats stats() const;
    const TraceStore& store() const;
    const QuantifiedFormula& formula() const;
    const QuantifierClass& fragment() const;
    const ActiveOptimizations& optimizations() const;
    const std::optional<SpecAnalysisResult>& spec_analysis() const;
    const MonitorTemplate& monitor() const;
    /// Messages about ignored input, such as propositions the formula never mentions.
    const std::vector<std::string>& warnings() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

Session new_session(QuantifiedFormula qf, SessionOptions options = {});

}  // namespace hypermon

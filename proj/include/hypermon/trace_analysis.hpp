#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypermon/formula.hpp"
#include "hypermon/monitor.hpp"
#include "hypermon/semantics.hpp"

namespace hypermon {

/// Traces retained across monitoring steps, in insertion order.
struct TraceStore {
    std::vector<Trace> traces;
    /// (dropped trace, trace that dominated it)
    std::vector<std::pair<std::string, std::string>> dropped;
};

struct DominanceJudgment {
    std::string dominator;
    std::string dominated;
    QuantifierClass fragment;
    bool holds = false;
    std::size_t inclusion_checks = 0;
};

/// Language-inclusion dominance between traces for one template.
///
/// With t1 the dominator and t2 the candidate for removal:
///  - forall-n: L(M[t1/v]) ⊆ L(M[t2/v]) for every variable v;
///  - exists-n(2): L(M[t2/v]) ⊆ L(M[t1/v]) for both variables;
///  - forall-exists: L(M[t1/u]) ⊆ L(M[t2/u]) on the universal variable and
///    L(M[t2/e]) ⊆ L(M[t1/e]) on the existential one.
///
/// Instantiated templates are cached by trace contents.
class DominanceChecker {
public:
    /// `m` must have the prefix variables free, in prefix order.
    /// Throws FragmentError for unsupported prefixes.
    DominanceChecker(MonitorTemplate m, QuantifierClass fragment);

    bool dominates(const Trace& t1, const Trace& t2);
    DominanceJudgment judge(const Trace& t1, const Trace& t2);

    struct Outcome {
        /// Set when a stored trace dominates the fresh one; the store is unchanged.
        std::optional<std::string> discarded_by;
        /// Stored traces removed because the fresh trace dominates them.
        std::vector<std::string> removed;
    };

    /// Adds `fresh` to a redundancy-free store, keeping it redundancy-free.
    Outcome minimize(TraceStore& store, const Trace& fresh);

    std::size_t inclusion_checks() const { return inclusion_checks_; }
    const QuantifierClass& fragment() const { return fragment_; }

private:
    const MonitorTemplate& instance(const Trace& t, std::size_t var);
    bool included(const Trace& a, const Trace& b, std::size_t var);

    MonitorTemplate template_;
    QuantifierClass fragment_;
    std::map<std::pair<std::vector<Step>, std::size_t>, MonitorTemplate> cache_;
    std::size_t inclusion_checks_ = 0;
};

bool dominates(const MonitorTemplate& m, const QuantifierClass& fragment, const Trace& t1, const Trace& t2);

/// One step of store minimization: `fresh` is discarded if a stored trace
/// dominates it; otherwise stored traces it dominates are removed and it is
/// appended.
TraceStore minimize_store(const MonitorTemplate& m, const QuantifierClass& fragment, TraceStore store,
                          const Trace& fresh);

}  // namespace hypermon

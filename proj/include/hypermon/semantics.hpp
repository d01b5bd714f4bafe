#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hypermon/formula.hpp"

namespace hypermon {

/// One letter of a trace: the propositions that hold at that step.
using Step = std::set<std::string>;

/// A finite trace. The empty trace is a valid value.
struct Trace {
    std::string name;
    std::vector<Step> steps;

    std::size_t size() const { return steps.size(); }
    bool empty() const { return steps.empty(); }

    bool operator==(const Trace&) const = default;
};

using TraceAssignment = std::map<TraceVariable, Trace>;
using TraceSet = std::vector<Trace>;

/// t[i, j]: empty when i >= |t|, otherwise positions i..min(j, |t|-1).
Trace subsequence(const Trace& t, std::size_t i, std::size_t j);

/// Suffix of every mapped trace from position i.
TraceAssignment shift_assignment(const TraceAssignment& a, std::size_t i);

/// Finite-trace truth of a quantifier-free formula. Every operator,
/// including derived ones, is evaluated by its own semantic clause.
/// An atom on an exhausted trace is false. Throws UncoveredVariableError.
bool eval_body(const TraceAssignment& a, const Formula& f);

/// Truth of `f` on the assignment that maps every variable to the empty trace.
bool eps_eval(const Formula& f);

/// Quantifiers range over `traces`. Exponential in the prefix length.
bool eval_quantified(const TraceSet& traces, const QuantifiedFormula& qf);

}  // namespace hypermon

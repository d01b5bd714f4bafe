#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "hypermon/dfa.hpp"
#include "hypermon/formula.hpp"
#include "hypermon/semantics.hpp"

namespace hypermon {

struct BuildLimits {
    std::size_t max_states = 100000;
    /// Largest support size; the alphabet has 2^max_support letters.
    std::size_t max_support = 20;
    /// Largest number of one-step expansion clauses kept for a single state.
    std::size_t max_clauses = 200000;
};

/// Deterministic automaton for a quantifier-free body, built by formula
/// progression. A word w is accepted iff the trace assignment it encodes
/// satisfies the body, where missing positions read as empty letters.
/// The result is minimized. Throws ResourceError, SupportMismatchError.
Dfa compile_body(const Formula& body, const std::vector<AtomRef>& support, const BuildLimits& limits = {});

/// Automaton for a body with some trace variables still free.
class MonitorTemplate {
public:
    MonitorTemplate(Dfa dfa, std::vector<TraceVariable> free_variables, TraceAssignment bound = {});

    const Dfa& dfa() const { return dfa_; }
    const std::vector<TraceVariable>& free_variables() const { return free_variables_; }
    const TraceAssignment& bound() const { return bound_; }

    /// Letters of `t` placed on the atoms of variable `v`.
    std::vector<Letter> project(const Trace& t, const TraceVariable& v) const;

    /// Joint word of a full tuple: length max |t_i|, positions past the end of
    /// a trace contribute nothing. Throws ArityError.
    Word joint_word(const TraceAssignment& tuple) const;

    bool is_live(StateId q) const { return live_[q] != 0; }
    bool is_universal(StateId q) const { return universal_[q] != 0; }

private:
    Dfa dfa_;
    std::vector<TraceVariable> free_variables_;
    TraceAssignment bound_;
    std::vector<char> live_;
    std::vector<char> universal_;
};

/// Template for `body` with every variable in `vars` free. `support` must be
/// collect_alphabet(body) restricted to those variables (or a superset over them).
MonitorTemplate build_template(const Formula& body, const std::vector<TraceVariable>& vars,
                               const std::vector<AtomRef>& support, const BuildLimits& limits = {});

/// Fixes variable `v` to trace `t`. Throws VariableNotFreeError.
MonitorTemplate instantiate(const MonitorTemplate& m, const Trace& t, const TraceVariable& v);

/// Acceptance of a tuple covering exactly the free variables. Throws ArityError.
bool accepts(const MonitorTemplate& m, const TraceAssignment& tuple);

/// Decodes a word over `support` into one trace per variable by projection.
TraceAssignment decode_word(const std::vector<AtomRef>& support, const std::vector<TraceVariable>& vars,
                            std::span<const Letter> word);

}  // namespace hypermon

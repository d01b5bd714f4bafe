#pragma once

#include <optional>
#include <string>

#include "hypermon/formula.hpp"
#include "hypermon/monitor.hpp"
#include "hypermon/semantics.hpp"

namespace hypermon {

/// Outcome of one structural check on a body.
struct PropertyCheck {
    bool holds = false;
    /// Traces violating the property, when it fails on a decided instance.
    std::optional<TraceAssignment> witness;
    /// Why the check was not decided (unsupported prefix, resource limit).
    std::optional<std::string> skipped;
    double seconds = 0.0;
};

struct SpecAnalysisResult {
    PropertyCheck symmetry;
    PropertyCheck transitivity;
    PropertyCheck reflexivity;

    bool symmetric() const { return symmetry.holds; }
    bool transitive() const { return transitivity.holds; }
    bool reflexive() const { return reflexivity.holds; }
};

/// Body invariant under every permutation of the prefix variables. Requires a
/// single-block prefix with at least two variables; throws FragmentError
/// otherwise and ResourceError if an automaton is too large.
PropertyCheck check_symmetry(const QuantifiedFormula& qf, const BuildLimits& limits = {});

/// Body holds whenever every variable is bound to the same trace. Requires a
/// single-block prefix.
PropertyCheck check_reflexivity(const QuantifiedFormula& qf, const BuildLimits& limits = {});

/// psi(x, y) and psi(y, z) imply psi(x, z). Requires a two-variable
/// single-block prefix.
PropertyCheck check_transitivity(const QuantifiedFormula& qf, const BuildLimits& limits = {});

/// All three checks for a universal prefix. Never throws: undecided checks
/// report false with `skipped` set.
SpecAnalysisResult analyze(const QuantifiedFormula& qf, const BuildLimits& limits = {});

}  // namespace hypermon

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypermon/formula.hpp"

namespace hypermon {

/// A set of indexed atoms, bit i standing for `support[i]`.
using Letter = std::uint64_t;
using Word = std::vector<Letter>;
using StateId = std::uint32_t;

/// Complete deterministic automaton over the explicit alphabet 2^support.
///
/// Letters are grouped into classes that every state maps identically, so
/// the transition table has one column per class rather than per letter.
/// `letter_class` still has an entry for each of the 2^|support| letters.
class Dfa {
public:
    Dfa(std::vector<AtomRef> support, std::vector<std::uint32_t> letter_class, std::uint32_t num_classes,
        std::vector<StateId> delta, std::vector<char> accepting, StateId initial);

    const std::vector<AtomRef>& support() const { return support_; }
    std::size_t num_letters() const { return letter_class_.size(); }
    std::size_t num_states() const { return accepting_.size(); }
    std::uint32_t num_classes() const { return num_classes_; }
    StateId initial() const { return initial_; }
    bool accepting(StateId q) const { return accepting_[q] != 0; }

    std::uint32_t letter_class(Letter a) const { return letter_class_[a]; }
    std::span<const std::uint32_t> letter_classes() const { return letter_class_; }
    StateId next_by_class(StateId q, std::uint32_t c) const { return delta_[q * num_classes_ + c]; }
    StateId next(StateId q, Letter a) const { return next_by_class(q, letter_class_[a]); }

    /// Smallest letter of each class.
    const std::vector<Letter>& class_representatives() const { return representatives_; }

    StateId run(StateId from, std::span<const Letter> word) const;
    bool accepts(std::span<const Letter> word) const { return accepting(run(initial_, word)); }

private:
    std::vector<AtomRef> support_;
    std::vector<std::uint32_t> letter_class_;
    std::uint32_t num_classes_;
    std::vector<StateId> delta_;
    std::vector<char> accepting_;
    StateId initial_;
    std::vector<Letter> representatives_;
};

/// Language-preserving minimal automaton (unreachable states removed,
/// Hopcroft refinement, equal letter classes merged).
Dfa minimize(const Dfa& d);

Dfa complement(const Dfa& d);

/// Product automaton; `conjunctive` selects intersection, otherwise union.
/// Throws SupportMismatchError.
Dfa product(const Dfa& a, const Dfa& b, bool conjunctive);

struct EmptinessResult {
    bool empty;
    /// Shortest accepting word, least letters first; present iff not empty.
    std::optional<Word> witness;
};

EmptinessResult is_empty(const Dfa& d);

struct InclusionResult {
    bool included;
    /// Shortest word in L(a) \ L(b); present iff not included.
    std::optional<Word> counterexample;
};

/// L(a) ⊆ L(b). Throws SupportMismatchError.
InclusionResult language_included(const Dfa& a, const Dfa& b);

/// States from which some accepting state is reachable.
std::vector<char> live_states(const Dfa& d);

/// States from which only accepting states are reachable.
std::vector<char> universal_states(const Dfa& d);

/// Renders a letter as `{a@p,b@q}`.
std::string letter_to_string(const std::vector<AtomRef>& support, Letter a);

/// Graphviz rendering; accepting states are double circles and each edge
/// lists its letters.
std::string to_dot(const Dfa& d, std::size_t max_letters_per_edge = 16);

}  // namespace hypermon

#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hypermon {

struct TraceVariable {
    std::string name;

    auto operator<=>(const TraceVariable&) const = default;
};

/// An indexed atom `proposition@variable`. Ordered by proposition, then variable.
struct AtomRef {
    std::string proposition;
    TraceVariable variable;

    auto operator<=>(const AtomRef&) const = default;
};

enum class Op : unsigned char {
    atom,
    tt,
    ff,
    lnot,
    lor,
    land,
    implies,
    iff,
    lxor,
    next,
    until,
    weak_until,
    release,
    globally,
    finally,
};

/// Number of operands an operator takes, or -1 for the n-ary `lor`/`land`.
int arity(Op op);

/// Immutable quantifier-free temporal formula. Copies share structure.
///
/// Comparison is structural; `<=>` gives the canonical argument order used
/// by `simplify`.
class Formula {
public:
    Op op() const;
    const AtomRef& atom() const;
    std::span<const Formula> args() const;
    const Formula& arg(std::size_t i) const { return args()[i]; }

    /// Number of nodes in the syntax tree.
    std::size_t size() const;
    std::size_t depth() const;

    friend bool operator==(const Formula& a, const Formula& b);
    friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

    // Constructors. `make` checks the operand count.
    static Formula make(Op op, std::vector<Formula> args);
    static Formula make_atom(AtomRef atom);

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

Formula atom(std::string proposition, std::string variable);
Formula tt();
Formula ff();
Formula lnot(Formula f);
Formula lor(Formula a, Formula b);
Formula land(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula lxor(Formula a, Formula b);
Formula next(Formula f);
Formula until(Formula a, Formula b);
Formula weak_until(Formula a, Formula b);
Formula release(Formula a, Formula b);
Formula globally(Formula f);
Formula finally(Formula f);

/// n-ary helpers; the empty conjunction is `true`, the empty disjunction `false`.
Formula conjunction(std::vector<Formula> fs);
Formula disjunction(std::vector<Formula> fs);

enum class Quantifier : unsigned char { forall, exists };

struct Binder {
    Quantifier quantifier;
    TraceVariable variable;

    bool operator==(const Binder&) const = default;
};

/// A closed HyperLTL formula: quantifier prefix plus quantifier-free body.
class QuantifiedFormula {
public:
    /// Throws DuplicateBinderError or UnboundVariableError.
    QuantifiedFormula(std::vector<Binder> prefix, Formula body);

    const std::vector<Binder>& prefix() const { return prefix_; }
    const Formula& body() const { return body_; }
    std::vector<TraceVariable> variables() const;

    bool operator==(const QuantifiedFormula&) const = default;

private:
    std::vector<Binder> prefix_;
    Formula body_;
};

struct QuantifierClass {
    enum class Kind : unsigned char { forall_n, exists_n, forall_exists, other };

    Kind kind = Kind::other;
    std::size_t n = 0;
    /// Prefix shape such as "AEA"; filled for every kind.
    std::string shape;

    bool operator==(const QuantifierClass&) const = default;
};

std::string to_string(const QuantifierClass& c);

/// Rewrites into the core operators atom/true/not/or/next/until.
Formula desugar(const Formula& f);

/// Double negation, idempotence and constant folding of `or`, with flattened
/// and sorted disjuncts. Idempotent.
Formula simplify(const Formula& f);

/// Replaces variables of atoms per `map`; variables missing from the map are kept.
Formula rename_variables(const Formula& f, const std::map<TraceVariable, TraceVariable>& map);

QuantifierClass classify_prefix(const QuantifiedFormula& qf);

/// Indexed atoms of the body, sorted by proposition, then variable.
std::vector<AtomRef> collect_alphabet(const Formula& f);
std::vector<AtomRef> collect_alphabet(const QuantifiedFormula& qf);

/// Trace variables occurring in atoms of `f`, sorted.
std::vector<TraceVariable> free_variables(const Formula& f);

/// Concrete syntax accepted by `parse_formula`; binary operators are
/// fully parenthesized.
std::string to_string(const Formula& f);
std::string to_string(const QuantifiedFormula& qf);
std::string to_string(const AtomRef& a);

}  // namespace hypermon

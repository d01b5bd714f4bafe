#include "hypermon/formula.hpp"

#include <algorithm>
#include <set>

#include "hypermon/error.hpp"

namespace hypermon {

struct Formula::Node {
    Op op;
    AtomRef atom;
    std::vector<Formula> args;
    std::size_t size;
    std::size_t depth;
};

int arity(Op op) {
    switch (op) {
    case Op::atom:
    case Op::tt:
    case Op::ff:
        return 0;
    case Op::lnot:
    case Op::next:
    case Op::globally:
    case Op::finally:
        return 1;
    case Op::implies:
    case Op::iff:
    case Op::lxor:
    case Op::until:
    case Op::weak_until:
    case Op::release:
        return 2;
    case Op::lor:
    case Op::land:
        return -1;
    }
    return 0;
}

Op Formula::op() const { return node_->op; }
const AtomRef& Formula::atom() const { return node_->atom; }
std::span<const Formula> Formula::args() const { return node_->args; }
std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::depth() const { return node_->depth; }

Formula Formula::make(Op op, std::vector<Formula> args) {
    if (op == Op::atom) {
        throw Error("Formula::make: use make_atom for atoms");
    }
    const int k = arity(op);
    if (k >= 0 && static_cast<std::size_t>(k) != args.size()) {
        throw Error("Formula::make: wrong operand count");
    }
    if (k < 0 && args.size() < 2) {
        throw Error("Formula::make: n-ary operator needs at least two operands");
    }
    std::size_t size = 1;
    std::size_t depth = 0;
    for (const auto& a : args) {
        size += a.size();
        depth = std::max(depth, a.depth());
    }
    if (!args.empty()) {
        ++depth;
    }
    return Formula(std::make_shared<const Node>(Node{op, AtomRef{}, std::move(args), size, depth}));
}

Formula Formula::make_atom(AtomRef atom) {
    return Formula(std::make_shared<const Node>(Node{Op::atom, std::move(atom), {}, 1, 0}));
}

bool operator==(const Formula& a, const Formula& b) {
    return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) {
        return std::strong_ordering::equal;
    }
    if (auto c = a.op() <=> b.op(); c != 0) {
        return c;
    }
    if (a.op() == Op::atom) {
        return a.atom() <=> b.atom();
    }
    const auto& xs = a.node_->args;
    const auto& ys = b.node_->args;
    if (auto c = xs.size() <=> ys.size(); c != 0) {
        return c;
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (auto c = xs[i] <=> ys[i]; c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

Formula atom(std::string proposition, std::string variable) {
    return Formula::make_atom(AtomRef{std::move(proposition), TraceVariable{std::move(variable)}});
}
Formula tt() { return Formula::make(Op::tt, {}); }
Formula ff() { return Formula::make(Op::ff, {}); }
Formula lnot(Formula f) { return Formula::make(Op::lnot, {std::move(f)}); }
Formula lor(Formula a, Formula b) { return Formula::make(Op::lor, {std::move(a), std::move(b)}); }
Formula land(Formula a, Formula b) { return Formula::make(Op::land, {std::move(a), std::move(b)}); }
Formula implies(Formula a, Formula b) { return Formula::make(Op::implies, {std::move(a), std::move(b)}); }
Formula iff(Formula a, Formula b) { return Formula::make(Op::iff, {std::move(a), std::move(b)}); }
Formula lxor(Formula a, Formula b) { return Formula::make(Op::lxor, {std::move(a), std::move(b)}); }
Formula next(Formula f) { return Formula::make(Op::next, {std::move(f)}); }
Formula until(Formula a, Formula b) { return Formula::make(Op::until, {std::move(a), std::move(b)}); }
Formula weak_until(Formula a, Formula b) {
    return Formula::make(Op::weak_until, {std::move(a), std::move(b)});
}
Formula release(Formula a, Formula b) { return Formula::make(Op::release, {std::move(a), std::move(b)}); }
Formula globally(Formula f) { return Formula::make(Op::globally, {std::move(f)}); }
Formula finally(Formula f) { return Formula::make(Op::finally, {std::move(f)}); }

Formula conjunction(std::vector<Formula> fs) {
    if (fs.empty()) {
        return tt();
    }
    if (fs.size() == 1) {
        return fs.front();
    }
    return Formula::make(Op::land, std::move(fs));
}

Formula disjunction(std::vector<Formula> fs) {
    if (fs.empty()) {
        return ff();
    }
    if (fs.size() == 1) {
        return fs.front();
    }
    return Formula::make(Op::lor, std::move(fs));
}

// ---------------------------------------------------------------------------

QuantifiedFormula::QuantifiedFormula(std::vector<Binder> prefix, Formula body)
    : prefix_(std::move(prefix)), body_(std::move(body)) {
    std::set<TraceVariable> bound;
    for (const auto& b : prefix_) {
        if (b.variable.name.empty()) {
            throw Error("empty trace variable name");
        }
        if (!bound.insert(b.variable).second) {
            throw DuplicateBinderError("trace variable '" + b.variable.name + "' is bound twice");
        }
    }
    for (const auto& v : free_variables(body_)) {
        if (!bound.contains(v)) {
            throw UnboundVariableError("trace variable '" + v.name + "' is not bound");
        }
    }
}

std::vector<TraceVariable> QuantifiedFormula::variables() const {
    std::vector<TraceVariable> vs;
    vs.reserve(prefix_.size());
    for (const auto& b : prefix_) {
        vs.push_back(b.variable);
    }
    return vs;
}

std::string to_string(const QuantifierClass& c) {
    switch (c.kind) {
    case QuantifierClass::Kind::forall_n:
        return "forall-n(" + std::to_string(c.n) + ")";
    case QuantifierClass::Kind::exists_n:
        return "exists-n(" + std::to_string(c.n) + ")";
    case QuantifierClass::Kind::forall_exists:
        return "forall-exists";
    case QuantifierClass::Kind::other:
        break;
    }
    return "other(" + c.shape + ")";
}

QuantifierClass classify_prefix(const QuantifiedFormula& qf) {
    QuantifierClass c;
    std::size_t foralls = 0;
    for (const auto& b : qf.prefix()) {
        const bool universal = b.quantifier == Quantifier::forall;
        c.shape.push_back(universal ? 'A' : 'E');
        foralls += universal ? 1 : 0;
    }
    c.n = qf.prefix().size();
    if (c.n > 0 && foralls == c.n) {
        c.kind = QuantifierClass::Kind::forall_n;
    } else if (c.n > 0 && foralls == 0) {
        c.kind = QuantifierClass::Kind::exists_n;
    } else if (c.shape == "AE") {
        c.kind = QuantifierClass::Kind::forall_exists;
    }
    return c;
}

// ---------------------------------------------------------------------------

namespace {

Formula rebuild(const Formula& f, std::vector<Formula> args) {
    return Formula::make(f.op(), std::move(args));
}

}  // namespace

Formula desugar(const Formula& f) {
    if (f.op() == Op::atom || f.op() == Op::tt) {
        return f;
    }
    std::vector<Formula> a;
    for (const auto& x : f.args()) {
        a.push_back(desugar(x));
    }
    auto g = [](const Formula& x) { return lnot(until(tt(), lnot(x))); };
    auto conj = [](const Formula& x, const Formula& y) { return lnot(lor(lnot(x), lnot(y))); };
    auto impl = [](const Formula& x, const Formula& y) { return lor(lnot(x), y); };
    switch (f.op()) {
    case Op::ff:
        return lnot(tt());
    case Op::lnot:
    case Op::next:
    case Op::until:
        return rebuild(f, std::move(a));
    case Op::lor: {
        Formula acc = a[0];
        for (std::size_t i = 1; i < a.size(); ++i) {
            acc = lor(acc, a[i]);
        }
        return acc;
    }
    case Op::land: {
        Formula acc = a[0];
        for (std::size_t i = 1; i < a.size(); ++i) {
            acc = conj(acc, a[i]);
        }
        return acc;
    }
    case Op::implies:
        return impl(a[0], a[1]);
    case Op::iff:
        return conj(impl(a[0], a[1]), impl(a[1], a[0]));
    case Op::lxor:
        return lnot(conj(impl(a[0], a[1]), impl(a[1], a[0])));
    case Op::finally:
        return until(tt(), a[0]);
    case Op::globally:
        return g(a[0]);
    case Op::weak_until:
        return lor(until(a[0], a[1]), g(a[0]));
    case Op::release:
        return lnot(until(lnot(a[0]), lnot(a[1])));
    default:
        break;
    }
    return f;
}

namespace {

bool is_false(const Formula& f) {
    return f.op() == Op::ff || (f.op() == Op::lnot && f.arg(0).op() == Op::tt);
}

}  // namespace

Formula simplify(const Formula& f) {
    switch (f.op()) {
    case Op::atom:
    case Op::tt:
        return f;
    case Op::ff:
        return lnot(tt());
    case Op::lnot: {
        Formula x = simplify(f.arg(0));
        if (x.op() == Op::lnot) {
            return x.arg(0);
        }
        return lnot(x);
    }
    case Op::lor: {
        std::vector<Formula> flat;
        for (const auto& a : f.args()) {
            Formula x = simplify(a);
            if (x.op() == Op::tt) {
                return tt();
            }
            if (is_false(x)) {
                continue;
            }
            if (x.op() == Op::lor) {
                flat.insert(flat.end(), x.args().begin(), x.args().end());
            } else {
                flat.push_back(x);
            }
        }
        std::sort(flat.begin(), flat.end());
        flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
        if (flat.empty()) {
            return lnot(tt());
        }
        return disjunction(std::move(flat));
    }
    default: {
        std::vector<Formula> a;
        for (const auto& x : f.args()) {
            a.push_back(simplify(x));
        }
        return rebuild(f, std::move(a));
    }
    }
}

Formula rename_variables(const Formula& f, const std::map<TraceVariable, TraceVariable>& map) {
    if (f.op() == Op::atom) {
        auto it = map.find(f.atom().variable);
        if (it == map.end()) {
            return f;
        }
        return Formula::make_atom(AtomRef{f.atom().proposition, it->second});
    }
    if (f.args().empty()) {
        return f;
    }
    std::vector<Formula> a;
    for (const auto& x : f.args()) {
        a.push_back(rename_variables(x, map));
    }
    return rebuild(f, std::move(a));
}

namespace {

void collect(const Formula& f, std::set<AtomRef>& out) {
    if (f.op() == Op::atom) {
        out.insert(f.atom());
        return;
    }
    for (const auto& a : f.args()) {
        collect(a, out);
    }
}

}  // namespace

std::vector<AtomRef> collect_alphabet(const Formula& f) {
    std::set<AtomRef> s;
    collect(f, s);
    return {s.begin(), s.end()};
}

std::vector<AtomRef> collect_alphabet(const QuantifiedFormula& qf) { return collect_alphabet(qf.body()); }

std::vector<TraceVariable> free_variables(const Formula& f) {
    std::set<TraceVariable> vs;
    for (const auto& a : collect_alphabet(f)) {
        vs.insert(a.variable);
    }
    return {vs.begin(), vs.end()};
}

// ---------------------------------------------------------------------------

namespace {

const char* symbol(Op op) {
    switch (op) {
    case Op::lor:
        return "|";
    case Op::land:
        return "&";
    case Op::implies:
        return "->";
    case Op::iff:
        return "<->";
    case Op::lxor:
        return "^";
    case Op::until:
        return "U";
    case Op::weak_until:
        return "W";
    case Op::release:
        return "R";
    case Op::lnot:
        return "!";
    case Op::next:
        return "X ";
    case Op::globally:
        return "G ";
    case Op::finally:
        return "F ";
    default:
        return "?";
    }
}

bool is_unary(Op op) { return arity(op) == 1; }

}  // namespace

std::string to_string(const AtomRef& a) { return a.proposition + "@" + a.variable.name; }

std::string to_string(const Formula& f) {
    switch (f.op()) {
    case Op::atom:
        return to_string(f.atom());
    case Op::tt:
        return "true";
    case Op::ff:
        return "false";
    default:
        break;
    }
    if (is_unary(f.op())) {
        return symbol(f.op()) + to_string(f.arg(0));
    }
    std::string out = "(";
    for (std::size_t i = 0; i < f.args().size(); ++i) {
        if (i > 0) {
            out += " ";
            out += symbol(f.op());
            out += " ";
        }
        out += to_string(f.arg(i));
    }
    return out + ")";
}

std::string to_string(const QuantifiedFormula& qf) {
    std::string out;
    for (const auto& b : qf.prefix()) {
        out += b.quantifier == Quantifier::forall ? "forall " : "exists ";
        out += b.variable.name + ". ";
    }
    return out + to_string(qf.body());
}

}  // namespace hypermon

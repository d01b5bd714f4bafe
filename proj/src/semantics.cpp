#include "hypermon/semantics.hpp"

#include <algorithm>
#include <functional>

#include "hypermon/error.hpp"

namespace hypermon {

Trace subsequence(const Trace& t, std::size_t i, std::size_t j) {
    Trace out{t.name, {}};
    if (i >= t.size()) {
        return out;
    }
    const std::size_t last = std::min(j, t.size() - 1);
    if (last >= i) {
        out.steps.assign(t.steps.begin() + static_cast<std::ptrdiff_t>(i),
                         t.steps.begin() + static_cast<std::ptrdiff_t>(last) + 1);
    }
    return out;
}

TraceAssignment shift_assignment(const TraceAssignment& a, std::size_t i) {
    TraceAssignment out;
    for (const auto& [v, t] : a) {
        out.emplace(v, t.empty() ? t : subsequence(t, i, t.size() - 1));
    }
    return out;
}

namespace {

// Evaluates at suffix offset `at`; identical to evaluating on
// shift_assignment(a, at) without copying traces.
class Evaluator {
public:
    explicit Evaluator(const TraceAssignment& a) : a_(a) {
        for (const auto& [v, t] : a) {
            horizon_ = std::max(horizon_, t.size());
        }
    }

    bool eval(const Formula& f, std::size_t at) const {
        // Every suffix from `horizon_` on is the all-empty assignment.
        at = std::min(at, horizon_);
        switch (f.op()) {
        case Op::atom: {
            auto it = a_.find(f.atom().variable);
            if (it == a_.end()) {
                throw UncoveredVariableError("no trace assigned to '" + f.atom().variable.name + "'");
            }
            const Trace& t = it->second;
            return at < t.size() && t.steps[at].contains(f.atom().proposition);
        }
        case Op::tt:
            return true;
        case Op::ff:
            return false;
        case Op::lnot:
            return !eval(f.arg(0), at);
        case Op::lor:
            return std::any_of(f.args().begin(), f.args().end(), [&](const Formula& g) { return eval(g, at); });
        case Op::land:
            return std::all_of(f.args().begin(), f.args().end(), [&](const Formula& g) { return eval(g, at); });
        case Op::implies:
            return !eval(f.arg(0), at) || eval(f.arg(1), at);
        case Op::iff:
            return eval(f.arg(0), at) == eval(f.arg(1), at);
        case Op::lxor:
            return eval(f.arg(0), at) != eval(f.arg(1), at);
        case Op::next:
            return eval(f.arg(0), at + 1);
        case Op::until:
            return until_holds(f.arg(0), f.arg(1), at);
        case Op::weak_until:
            return until_holds(f.arg(0), f.arg(1), at) || always(f.arg(0), at);
        case Op::release:
            // psi holds up to and including the first position where phi holds, or forever.
            for (std::size_t i = at; i <= horizon_; ++i) {
                if (!eval(f.arg(1), i)) {
                    return false;
                }
                if (eval(f.arg(0), i)) {
                    return true;
                }
            }
            return true;
        case Op::globally:
            return always(f.arg(0), at);
        case Op::finally:
            for (std::size_t i = at; i <= horizon_; ++i) {
                if (eval(f.arg(0), i)) {
                    return true;
                }
            }
            return false;
        }
        return false;
    }

private:
    bool until_holds(const Formula& lhs, const Formula& rhs, std::size_t at) const {
        for (std::size_t i = at; i <= horizon_; ++i) {
            if (eval(rhs, i)) {
                return true;
            }
            if (!eval(lhs, i)) {
                return false;
            }
        }
        return false;
    }

    bool always(const Formula& f, std::size_t at) const {
        for (std::size_t i = at; i <= horizon_; ++i) {
            if (!eval(f, i)) {
                return false;
            }
        }
        return true;
    }

    const TraceAssignment& a_;
    std::size_t horizon_ = 0;
};

}  // namespace

bool eval_body(const TraceAssignment& a, const Formula& f) { return Evaluator(a).eval(f, 0); }

bool eps_eval(const Formula& f) {
    switch (f.op()) {
    case Op::atom:
        return false;
    case Op::tt:
        return true;
    case Op::ff:
        return false;
    case Op::lnot:
        return !eps_eval(f.arg(0));
    case Op::lor:
        return std::any_of(f.args().begin(), f.args().end(), [](const Formula& g) { return eps_eval(g); });
    case Op::land:
        return std::all_of(f.args().begin(), f.args().end(), [](const Formula& g) { return eps_eval(g); });
    case Op::implies:
        return !eps_eval(f.arg(0)) || eps_eval(f.arg(1));
    case Op::iff:
        return eps_eval(f.arg(0)) == eps_eval(f.arg(1));
    case Op::lxor:
        return eps_eval(f.arg(0)) != eps_eval(f.arg(1));
    case Op::next:
    case Op::globally:
    case Op::finally:
        return eps_eval(f.arg(0));
    case Op::until:
    case Op::release:
        return eps_eval(f.arg(1));
    case Op::weak_until:
        return eps_eval(f.arg(1)) || eps_eval(f.arg(0));
    }
    return false;
}

bool eval_quantified(const TraceSet& traces, const QuantifiedFormula& qf) {
    TraceAssignment a;
    const auto& prefix = qf.prefix();
    std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
        if (k == prefix.size()) {
            return eval_body(a, qf.body());
        }
        const bool universal = prefix[k].quantifier == Quantifier::forall;
        for (const auto& t : traces) {
            a.insert_or_assign(prefix[k].variable, t);
            const bool r = rec(k + 1);
            if (r != universal) {
                a.erase(prefix[k].variable);
                return r;
            }
        }
        a.erase(prefix[k].variable);
        return universal;
    };
    return rec(0);
}

}  // namespace hypermon

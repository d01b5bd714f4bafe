#include "hypermon/trace_analysis.hpp"

#include "hypermon/error.hpp"

namespace hypermon {

DominanceChecker::DominanceChecker(MonitorTemplate m, QuantifierClass fragment)
    : template_(std::move(m)), fragment_(std::move(fragment)) {
    using Kind = QuantifierClass::Kind;
    const bool supported = (fragment_.kind == Kind::forall_n && fragment_.n >= 1) ||
                           (fragment_.kind == Kind::exists_n && fragment_.n == 2) ||
                           fragment_.kind == Kind::forall_exists;
    if (!supported) {
        throw FragmentError("trace dominance is not defined for prefix " + to_string(fragment_));
    }
    if (template_.free_variables().size() != fragment_.n) {
        throw FragmentError("template and prefix disagree on the number of variables");
    }
}

const MonitorTemplate& DominanceChecker::instance(const Trace& t, std::size_t var) {
    auto key = std::make_pair(t.steps, var);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
        it = cache_.emplace(std::move(key), hypermon::instantiate(template_, t, template_.free_variables()[var]))
                 .first;
    }
    return it->second;
}

bool DominanceChecker::included(const Trace& a, const Trace& b, std::size_t var) {
    ++inclusion_checks_;
    return language_included(instance(a, var).dfa(), instance(b, var).dfa()).included;
}

bool DominanceChecker::dominates(const Trace& t1, const Trace& t2) { return judge(t1, t2).holds; }

DominanceJudgment DominanceChecker::judge(const Trace& t1, const Trace& t2) {
    DominanceJudgment j{t1.name, t2.name, fragment_, false, 0};
    if (t1.steps == t2.steps) {
        j.holds = true;
        return j;
    }
    const std::size_t before = inclusion_checks_;
    using Kind = QuantifierClass::Kind;
    bool holds = true;
    switch (fragment_.kind) {
    case Kind::forall_n:
        for (std::size_t v = 0; v < fragment_.n && holds; ++v) {
            holds = included(t1, t2, v);
        }
        break;
    case Kind::exists_n:
        holds = included(t2, t1, 0) && included(t2, t1, 1);
        break;
    case Kind::forall_exists:
        holds = included(t1, t2, 0) && included(t2, t1, 1);
        break;
    case Kind::other:
        holds = false;
        break;
    }
    j.holds = holds;
    j.inclusion_checks = inclusion_checks_ - before;
    return j;
}

DominanceChecker::Outcome DominanceChecker::minimize(TraceStore& store, const Trace& fresh) {
    Outcome out;
    for (const auto& t : store.traces) {
        if (dominates(t, fresh)) {
            store.dropped.emplace_back(fresh.name, t.name);
            out.discarded_by = t.name;
            return out;
        }
    }
    std::vector<Trace> kept;
    kept.reserve(store.traces.size() + 1);
    for (auto& t : store.traces) {
        if (dominates(fresh, t)) {
            store.dropped.emplace_back(t.name, fresh.name);
            out.removed.push_back(t.name);
        } else {
            kept.push_back(std::move(t));
        }
    }
    kept.push_back(fresh);
    store.traces = std::move(kept);
    return out;
}

bool dominates(const MonitorTemplate& m, const QuantifierClass& fragment, const Trace& t1, const Trace& t2) {
    return DominanceChecker(m, fragment).dominates(t1, t2);
}

TraceStore minimize_store(const MonitorTemplate& m, const QuantifierClass& fragment, TraceStore store,
                          const Trace& fresh) {
    DominanceChecker(m, fragment).minimize(store, fresh);
    return store;
}

}  // namespace hypermon

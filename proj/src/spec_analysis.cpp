#include "hypermon/spec_analysis.hpp"

#include <chrono>
#include <map>
#include <set>

#include "hypermon/error.hpp"

namespace hypermon {

namespace {

using Clock = std::chrono::steady_clock;

void require_single_block(const QuantifiedFormula& qf, std::size_t min_vars, const char* what) {
    const auto& prefix = qf.prefix();
    if (prefix.size() < min_vars) {
        throw FragmentError(std::string(what) + " needs at least " + std::to_string(min_vars) + " variables");
    }
    for (const auto& b : prefix) {
        if (b.quantifier != prefix.front().quantifier) {
            throw FragmentError(std::string(what) + " needs a single quantifier block");
        }
    }
}

// Decides emptiness of `body`; a non-empty language yields the decoded witness.
std::optional<TraceAssignment> counterexample(const Formula& body, const std::vector<TraceVariable>& vars,
                                              const BuildLimits& limits) {
    const auto support = collect_alphabet(body);
    const Dfa d = compile_body(body, support, limits);
    const auto r = is_empty(d);
    if (r.empty) {
        return std::nullopt;
    }
    return decode_word(support, vars, *r.witness);
}

TraceVariable fresh_variable(const std::vector<TraceVariable>& taken) {
    std::set<std::string> names;
    for (const auto& v : taken) {
        names.insert(v.name);
    }
    std::string name = "r";
    for (int i = 0; names.contains(name); ++i) {
        name = "r" + std::to_string(i);
    }
    return TraceVariable{name};
}

template <class F>
PropertyCheck timed(F&& decide) {
    const auto start = Clock::now();
    PropertyCheck c;
    c.witness = decide();
    c.holds = !c.witness;
    c.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return c;
}

}  // namespace

PropertyCheck check_symmetry(const QuantifiedFormula& qf, const BuildLimits& limits) {
    require_single_block(qf, 2, "symmetry check");
    const auto vars = qf.variables();
    return timed([&]() -> std::optional<TraceAssignment> {
        for (std::size_t i = 0; i + 1 < vars.size(); ++i) {
            const Formula swapped = rename_variables(qf.body(), {{vars[i], vars[i + 1]}, {vars[i + 1], vars[i]}});
            if (auto w = counterexample(lxor(qf.body(), swapped), vars, limits)) {
                return w;
            }
        }
        return std::nullopt;
    });
}

PropertyCheck check_reflexivity(const QuantifiedFormula& qf, const BuildLimits& limits) {
    require_single_block(qf, 1, "reflexivity check");
    const auto vars = qf.variables();
    return timed([&]() -> std::optional<TraceAssignment> {
        std::map<TraceVariable, TraceVariable> identify;
        for (const auto& v : vars) {
            identify.emplace(v, vars.front());
        }
        auto w = counterexample(lnot(rename_variables(qf.body(), identify)), {vars.front()}, limits);
        if (!w) {
            return std::nullopt;
        }
        const Trace t = w->at(vars.front());
        TraceAssignment all;
        for (const auto& v : vars) {
            all.emplace(v, t);
        }
        return all;
    });
}

PropertyCheck check_transitivity(const QuantifiedFormula& qf, const BuildLimits& limits) {
    require_single_block(qf, 2, "transitivity check");
    const auto vars = qf.variables();
    if (vars.size() != 2) {
        throw FragmentError("transitivity check needs exactly two variables");
    }
    const TraceVariable& x = vars[0];
    const TraceVariable& y = vars[1];
    const TraceVariable z = fresh_variable(vars);
    return timed([&]() -> std::optional<TraceAssignment> {
        const Formula& xy = qf.body();
        const Formula yz = rename_variables(xy, {{x, y}, {y, z}});
        const Formula xz = rename_variables(xy, {{y, z}});
        return counterexample(land(land(xy, yz), lnot(xz)), {x, y, z}, limits);
    });
}

SpecAnalysisResult analyze(const QuantifiedFormula& qf, const BuildLimits& limits) {
    SpecAnalysisResult r;
    const auto cls = classify_prefix(qf);
    auto run = [&](PropertyCheck& slot, auto check) {
        if (cls.kind != QuantifierClass::Kind::forall_n || cls.n < 2) {
            slot.skipped = "prefix " + to_string(cls) + " is not universal over two or more variables";
            return;
        }
        try {
            slot = check(qf, limits);
        } catch (const FragmentError& e) {
            slot = PropertyCheck{};
            slot.skipped = e.what();
        } catch (const ResourceError& e) {
            slot = PropertyCheck{};
            slot.skipped = e.what();
        }
    };
    run(r.symmetry, check_symmetry);
    run(r.transitivity, check_transitivity);
    run(r.reflexivity, check_reflexivity);
    return r;
}

}  // namespace hypermon

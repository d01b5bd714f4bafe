#pragma once

// Random and exhaustive generators shared by the test suites. Nothing here
// calls into the automaton code, so tests can use it as an independent oracle.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hypermon/formula.hpp"
#include "hypermon/semantics.hpp"

namespace hypermon::testing {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

/// Random body of depth <= `depth`. With `sugar` every operator may appear,
/// otherwise only the core atom/true/not/or/next/until.
inline Formula random_formula(Rng& rng, std::size_t depth, const std::vector<std::string>& props,
                              const std::vector<std::string>& vars, bool sugar = true) {
    if (depth == 0 || pick(rng, 5) == 0) {
        if (pick(rng, 8) == 0) {
            return sugar && pick(rng, 2) ? ff() : tt();
        }
        return atom(props[pick(rng, props.size())], vars[pick(rng, vars.size())]);
    }
    auto sub = [&] { return random_formula(rng, depth - 1, props, vars, sugar); };
    if (!sugar) {
        switch (pick(rng, 4)) {
        case 0:
            return lnot(sub());
        case 1:
            return lor(sub(), sub());
        case 2:
            return next(sub());
        default:
            return until(sub(), sub());
        }
    }
    switch (pick(rng, 13)) {
    case 0:
        return lnot(sub());
    case 1:
        return lor(sub(), sub());
    case 2:
        return land(sub(), sub());
    case 3:
        return implies(sub(), sub());
    case 4:
        return iff(sub(), sub());
    case 5:
        return lxor(sub(), sub());
    case 6:
        return next(sub());
    case 7:
        return until(sub(), sub());
    case 8:
        return weak_until(sub(), sub());
    case 9:
        return release(sub(), sub());
    case 10:
        return globally(sub());
    case 11:
        return finally(sub());
    default:
        return lnot(sub());
    }
}

inline Trace random_trace(Rng& rng, const std::vector<std::string>& props, std::size_t max_len, std::string name) {
    Trace t{std::move(name), {}};
    const std::size_t len = pick(rng, max_len + 1);
    for (std::size_t i = 0; i < len; ++i) {
        Step s;
        for (const auto& p : props) {
            if (pick(rng, 2)) {
                s.insert(p);
            }
        }
        t.steps.push_back(std::move(s));
    }
    return t;
}

/// Every trace over `props` of length <= max_len, shortest first.
inline std::vector<Trace> all_traces(const std::vector<std::string>& props, std::size_t max_len) {
    std::vector<Trace> out{Trace{"t0", {}}};
    std::vector<Trace> frontier = out;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Trace> grown;
        for (const auto& t : frontier) {
            for (std::size_t mask = 0; mask < (std::size_t{1} << props.size()); ++mask) {
                Trace u = t;
                Step s;
                for (std::size_t i = 0; i < props.size(); ++i) {
                    if ((mask >> i) & 1) {
                        s.insert(props[i]);
                    }
                }
                u.steps.push_back(std::move(s));
                grown.push_back(std::move(u));
            }
        }
        frontier = grown;
        out.insert(out.end(), grown.begin(), grown.end());
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i].name = "t" + std::to_string(i);
    }
    return out;
}

/// Letters of a trace, as strings, for readable failure messages.
inline std::string show(const Trace& t) {
    std::string out = "[";
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        out += i ? "," : "";
        out += "{";
        bool first = true;
        for (const auto& p : t.steps[i]) {
            out += (first ? "" : ",") + p;
            first = false;
        }
        out += "}";
    }
    return out + "]";
}

inline Trace make_trace(std::string name, std::vector<Step> steps) { return Trace{std::move(name), std::move(steps)}; }

}  // namespace hypermon::testing

#include <doctest.h>

#include <algorithm>

#include "hypermon/error.hpp"
#include "hypermon/parser.hpp"
#include "hypermon/trace_analysis.hpp"
#include "../support/generators.hpp"

using namespace hypermon;
using namespace hypermon::testing;

namespace {

const TraceVariable P{"p"};
const TraceVariable Q{"q"};

struct Setup {
    QuantifiedFormula qf;
    MonitorTemplate m;
    QuantifierClass cls;
};

Setup setup(const std::string& text) {
    QuantifiedFormula qf = parse_formula(text);
    auto m = build_template(qf.body(), qf.variables(), collect_alphabet(qf.body()));
    auto cls = classify_prefix(qf);
    return Setup{std::move(qf), std::move(m), std::move(cls)};
}

std::vector<Step> trimmed(std::vector<Step> s) {
    while (!s.empty() && s.back().empty()) {
        s.pop_back();
    }
    return s;
}

}  // namespace

TEST_CASE("unsupported prefixes are rejected") {
    auto s = setup("exists p. forall q. G (a@p <-> a@q)");
    CHECK_THROWS_AS(DominanceChecker(s.m, s.cls), FragmentError);
    s = setup("exists p. exists q. exists r. G (a@p <-> a@q) & a@r");
    CHECK_THROWS_AS(DominanceChecker(s.m, s.cls), FragmentError);
}

TEST_CASE("a trace dominates itself") {
    auto s = setup("forall p. forall q. G (a@p <-> a@q)");
    DominanceChecker d(s.m, s.cls);
    const Trace t = make_trace("t", {{"a"}, {}});
    CHECK(d.dominates(t, t));
    CHECK(d.inclusion_checks() == 0);
}

TEST_CASE("equality keeps one trace per padded pattern") {
    auto s = setup("forall p. forall q. G (a@p <-> a@q)");
    DominanceChecker d(s.m, s.cls);
    TraceStore store;
    const auto traces = all_traces({"a"}, 3);
    for (const auto& t : traces) {
        d.minimize(store, t);
    }
    std::vector<std::vector<Step>> patterns;
    for (const auto& t : traces) {
        patterns.push_back(trimmed(t.steps));
    }
    std::sort(patterns.begin(), patterns.end());
    patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
    REQUIRE(store.traces.size() == patterns.size());
    for (std::size_t i = 0; i < store.traces.size(); ++i) {
        for (std::size_t j = i + 1; j < store.traces.size(); ++j) {
            CHECK(trimmed(store.traces[i].steps) != trimmed(store.traces[j].steps));
        }
    }
    CHECK(store.traces.size() + store.dropped.size() == traces.size());
}

TEST_CASE("incomparable traces are both kept") {
    // p = strong forces q to be all-a; q = strong constrains nothing within its length.
    auto s = setup("forall p. forall q. G (a@p -> a@q)");
    const Trace weak = make_trace("weak", {{}, {}});
    const Trace strong = make_trace("strong", {{"a"}, {"a"}});
    TraceStore store = minimize_store(s.m, s.cls, TraceStore{}, weak);
    store = minimize_store(s.m, s.cls, store, strong);
    CHECK(store.traces.size() == 2);
    CHECK(store.dropped.empty());
}

TEST_CASE("fresh trace removes the stored traces it dominates") {
    auto s = setup("forall p. forall q. a@p -> a@q");
    // Only first positions matter; [{}] and [{}, {a}] are interchangeable.
    TraceStore store = minimize_store(s.m, s.cls, TraceStore{}, make_trace("x", {{}, {"a"}}));
    store = minimize_store(s.m, s.cls, store, make_trace("y", {{"a"}}));
    store = minimize_store(s.m, s.cls, store, make_trace("z", {{}}));
    REQUIRE(store.traces.size() == 2);
    CHECK(store.traces[0].name == "x");
    REQUIRE(store.dropped.size() == 1);
    CHECK(store.dropped[0] == std::pair<std::string, std::string>{"z", "x"});
}

TEST_CASE("failed inclusion comes with a real distinguishing trace") {
    Rng rng(11);
    const std::vector<std::string> props{"a"};
    const auto traces = all_traces(props, 2);
    int distinguished = 0;
    for (int i = 0; i < 60; ++i) {
        const Formula body = random_formula(rng, 3, props, {"p", "q"});
        const auto m = build_template(body, {P, Q}, collect_alphabet(body));
        for (const auto& t1 : traces) {
            for (const auto& t2 : traces) {
                const auto m1 = instantiate(m, t1, P);
                const auto m2 = instantiate(m, t2, P);
                const auto r = language_included(m1.dfa(), m2.dfa());
                if (r.included) {
                    continue;
                }
                const auto u = decode_word(m1.dfa().support(), {Q}, *r.counterexample);
                TraceAssignment a1{{P, t1}, {Q, u.at(Q)}};
                TraceAssignment a2{{P, t2}, {Q, u.at(Q)}};
                INFO(to_string(body), " t1=", show(t1), " t2=", show(t2), " u=", show(u.at(Q)));
                CHECK(eval_body(a1, body));
                CHECK_FALSE(eval_body(a2, body));
                ++distinguished;
            }
        }
    }
    CHECK(distinguished > 0);
}

TEST_CASE("dropping a dominated trace never changes the verdict") {
    Rng rng(5);
    const std::vector<std::string> props{"a"};
    const auto traces = all_traces(props, 2);
    const std::vector<std::string> prefixes{"forall p. forall q. ", "exists p. exists q. ", "forall p. exists q. "};
    int dominated_pairs = 0;
    for (const auto& prefix : prefixes) {
        for (int i = 0; i < 40; ++i) {
            const Formula body = random_formula(rng, 3, props, {"p", "q"});
            const QuantifiedFormula qf = parse_formula(prefix + to_string(body));
            const auto m = build_template(qf.body(), qf.variables(), collect_alphabet(qf.body()));
            DominanceChecker d(m, classify_prefix(qf));
            for (const auto& t1 : traces) {
                for (const auto& t2 : traces) {
                    if (t1.steps == t2.steps || !d.dominates(t1, t2)) {
                        continue;
                    }
                    ++dominated_pairs;
                    for (int k = 0; k < 4; ++k) {
                        TraceSet store{t1};
                        for (const auto& u : traces) {
                            if (u.steps != t2.steps && pick(rng, 3) == 0) {
                                store.push_back(u);
                            }
                        }
                        TraceSet with = store;
                        with.push_back(t2);
                        INFO(to_string(qf), " t1=", show(t1), " t2=", show(t2));
                        CHECK(eval_quantified(store, qf) == eval_quantified(with, qf));
                    }
                }
            }
        }
    }
    CHECK(dominated_pairs > 100);
}

TEST_CASE("inclusion misses semantic dominance for two existentials") {
    // (t, t) always satisfies the body, so t makes t' redundant, yet the
    // instantiated languages are incomparable.
    auto s = setup("exists p. exists q. a@p <-> a@q");
    const Trace t = make_trace("t", {{"a"}});
    const Trace t2 = make_trace("t2", {{}});
    for (const auto& rest : all_traces({"a"}, 2)) {
        TraceSet store{t, rest};
        TraceSet with{t, rest, t2};
        CHECK(eval_quantified(store, s.qf) == eval_quantified(with, s.qf));
    }
    CHECK_FALSE(DominanceChecker(s.m, s.cls).dominates(t, t2));
}

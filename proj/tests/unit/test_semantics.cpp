#include <doctest.h>

#include "hypermon/error.hpp"
#include "hypermon/parser.hpp"
#include "hypermon/semantics.hpp"
#include "../support/generators.hpp"

using namespace hypermon;
using namespace hypermon::testing;

namespace {

const TraceVariable P{"p"};
const TraceVariable Q{"q"};

// Literal transcription of the core clauses over suffix assignments. Derived
// operators are expanded here by their textbook definitions.
bool reference(const TraceAssignment& a, const Formula& f) {
    std::size_t horizon = 0;
    for (const auto& [v, t] : a) {
        horizon = std::max(horizon, t.size());
    }
    auto at = [&](std::size_t i) { return shift_assignment(a, i); };
    auto until_holds = [&](const Formula& l, const Formula& r) {
        // Every suffix from the horizon on is the all-empty assignment.
        for (std::size_t i = 0; i <= horizon; ++i) {
            if (reference(at(i), r)) {
                return true;
            }
            if (!reference(at(i), l)) {
                return false;
            }
        }
        return false;
    };
    switch (f.op()) {
    case Op::atom: {
        const Trace& t = a.at(f.atom().variable);
        return !t.empty() && t.steps[0].contains(f.atom().proposition);
    }
    case Op::tt:
        return true;
    case Op::ff:
        return false;
    case Op::lnot:
        return !reference(a, f.arg(0));
    case Op::lor:
        for (const auto& g : f.args()) {
            if (reference(a, g)) {
                return true;
            }
        }
        return false;
    case Op::land:
        for (const auto& g : f.args()) {
            if (!reference(a, g)) {
                return false;
            }
        }
        return true;
    case Op::implies:
        return !reference(a, f.arg(0)) || reference(a, f.arg(1));
    case Op::iff:
        return reference(a, f.arg(0)) == reference(a, f.arg(1));
    case Op::lxor:
        return reference(a, f.arg(0)) != reference(a, f.arg(1));
    case Op::next:
        return reference(at(1), f.arg(0));
    case Op::until:
        return until_holds(f.arg(0), f.arg(1));
    case Op::weak_until:
        return until_holds(f.arg(0), f.arg(1)) || !until_holds(tt(), lnot(f.arg(0)));
    case Op::release:
        return !until_holds(lnot(f.arg(0)), lnot(f.arg(1)));
    case Op::globally:
        return !until_holds(tt(), lnot(f.arg(0)));
    case Op::finally:
        return until_holds(tt(), f.arg(0));
    }
    return false;
}

TraceAssignment pq(Trace p, Trace q) { return {{P, std::move(p)}, {Q, std::move(q)}}; }

}  // namespace

TEST_CASE("an atom on the empty trace is false") {
    const TraceAssignment eps{{P, Trace{"e", {}}}};
    CHECK_FALSE(eval_body(eps, parse_body("a@p")));
    CHECK(eval_body(eps, parse_body("!a@p")));
    CHECK_FALSE(eps_eval(parse_body("a@p")));
    CHECK(eps_eval(parse_body("!a@p")));
}

TEST_CASE("subsequences clamp to the trace") {
    const Trace t = make_trace("t", {{"a"}, {"b"}, {"c"}});
    CHECK(subsequence(t, 1, 5).steps == std::vector<Step>{{"b"}, {"c"}});
    CHECK(subsequence(t, 0, 0).steps == std::vector<Step>{{"a"}});
    CHECK(subsequence(t, 3, 7).empty());
    CHECK(subsequence(t, 9, 9).empty());
    const auto shifted = shift_assignment(pq(t, make_trace("u", {{"a"}})), 1);
    CHECK(shifted.at(P).steps.size() == 2);
    CHECK(shifted.at(Q).empty());
}

TEST_CASE("next past the end sees the empty trace") {
    const auto a = pq(make_trace("t", {{"a"}}), make_trace("u", {}));
    CHECK_FALSE(eval_body(a, parse_body("X a@p")));
    CHECK(eval_body(a, parse_body("X !a@p")));
    CHECK(eval_body(a, parse_body("X X X !a@p")));
}

TEST_CASE("G of an atom is unsatisfiable on finite traces") {
    const Formula g = parse_body("G a@p");
    for (const auto& t : all_traces({"a"}, 5)) {
        CHECK_FALSE(eval_body({{P, t}}, g));
    }
    CHECK(eval_body({{P, make_trace("t", {{"a"}})}}, parse_body("F !a@p")));
}

TEST_CASE("weak until and release on short traces") {
    const auto a = pq(make_trace("t", {{"a"}, {"a"}}), make_trace("u", {}));
    // a holds until the trace ends, after which !a holds forever.
    CHECK_FALSE(eval_body(a, parse_body("a@p U b@p")));
    CHECK_FALSE(eval_body(a, parse_body("a@p W b@p")));
    CHECK(eval_body(a, parse_body("a@p U !a@p")));
    CHECK(eval_body(a, parse_body("b@p R !b@p")));
    CHECK(eval_body(a, parse_body("!b@p W false")));
}

TEST_CASE("unmapped variables are an error") {
    CHECK_THROWS_AS(eval_body({{P, Trace{}}}, parse_body("a@q")), UncoveredVariableError);
}

TEST_CASE("evaluation matches the clause-by-clause reference") {
    Rng rng(101);
    const std::vector<std::string> props{"a", "b"};
    for (int i = 0; i < 400; ++i) {
        const Formula f = random_formula(rng, 4, props, {"p", "q"});
        for (int k = 0; k < 10; ++k) {
            const auto a = pq(random_trace(rng, props, 5, "x"), random_trace(rng, props, 5, "y"));
            INFO(to_string(f), " p=", show(a.at(P)), " q=", show(a.at(Q)));
            CHECK(eval_body(a, f) == reference(a, f));
        }
        CHECK(eps_eval(f) == reference(pq(Trace{}, Trace{}), f));
    }
}

TEST_CASE("desugaring preserves truth") {
    Rng rng(102);
    const std::vector<std::string> props{"a", "b"};
    for (int i = 0; i < 300; ++i) {
        const Formula f = random_formula(rng, 4, props, {"p", "q"});
        const Formula core = desugar(f);
        const Formula simple = simplify(core);
        for (int k = 0; k < 8; ++k) {
            const auto a = pq(random_trace(rng, props, 4, "x"), random_trace(rng, props, 4, "y"));
            INFO(to_string(f));
            const bool expected = eval_body(a, f);
            CHECK(eval_body(a, core) == expected);
            CHECK(eval_body(a, simple) == expected);
        }
    }
}

TEST_CASE("next is self-dual") {
    Rng rng(103);
    for (int i = 0; i < 100; ++i) {
        const Formula f = random_formula(rng, 3, {"a"}, {"p"});
        for (const auto& t : all_traces({"a"}, 3)) {
            CHECK(eval_body({{P, t}}, next(lnot(f))) == eval_body({{P, t}}, lnot(next(f))));
        }
    }
}

TEST_CASE("quantifiers range over the trace set") {
    const TraceSet ts{make_trace("x", {{"a"}}), make_trace("y", {{}})};
    CHECK_FALSE(eval_quantified(ts, parse_formula("forall p. a@p")));
    CHECK(eval_quantified(ts, parse_formula("exists p. a@p")));
    CHECK(eval_quantified(ts, parse_formula("forall p. exists q. a@p <-> !a@q")));
    CHECK_FALSE(eval_quantified(ts, parse_formula("exists p. forall q. a@p <-> a@q")));
    CHECK(eval_quantified({}, parse_formula("forall p. a@p")));
    CHECK_FALSE(eval_quantified({}, parse_formula("exists p. true")));
}

#include <doctest.h>

#include "hypermon/error.hpp"
#include "hypermon/parser.hpp"
#include "hypermon/spec_analysis.hpp"
#include "../support/generators.hpp"

using namespace hypermon;
using namespace hypermon::testing;

namespace {

const TraceVariable P{"p"};
const TraceVariable Q{"q"};

bool holds(const Formula& body, std::initializer_list<std::pair<TraceVariable, Trace>> binding) {
    return eval_body(TraceAssignment(binding.begin(), binding.end()), body);
}

}  // namespace

TEST_CASE("equality is symmetric, transitive and reflexive") {
    const auto r = analyze(parse_formula("forall p. forall q. G (a@p <-> a@q)"));
    CHECK(r.symmetric());
    CHECK(r.transitive());
    CHECK(r.reflexive());
}

TEST_CASE("implication between traces is a preorder but not symmetric") {
    const auto r = analyze(parse_formula("forall p. forall q. G (a@p -> a@q)"));
    CHECK_FALSE(r.symmetric());
    CHECK(r.transitive());
    CHECK(r.reflexive());
    REQUIRE(r.symmetry.witness);
    const Formula body = parse_body("G (a@p -> a@q)");
    const auto& w = *r.symmetry.witness;
    CHECK(holds(body, {{P, w.at(P)}, {Q, w.at(Q)}}) != holds(body, {{P, w.at(Q)}, {Q, w.at(P)}}));
}

TEST_CASE("inequality fails reflexivity with a witness") {
    const auto r = analyze(parse_formula("forall p. forall q. F !(a@p <-> a@q)"));
    CHECK(r.symmetric());
    CHECK_FALSE(r.reflexive());
    REQUIRE(r.reflexivity.witness);
    CHECK(r.reflexivity.witness->at(P).steps == r.reflexivity.witness->at(Q).steps);
}

TEST_CASE("prefix restrictions") {
    CHECK_THROWS_AS(check_symmetry(parse_formula("forall p. a@p")), FragmentError);
    CHECK_THROWS_AS(check_symmetry(parse_formula("forall p. exists q. a@p")), FragmentError);
    CHECK_THROWS_AS(check_transitivity(parse_formula("forall p. forall q. forall r. a@p")), FragmentError);
    const auto single = analyze(parse_formula("forall p. a@p"));
    CHECK_FALSE(single.symmetric());
    CHECK_FALSE(single.transitive());
    CHECK_FALSE(single.reflexive());
    CHECK(single.symmetry.skipped);
    const auto three = analyze(parse_formula("forall p. forall q. forall r. true"));
    CHECK(three.symmetric());
    CHECK(three.reflexive());
    CHECK_FALSE(three.transitive());
    CHECK(three.transitivity.skipped);
}

TEST_CASE("symmetry over three variables needs every permutation") {
    // Symmetric in p and q only.
    CHECK_FALSE(check_symmetry(parse_formula("forall p. forall q. forall r. a@p & a@q")).holds);
    CHECK(check_symmetry(parse_formula("forall p. forall q. forall r. a@p | a@q | a@r")).holds);
}

TEST_CASE("resource limits degrade to false") {
    BuildLimits tiny;
    tiny.max_support = 1;
    const auto r = analyze(parse_formula("forall p. forall q. G (a@p <-> a@q)"), tiny);
    CHECK_FALSE(r.symmetric());
    CHECK(r.symmetry.skipped);
}

TEST_CASE("checks agree with exhaustive evaluation on random bodies") {
    Rng rng(3);
    const std::vector<std::string> props{"a", "b"};
    const auto traces = all_traces(props, 2);
    for (int i = 0; i < 150; ++i) {
        const Formula body = random_formula(rng, 3, props, {"p", "q"});
        const QuantifiedFormula qf({{Quantifier::forall, P}, {Quantifier::forall, Q}}, body);
        INFO(to_string(body));
        const auto r = analyze(qf);

        if (r.symmetric()) {
            for (const auto& x : traces) {
                for (const auto& y : traces) {
                    CHECK(holds(body, {{P, x}, {Q, y}}) == holds(body, {{P, y}, {Q, x}}));
                }
            }
        } else {
            REQUIRE(r.symmetry.witness);
            const auto& w = *r.symmetry.witness;
            CHECK(holds(body, {{P, w.at(P)}, {Q, w.at(Q)}}) != holds(body, {{P, w.at(Q)}, {Q, w.at(P)}}));
        }

        if (r.reflexive()) {
            for (const auto& x : traces) {
                CHECK(holds(body, {{P, x}, {Q, x}}));
            }
        } else {
            REQUIRE(r.reflexivity.witness);
            const auto& t = r.reflexivity.witness->at(P);
            CHECK_FALSE(holds(body, {{P, t}, {Q, t}}));
        }

        if (r.transitive()) {
            for (const auto& x : traces) {
                for (const auto& y : traces) {
                    if (!holds(body, {{P, x}, {Q, y}})) {
                        continue;
                    }
                    for (const auto& z : traces) {
                        if (holds(body, {{P, y}, {Q, z}})) {
                            CHECK(holds(body, {{P, x}, {Q, z}}));
                        }
                    }
                }
            }
        } else {
            REQUIRE(r.transitivity.witness);
            const auto& w = *r.transitivity.witness;
            const Trace& x = w.at(P);
            const Trace& y = w.at(Q);
            const Trace& z = w.at(TraceVariable{"r"});
            CHECK(holds(body, {{P, x}, {Q, y}}));
            CHECK(holds(body, {{P, y}, {Q, z}}));
            CHECK_FALSE(holds(body, {{P, x}, {Q, z}}));
        }
    }
}

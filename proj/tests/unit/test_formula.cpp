#include <doctest.h>

#include "hypermon/error.hpp"
#include "hypermon/parser.hpp"
#include "../support/generators.hpp"

using namespace hypermon;
using namespace hypermon::testing;

namespace {

bool core_only(const Formula& f) {
    switch (f.op()) {
    case Op::atom:
    case Op::tt:
        return true;
    case Op::lnot:
    case Op::lor:
    case Op::next:
    case Op::until:
        for (const auto& g : f.args()) {
            if (!core_only(g)) {
                return false;
            }
        }
        return true;
    default:
        return false;
    }
}

}  // namespace

TEST_CASE("builders check operand counts") {
    CHECK(arity(Op::until) == 2);
    CHECK(arity(Op::lor) == -1);
    CHECK_THROWS(Formula::make(Op::next, {}));
    CHECK_THROWS(Formula::make(Op::until, {tt()}));
    const Formula f = until(atom("a", "p"), next(atom("b", "q")));
    CHECK(f.size() == 4);
    CHECK(f.depth() == 2);  // atoms have depth 0
    CHECK(f.arg(1).op() == Op::next);
}

TEST_CASE("structural equality") {
    CHECK(land(atom("a", "p"), tt()) == land(atom("a", "p"), tt()));
    CHECK_FALSE(land(atom("a", "p"), tt()) == land(tt(), atom("a", "p")));
    CHECK(atom("a", "p") != atom("a", "q"));
}

TEST_CASE("desugar produces core operators only") {
    Rng rng(1);
    for (int i = 0; i < 300; ++i) {
        const Formula f = random_formula(rng, 4, {"a", "b"}, {"p", "q"});
        CHECK(core_only(desugar(f)));
    }
}

TEST_CASE("simplify is idempotent and folds constants") {
    Rng rng(2);
    for (int i = 0; i < 300; ++i) {
        const Formula f = simplify(desugar(random_formula(rng, 4, {"a", "b"}, {"p", "q"})));
        CHECK(simplify(f) == f);
    }
    CHECK(simplify(lnot(lnot(atom("a", "p")))) == atom("a", "p"));
    CHECK(simplify(lor(atom("a", "p"), tt())) == tt());
    CHECK(simplify(lor(atom("a", "p"), atom("a", "p"))) == atom("a", "p"));
    CHECK(simplify(lor(atom("b", "p"), atom("a", "p"))) == simplify(lor(atom("a", "p"), atom("b", "p"))));
}

TEST_CASE("renaming is simultaneous") {
    const TraceVariable p{"p"};
    const TraceVariable q{"q"};
    const Formula f = parse_body("a@p & !b@q");
    CHECK(rename_variables(f, {{p, q}, {q, p}}) == parse_body("a@q & !b@p"));
    CHECK(rename_variables(f, {{p, TraceVariable{"r"}}}) == parse_body("a@r & !b@q"));
}

TEST_CASE("prefix classification") {
    using Kind = QuantifierClass::Kind;
    auto cls = [](const char* s) { return classify_prefix(parse_formula(s)); };
    CHECK(cls("forall p. forall q. a@p").kind == Kind::forall_n);
    CHECK(cls("forall p. forall q. a@p").n == 2);
    CHECK(cls("exists p. exists q. a@p").kind == Kind::exists_n);
    CHECK(cls("forall p. exists q. a@p").kind == Kind::forall_exists);
    CHECK(cls("exists p. forall q. a@p").kind == Kind::other);
    CHECK(cls("exists p. forall q. a@p").shape == "EA");
    CHECK(to_string(cls("forall p. a@p")) == "forall-n(1)");
}

TEST_CASE("alphabet and free variables") {
    const Formula f = parse_body("b@q U (a@p & a@q)");
    const auto alpha = collect_alphabet(f);
    REQUIRE(alpha.size() == 3);
    CHECK(to_string(alpha[0]) == "a@p");
    CHECK(to_string(alpha[1]) == "a@q");
    CHECK(to_string(alpha[2]) == "b@q");
    const auto vars = free_variables(f);
    REQUIRE(vars.size() == 2);
    CHECK(vars[0].name == "p");
}

TEST_CASE("closed formulas reject unbound and duplicate variables") {
    CHECK_THROWS_AS(QuantifiedFormula({{Quantifier::forall, TraceVariable{"p"}}}, parse_body("a@q")),
                    UnboundVariableError);
    CHECK_THROWS_AS(QuantifiedFormula({{Quantifier::forall, TraceVariable{"p"}},
                                       {Quantifier::exists, TraceVariable{"p"}}},
                                      parse_body("a@p")),
                    DuplicateBinderError);
}

TEST_CASE("printing and parsing round-trip") {
    Rng rng(3);
    for (int i = 0; i < 500; ++i) {
        const Formula f = random_formula(rng, 5, {"a", "b"}, {"p", "q"});
        INFO(to_string(f));
        CHECK(parse_body(to_string(f)) == f);
    }
    const auto qf = parse_formula("forall p. exists q. G (a@p -> F b@q)");
    CHECK(parse_formula(to_string(qf)) == qf);
}

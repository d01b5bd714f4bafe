#include <doctest.h>

#include "hypermon/error.hpp"
#include "hypermon/parser.hpp"

using namespace hypermon;

namespace {

const Formula a = atom("a", "p");
const Formula b = atom("b", "p");
const Formula c = atom("c", "p");

}  // namespace

TEST_CASE("binary precedence: and over or over implication over iff over xor") {
    CHECK(parse_body("a@p | b@p & c@p") == lor(a, land(b, c)));
    CHECK(parse_body("a@p -> b@p | c@p") == implies(a, lor(b, c)));
    CHECK(parse_body("a@p <-> b@p -> c@p") == iff(a, implies(b, c)));
    CHECK(parse_body("a@p ^ b@p <-> c@p") == lxor(a, iff(b, c)));
}

TEST_CASE("associativity") {
    CHECK(parse_body("a@p -> b@p -> c@p") == implies(a, implies(b, c)));
    CHECK(parse_body("a@p | b@p | c@p") == lor(lor(a, b), c));
    CHECK(parse_body("a@p & b@p & c@p") == land(land(a, b), c));
}

TEST_CASE("unary operators bind tighter than temporal binaries") {
    CHECK(parse_body("!a@p U b@p") == until(lnot(a), b));
    CHECK(parse_body("X a@p W G b@p") == weak_until(next(a), globally(b)));
    CHECK(parse_body("F a@p R b@p") == release(finally(a), b));
    CHECK(parse_body("a@p U b@p & c@p") == land(until(a, b), c));
    CHECK(parse_body("(a@p U b@p) U c@p") == until(until(a, b), c));
    CHECK(parse_body("a@p U b@p R c@p") == until(a, release(b, c)));
    CHECK(parse_body("!(a@p U b@p)") == lnot(until(a, b)));
}

TEST_CASE("constants, comments and whitespace") {
    CHECK(parse_body("true") == tt());
    CHECK(parse_body("false") == ff());
    CHECK(parse_body("  a@p  # comment\n & true") == land(a, tt()));
}

TEST_CASE("quantifier prefixes") {
    const auto qf = parse_formula("forall p. exists q.\n  G (a@p <-> a@q)");
    REQUIRE(qf.prefix().size() == 2);
    CHECK(qf.prefix()[0].quantifier == Quantifier::forall);
    CHECK(qf.prefix()[1].variable.name == "q");
    CHECK_THROWS_AS(parse_formula("forall p. a@q"), UnboundVariableError);
    CHECK_THROWS_AS(parse_formula("forall p. forall p. a@p"), DuplicateBinderError);
}

TEST_CASE("syntax errors carry positions") {
    auto position = [](const char* text) {
        try {
            parse_formula(text);
        } catch (const ParseError& e) {
            return std::make_pair(e.line(), e.column());
        }
        return std::make_pair(std::size_t{0}, std::size_t{0});
    };
    CHECK(position("forall p. a@p &") == std::make_pair(std::size_t{1}, std::size_t{16}));
    CHECK(position("forall p.\n  a@p $ b@p") == std::make_pair(std::size_t{2}, std::size_t{7}));
    CHECK(position("forall p. (a@p") .first == 1);
    CHECK_THROWS_AS(parse_body("a"), ParseError);
    CHECK_THROWS_AS(parse_body("a@p b@p"), ParseError);
    CHECK_THROWS_AS(parse_formula("forall . a@p"), ParseError);
}

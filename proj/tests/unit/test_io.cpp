#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "hypermon/error.hpp"
#include "hypermon/parser.hpp"
#include "hypermon/report.hpp"
#include "hypermon/trace_io.hpp"
#include "../support/generators.hpp"

using namespace hypermon;
using namespace hypermon::testing;

TEST_CASE("trace files: steps, empty steps, comments") {
    const Trace t = parse_trace("# header\na, b\n{}\n\n  c # trailing\n", "x");
    CHECK(t.name == "x");
    REQUIRE(t.steps.size() == 3);
    CHECK(t.steps[0] == Step{"a", "b"});
    CHECK(t.steps[1].empty());
    CHECK(t.steps[2] == Step{"c"});
    CHECK(print_trace(t) == "a,b\n{}\nc\n");
}

TEST_CASE("an empty or comment-only file is the empty trace") {
    CHECK(parse_trace("", "e").empty());
    CHECK(parse_trace("# nothing\n\n", "e").empty());
    CHECK(print_trace(Trace{"e", {}}).empty());
}

TEST_CASE("malformed steps report line and column") {
    try {
        parse_trace("a\nb,,c\n", "x");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(parse_trace("{} a\n", "x"), ParseError);
    CHECK_THROWS_AS(parse_trace("a b\n", "x"), ParseError);
    CHECK_THROWS_AS(parse_trace("1a\n", "x"), ParseError);
}

TEST_CASE("printing then parsing is the identity") {
    Rng rng(2);
    for (int i = 0; i < 200; ++i) {
        const Trace t = random_trace(rng, {"a", "b", "out_0"}, 6, "r");
        const std::string text = print_trace(t);
        CHECK(parse_trace(text, "r") == t);
        CHECK(print_trace(parse_trace(text, "r")) == text);
    }
}

TEST_CASE("directories expand to sorted trace files") {
    const auto dir = std::filesystem::temp_directory_path() / "hypermon_io_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    write_trace_file(dir / "b.trace", make_trace("b", {{"a"}}));
    write_trace_file(dir / "a.trace", make_trace("a", {}));
    std::ofstream(dir / "notes.txt") << "ignored";
    const auto paths = expand_trace_paths({dir});
    REQUIRE(paths.size() == 2);
    CHECK(paths[0].filename() == "a.trace");
    const Trace b = read_trace_file(paths[1]);
    CHECK(b.name == "b");
    CHECK(b.steps == std::vector<Step>{{"a"}});
    CHECK_THROWS_AS(expand_trace_paths({dir / "missing"}), Error);
    std::filesystem::remove_all(dir);
}

TEST_CASE("session reports round-trip through JSON") {
    Session s(parse_formula("forall p. forall q. G (a@p <-> a@q)"));
    s.process_trace(make_trace("one", {{"a", "z"}}));
    s.process_trace(make_trace("two", {{}}));
    const SessionReport r = make_report(s);
    REQUIRE(r.verdict.counterexample);
    CHECK(parse_report(report_to_json(r)) == r);
    CHECK(report_to_text(r).find("p=one q=two") != std::string::npos);

    SessionReport clean;
    clean.formula = "forall p. true";
    clean.stats.wall_time = 0.1 + 0.2;
    CHECK(parse_report(report_to_json(clean)) == clean);
    CHECK_THROWS_AS(parse_report("{\"formula\": 3}"), Error);
}

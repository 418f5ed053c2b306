// SPDX-License-Identifier: MIT
// The pattern catalog: loading, expression evaluation, shared-reference
// caching, and the deviation registry.
#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "support/checks.hpp"

using namespace motiveq;

namespace {
json expr(const char* text) { return json::parse(text); }
} // namespace

TEST_CASE("default catalog loads with the expected shape", "[catalog]") {
    Catalog cat = Catalog::load_default();
    CHECK(cat.patterns(1).size() == 1);
    CHECK(cat.patterns(2).size() == 2);
    CHECK(cat.patterns(3).size() == 4);
    CHECK(cat.patterns(4).size() == 10);
    CHECK(cat.patterns(5).empty());
    CHECK(cat.deviations().size() == 8);
    std::set<std::string> ids;
    for (const auto& d : cat.deviations()) ids.insert(d.id);
    CHECK(ids.count("order4-regular-quotient-display") == 1);
    CHECK(ids.count("rank2-final-simplified-line") == 1);
    CHECK(ids.count("rank4-defect-closed-form") == 1);
}

TEST_CASE("expression ops evaluate to their library counterparts", "[catalog]") {
    Catalog cat = Catalog::load_default();

    CHECK(cat.eval(expr(R"({"op":"gl","n":2})")) ==
          EqClass::term(1, 1, RatFunc(gl_class(2))));
    CHECK(cat.eval(expr(R"({"op":"gl","n":1,"order":4})")) ==
          EqClass::term(4, 1, parse_ratfunc("q-1")));

    json cls = expr(R"({"op":"class","order":2,"terms":[{"d":1,"expr":"q"},{"d":2,"expr":"q-1"}]})");
    EqClass want(2);
    want.add_to(1, parse_ratfunc("q"));
    want.add_to(2, parse_ratfunc("q-1"));
    CHECK(cat.eval(cls) == want);

    CHECK(cat.eval(expr(R"({"op":"conj","order":2,"blocks":[{"lambda":1,"ell":2}]})")) ==
          conj_quotient(OrbitBlocks{2, {{1, 2}}}));
    CHECK(cat.eval(json{{"op", "per"}, {"extension", 3}, {"arg", cls}}) ==
          per(want, 3));
    CHECK(cat.eval(json{{"op", "ind"}, {"extension", 3}, {"arg", cls}}) ==
          induce(want, 6));
    CHECK(cat.eval(json{{"op", "mul"}, {"args", json::array({cls, cls})}}) == want * want);
    CHECK(cat.eval(json{{"op", "add"}, {"args", json::array({cls, cls})}}) == want + want);
    CHECK(cat.eval(json{{"op", "pow"}, {"exp", 3}, {"arg", cls}}) == want.pow(3));
    CHECK(cat.eval(json{{"op", "neg"}, {"arg", cls}}) == EqClass(2) - want);
    CHECK(cat.eval(json{{"op", "scale"}, {"by", "1/2"}, {"arg", cls}}) ==
          RatFunc(mpq_class(1, 2)) * want);

    CHECK_THROWS_AS(cat.eval(expr(R"({"op":"warp"})")), ParseError);
    CHECK_THROWS_AS(cat.eval(expr(R"({"noop":1})")), ParseError);
    CHECK_THROWS_AS(cat.eval(expr(R"({"op":"ref","id":"no-such-entry"})")), ParseError);
}

TEST_CASE("shared references cache and reject cycles", "[catalog]") {
    json j = {
        {"version", 1},
        {"shared",
         {{"unit", expr(R"({"op":"class","order":1,"terms":[{"d":1,"expr":"1"}]})")},
          {"twice", expr(R"({"op":"scale","by":"2","arg":{"op":"ref","id":"unit"}})")},
          {"loop-a", expr(R"({"op":"ref","id":"loop-b"})")},
          {"loop-b", expr(R"({"op":"ref","id":"loop-a"})")}}},
        {"ranks", json::array()},
    };
    Catalog cat = Catalog::from_json(j);
    CHECK(cat.eval(expr(R"({"op":"ref","id":"twice"})")) ==
          EqClass::term(1, 1, RatFunc(2)));
    CHECK(cat.eval(expr(R"({"op":"ref","id":"twice"})")) ==
          EqClass::term(1, 1, RatFunc(2))); // cached second lookup
    CHECK_THROWS_AS(cat.eval(expr(R"({"op":"ref","id":"loop-a"})")), ParseError);
}

TEST_CASE("malformed catalogs are rejected", "[catalog]") {
    CHECK_THROWS_AS(Catalog::from_json(json{{"version", 2}, {"ranks", json::array()}}),
                    ParseError);
    CHECK_THROWS_AS(Catalog::from_json(json{{"version", 1}}), ParseError);
    CHECK_THROWS_AS(Catalog::from_file("/nonexistent/catalog.json"), ParseError);
}

TEST_CASE("environment variable overrides the default path", "[catalog]") {
    std::string path = "/tmp/motiveq_env_catalog.json";
    {
        std::ofstream out(path);
        out << R"({"version":1,"shared":{},"ranks":[]})";
    }
    setenv("MOTIVEQ_CATALOG", path.c_str(), 1);
    Catalog cat = Catalog::load_default();
    CHECK(cat.patterns(2).empty());
    unsetenv("MOTIVEQ_CATALOG");
    Catalog def = Catalog::load_default();
    CHECK(def.patterns(2).size() == 2);
    std::remove(path.c_str());
}

TEST_CASE("every shared catalog entry expands to its recorded class", "[catalog]") {
    Catalog cat = Catalog::load_default();
    json tables = checks::load_golden_tables();
    auto run = checks::check_shared_expansions(cat, tables);
    CAPTURE(run.failed);
    CHECK(run.ok());
    CHECK(run.total == 13);
}

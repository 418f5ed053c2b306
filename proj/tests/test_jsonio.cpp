// SPDX-License-Identifier: MIT
// JSON serialization: exact round-trips for coefficients, polynomials,
// rational functions, classes, rank profiles, and block data.
#include <catch2/catch_amalgamated.hpp>

#include "support/checks.hpp"

using namespace motiveq;

TEST_CASE("coefficients round-trip, including beyond 64 bits", "[jsonio]") {
    for (const char* s : {"0", "-7", "1/3", "-355/113"}) {
        mpq_class c(s);
        c.canonicalize();
        CHECK(coeff_from_json(coeff_to_json(c)) == c);
    }
    mpq_class big("123456789012345678901234567890/7");
    big.canonicalize();
    json j = coeff_to_json(big);
    CHECK(coeff_from_json(j) == big);
    // Small integers stay native JSON numbers; big ones become strings.
    CHECK(coeff_to_json(mpq_class(42)).is_number_integer());
    CHECK_FALSE(coeff_to_json(big).is_number());
}

TEST_CASE("polynomials and rational functions round-trip", "[jsonio]") {
    Poly p = parse_poly("q^5 - 3*q^2 + (1/2)*q - 7");
    CHECK(poly_from_json(poly_to_json(p)) == p);
    RatFunc r = parse_ratfunc("(q^3-2)/(q^2-q)");
    CHECK(ratfunc_from_json(ratfunc_to_json(r)) == r);
    CHECK(ratfunc_from_json(json{{"num", {-1, 1}}, {"den", {1}}}) == parse_ratfunc("q-1"));
}

TEST_CASE("classes round-trip through the documented format", "[jsonio]") {
    EqClass x(4);
    x.add_to(1, parse_ratfunc("q^4-1"));
    x.add_to(2, parse_ratfunc("-(q^2-1)"));
    x.add_to(4, parse_ratfunc("-q*(q-1)^2"));
    json j = eqclass_to_json(x);
    CHECK(int_field(j, "order") == 4);
    CHECK(j.at("terms").size() == 3);
    CHECK(eqclass_from_json(j) == x);

    json doc = json::parse(R"({"order":1,"terms":[{"d":1,"num":[-1,1],"den":[1]}]})");
    CHECK(eqclass_from_json(doc) == EqClass::term(1, 1, parse_ratfunc("q-1")));
}

TEST_CASE("randomized class round-trips", "[jsonio]") {
    std::mt19937 rng(0x5eed0007);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        i64 order = std::vector<i64>{1, 2, 4, 6, 12}[static_cast<std::size_t>(i) % 5];
        EqClass x(order);
        for (i64 d : divisors(order))
            if (coin(rng) < 0.6)
                x.add_to(d, RatFunc(checks::random_poly(rng, 4, 9),
                                    Poly(1) + Poly::monomial(1, 1)));
        CHECK(eqclass_from_json(eqclass_to_json(x)) == x);
    }
}

TEST_CASE("profiles and block data round-trip", "[jsonio]") {
    RankProfile p = RankProfile::full_rank(3, 2);
    p.t = 1;
    json j = profile_to_json(p);
    RankProfile back = profile_from_json(j);
    CHECK(back.n == p.n);
    CHECK(back.m == p.m);
    CHECK(back.t == p.t);
    CHECK(back.rank == p.rank);

    OrbitBlocks b{4, {{1, 4}, {2, 2}, {3, 1}}};
    OrbitBlocks back_b = blocks_from_json(blocks_to_json(b));
    CHECK(back_b.group_order == b.group_order);
    CHECK(back_b.blocks == b.blocks);
}

TEST_CASE("malformed documents are rejected with a parse error", "[jsonio]") {
    CHECK_THROWS_AS(eqclass_from_json(json::parse(R"({"terms":[]})")), ParseError);
    CHECK_THROWS_AS(eqclass_from_json(json::parse(R"({"order":"x","terms":[]})")), ParseError);
    CHECK_THROWS_AS(eqclass_from_json(json::parse(R"({"order":4,"terms":[{"d":1}]})")),
                    ParseError);
    CHECK_THROWS_AS(coeff_from_json(json::parse(R"({"weird":true})")), ParseError);
    CHECK_THROWS_AS(coeff_from_json(json::parse(R"("not-a-number")")), ParseError);
    CHECK(ratfunc_from_json(json::parse(R"({"num":[5]})")) == RatFunc(5)); // den optional
    CHECK_THROWS_AS(ratfunc_from_json(json::parse(R"({"den":[1]})")), ParseError);
    CHECK_THROWS_AS(ratfunc_from_json(json::parse(R"({"num":[1],"den":[0]})")), ParseError);
    CHECK_THROWS_AS(profile_from_json(json::parse(R"({"n":2,"m":2})")), ParseError);
    CHECK_THROWS_AS(blocks_from_json(json::parse(R"({"order":2})")), ParseError);
}

// SPDX-License-Identifier: MIT
// The ring of classes graded by cyclic-quotient layers: multiplication,
// induction, restriction, pairings, and the verified division algorithm.
#include <catch2/catch_amalgamated.hpp>

#include "support/checks.hpp"

using namespace motiveq;

namespace {
EqClass Q(i64 order, i64 d) { return EqClass::term(order, d, RatFunc(1)); }
} // namespace

TEST_CASE("layer multiplication follows the gcd-lcm rule", "[eqring]") {
    CHECK(Q(6, 2) * Q(6, 3) == Q(6, 6));
    CHECK(Q(6, 2) * Q(6, 2) == EqClass::term(6, 2, RatFunc(2)));
    CHECK(Q(12, 4) * Q(12, 6) == EqClass::term(12, 12, RatFunc(2)));
    for (i64 d : divisors(static_cast<i64>(12)))
        CHECK(Q(12, 1) * Q(12, d) == Q(12, d)); // Q^1 is the unit
    CHECK_THROWS_AS(Q(6, 2) * Q(12, 2), GroupMismatch);
    CHECK_THROWS_AS(Q(6, 2) + Q(12, 2), GroupMismatch);
}

TEST_CASE("classes only carry layers dividing the group order", "[eqring]") {
    EqClass x(6);
    CHECK_THROWS_AS(x.set(4, RatFunc(1)), GroupMismatch);
    x.set(2, RatFunc(1));
    x.set(2, RatFunc()); // setting zero erases the term
    CHECK(x == EqClass(6));
    x.add_to(3, RatFunc(2));
    x.add_to(3, RatFunc(-2));
    CHECK(x == EqClass(6));
}

TEST_CASE("induction, restriction, pairing, and forgetting", "[eqring]") {
    CHECK(induce(Q(2, 2), 6) == Q(6, 6));
    CHECK(induce(Q(2, 1), 6) == Q(6, 3));
    CHECK_THROWS_AS(induce(Q(4, 2), 6), GroupMismatch);

    // Restriction to the index-2 subgroup of the order-12 group.
    CHECK(restrict_to(Q(12, 4), 2) == EqClass::term(6, 2, RatFunc(2)));
    CHECK(restrict_to(Q(12, 3), 2) == Q(6, 3));
    CHECK(restrict_to(Q(12, 12), 2) == EqClass::term(6, 6, RatFunc(2)));

    CHECK(inner(Q(6, 2), Q(6, 3)) == RatFunc(1));
    CHECK(inner(Q(6, 6), Q(6, 6)) == RatFunc(6));

    CHECK(quotient_class(Q(6, 2), 3) == RatFunc(1));
    CHECK(quotient_class(Q(6, 6), 3) == RatFunc(3));
    CHECK(plain_class(Q(6, 3) + Q(6, 2)) == RatFunc(5));

    EqClass x(6);
    x.add_to(2, parse_ratfunc("q-1"));
    x.add_to(3, parse_ratfunc("q"));
    CHECK(plain_class(x) == parse_ratfunc("2*(q-1) + 3*q"));
    CHECK(x.pow(2) == x * x);
}

TEST_CASE("powers expand through the layer rule", "[eqring]") {
    EqClass x = Q(6, 2) + Q(6, 3);
    EqClass want(6);
    want.add_to(2, RatFunc(2));
    want.add_to(3, RatFunc(3));
    want.add_to(6, RatFunc(2));
    CHECK(x.pow(2) == want);
    CHECK(x.pow(0) == Q(6, 1));
}

TEST_CASE("division undoes multiplication along any admissible order", "[eqring]") {
    EqClass g(12), h(12);
    g.add_to(1, parse_ratfunc("q"));
    g.add_to(2, parse_ratfunc("q-1"));
    g.add_to(12, RatFunc(3));
    h.add_to(3, parse_ratfunc("q^2+1"));
    h.add_to(4, RatFunc(-2));
    EqClass f = g * h;

    CHECK(divide(f, g) == h);
    CHECK(divide(f, g, {1, 3, 2, 6, 4, 12}) == h);
    CHECK(divide(f, g, {1, 2, 4, 3, 6, 12}) == h);

    CHECK_THROWS_AS(divide(f, g, {1, 2, 3, 4, 6}), InternalInconsistency);
    CHECK_THROWS_AS(divide(f, g, {12, 1, 2, 3, 4, 6}), InternalInconsistency);
    CHECK_THROWS_AS(divide(f, g, {1, 2, 2, 4, 6, 12}), InternalInconsistency);

    EqClass other(6);
    CHECK_THROWS_AS(divide(f, other), GroupMismatch);
}

TEST_CASE("vanishing pivots are detected before any work", "[eqring]") {
    // Pivot at divisor 1 is g_1 itself.
    EqClass g(4);
    g.add_to(2, parse_ratfunc("q"));
    CHECK_THROWS_AS(divide(g * g, g), ZeroPivot);

    // Pivot at 2 is g_1 + 2 g_2: arrange exact cancellation.
    EqClass g2(4);
    g2.add_to(1, parse_ratfunc("2*q"));
    g2.add_to(2, parse_ratfunc("-q"));
    g2.add_to(4, RatFunc(1));
    CHECK_THROWS_AS(divide(g2 * g2, g2), ZeroPivot);

    // Perturbing the cancellation restores divisibility.
    EqClass g3 = g2;
    g3.add_to(2, RatFunc(1));
    CHECK(divide(g3 * g2, g3) == g2);
}

TEST_CASE("randomized division roundtrips with exact pivot prediction", "[eqring]") {
    auto run = checks::check_division_roundtrip(500);
    CAPTURE(run.failed);
    CHECK(run.ok());
    CHECK(run.total == 501);
}

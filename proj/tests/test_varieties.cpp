// SPDX-License-Identifier: MIT
// Classes of rank-stratified matrix families and cyclic quotients of
// matrix groups by products of block subgroups.
#include <catch2/catch_amalgamated.hpp>

#include "support/checks.hpp"

using namespace motiveq;

TEST_CASE("matrix-group classes", "[varieties]") {
    CHECK(gl_class(1) == parse_poly("q - 1"));
    CHECK(gl_class(2) == parse_poly("(q^2-1)*(q^2-q)"));
    CHECK(gl_class(3) == parse_poly("(q^3-1)*(q^3-q)*(q^3-q^2)"));
    CHECK(pgl_class(2) == parse_poly("q*(q^2-1)"));
    CHECK(pgl_class(3) == parse_poly("q^3*(q^3-1)*(q^2-1)"));
    CHECK(gl_class(2) == pgl_class(2) * parse_poly("q - 1"));
}

TEST_CASE("rank-stratified family classes", "[varieties]") {
    // Two proportional nonzero rows in the plane.
    RankProfile p;
    p.n = 2;
    p.m = 2;
    p.rank = {{1, 1}, {2, 1}, {3, 1}};
    CHECK(vclass(p) == parse_poly("(q^2-1)*(q-1)"));
    CHECK(vclass(p).eval(mpq_class(3)) == 16);
    CHECK(point_count(p, 3) == 16);

    // Generic profiles recover matrix groups.
    CHECK(vclass(RankProfile::full_rank(2, 2)) == gl_class(2));
    CHECK(vclass(RankProfile::full_rank(3, 3)) == gl_class(3));

    // Pinned rows divide out the family of the pinned flag.
    RankProfile pinned = RankProfile::full_rank(2, 2);
    pinned.t = 1;
    CHECK(vclass(pinned) * parse_poly("q^2 - 1") == gl_class(2));
}

TEST_CASE("profiles realized by no matrix evaluate to zero", "[varieties]") {
    auto census = rank_vector_census(2, 2, 2);
    // The census at p = 2 must contain exactly the realizable rank vectors;
    // every profile in it has a positive count and a matching class value.
    for (const auto& [key, size] : census) {
        RankProfile p = profile_from_rank_vector(2, 2, 0, key);
        CHECK(size > 0);
        CHECK(vclass(p).eval(mpq_class(2)) == mpq_class(static_cast<long>(size)));
    }
}

TEST_CASE("every realizable profile matches its point count", "[varieties]") {
    auto run = checks::check_vclass_census();
    CAPTURE(run.failed);
    CHECK(run.ok());
}

TEST_CASE("block-orbit data is validated", "[varieties]") {
    CHECK_THROWS_AS(conj_quotient(OrbitBlocks{2, {}}), InvalidProfile);
    CHECK_THROWS_AS(conj_quotient(OrbitBlocks{2, {{1, 3}}}), InvalidProfile);
    CHECK_THROWS_AS(conj_quotient(OrbitBlocks{0, {{1, 1}}}), InvalidProfile);
    CHECK_THROWS_AS(conj_quotient(OrbitBlocks{2, {{0, 2}}}), InvalidProfile);
    CHECK(OrbitBlocks{4, {{1, 4}}}.total_size() == 4);
    CHECK(OrbitBlocks{2, {{2, 2}, {1, 1}}}.total_size() == 5);
}

TEST_CASE("trivial quotients reduce to matrix-group classes", "[varieties]") {
    // Quotient by the full group itself: GL_n / GL_n = point.
    EqClass self = conj_quotient(OrbitBlocks{1, {{2, 1}}});
    CHECK(self == EqClass::term(1, 1, RatFunc(1)));
    // Quotient of GL_2 by its diagonal torus, no group action.
    EqClass torus = conj_quotient(OrbitBlocks{1, {{1, 1}, {1, 1}}});
    CHECK(torus == EqClass::term(1, 1, parse_ratfunc("q^2+q")));
}

TEST_CASE("the four documented quotients expand exactly", "[varieties]") {
    auto run = checks::check_conj_quartet();
    CAPTURE(run.failed);
    CHECK(run.ok());
    CHECK(run.total == 10);
}

// SPDX-License-Identifier: MIT
// The torus-knot pipeline: normalization, type solves, pattern classes,
// knot assembly at every supported rank, defects, and diagnostics.
#include <catch2/catch_amalgamated.hpp>

#include "support/checks.hpp"

using namespace motiveq;

namespace {
Catalog& cat() {
    static Catalog c = Catalog::load_default();
    return c;
}
json& tables() {
    static json t = checks::load_golden_tables();
    return t;
}
bool divisible_by_q_minus_1(const RatFunc& v) {
    return (v / RatFunc(Poly::q() - Poly(1))).is_polynomial();
}
bool integer_poly(const RatFunc& v) {
    if (!v.is_polynomial()) return false;
    for (int i = 0; i <= v.num().degree(); ++i)
        if (v.num().coeff(static_cast<std::size_t>(i)).get_den() != 1) return false;
    return true;
}
} // namespace

TEST_CASE("knot normalization and parameter validation", "[torusknot]") {
    CHECK(normalize_knot(2, 3, 2) == std::pair<i64, i64>{2, 3});
    CHECK(normalize_knot(3, 4, 2) == std::pair<i64, i64>{4, 3}); // even side first
    CHECK(normalize_knot(3, 4, 4) == std::pair<i64, i64>{4, 3});
    CHECK(normalize_knot(2, 3, 3) == std::pair<i64, i64>{3, 2}); // multiple of 3 first
    CHECK(normalize_knot(3, 2, 3) == std::pair<i64, i64>{3, 2});
    CHECK(normalize_knot(5, 3, 1) == std::pair<i64, i64>{5, 3});
    CHECK_THROWS_AS(normalize_knot(4, 2, 1), InvalidKnot);
    CHECK_THROWS_AS(normalize_knot(0, 3, 1), InvalidKnot);
    CHECK_THROWS_AS(normalize_knot(2, 3, 0), UnsupportedRank);
    CHECK_THROWS_AS(normalize_knot(2, 3, 5), UnsupportedRank);
}

TEST_CASE("rank one reduces to the punctured line", "[torusknot]") {
    TorusKnotReport r = assemble(cat(), 2, 3, 1);
    CHECK(r.rep_available);
    CHECK(r.rep_motive == parse_ratfunc("q-1"));
    CHECK(r.char_motive == parse_ratfunc("q-1")); // trivial center quotient
    CHECK(r.r_irr_equivariant == EqClass::term(6, 6, RatFunc(1)));
    CHECK(r.delta_vs_sl.is_zero());
    TorusKnotReport r2 = assemble(cat(), 5, 3, 1);
    CHECK(r2.rep_motive == parse_ratfunc("q-1"));
    CHECK(r2.r_irr_equivariant == EqClass::term(15, 15, RatFunc(1)));
}

TEST_CASE("orientation symmetry of the assembly", "[torusknot]") {
    for (i64 rank : {1L, 2L, 3L, 4L}) {
        TorusKnotReport a = assemble(cat(), 3, 4, rank);
        TorusKnotReport b = assemble(cat(), 4, 3, rank);
        INFO("rank " << rank);
        CHECK(a.n * a.m == b.n * b.m);
        CHECK(a.r_irr_equivariant == b.r_irr_equivariant);
        CHECK(a.delta_vs_sl == b.delta_vs_sl);
        CHECK(a.rep_available == b.rep_available);
        if (a.rep_available) CHECK(a.rep_motive == b.rep_motive);
    }
}

TEST_CASE("absolute values are integral and vanish at q = 1", "[torusknot]") {
    for (auto [n, m, r] : std::vector<std::tuple<i64, i64, i64>>{
             {2, 3, 2}, {2, 5, 2}, {4, 3, 2}, {4, 5, 2}, {8, 3, 2}, {5, 3, 2},
             {3, 2, 3}, {3, 4, 3}, {3, 5, 3}, {6, 5, 3}, {9, 2, 3}, {5, 2, 3}}) {
        TorusKnotReport rep = assemble(cat(), n, m, r);
        INFO("knot (" << n << "," << m << ") rank " << r);
        CHECK(rep.rep_available);
        CHECK(integer_poly(rep.rep_motive));
        CHECK(divisible_by_q_minus_1(rep.rep_motive));
        CHECK(rep.char_available);
        CHECK(rep.char_motive * RatFunc(pgl_class(r)) == rep.rep_motive);
    }
}

TEST_CASE("diagnostic ablation isolates the reducible correction", "[torusknot]") {
    AssembleOptions drop;
    drop.drop_corrections = true;
    TorusKnotReport full = assemble(cat(), 4, 3, 2);
    TorusKnotReport bare = assemble(cat(), 4, 3, 2, drop);
    CHECK(bare.delta_vs_sl.is_zero());
    CHECK(bare.r_irr_equivariant == full.r_irr_equivariant);
    CHECK(full.rep_motive - bare.rep_motive == full.delta_vs_sl * RatFunc(pgl_class(2)));

    // Where the correction vanishes the ablation changes nothing.
    TorusKnotReport cop = assemble(cat(), 5, 3, 2);
    TorusKnotReport cop_bare = assemble(cat(), 5, 3, 2, drop);
    CHECK(cop.delta_vs_sl.is_zero());
    CHECK(cop.rep_motive == cop_bare.rep_motive);
}

TEST_CASE("rank four reports partial data without a reference", "[torusknot]") {
    TorusKnotReport r = assemble(cat(), 2, 3, 4);
    CHECK_FALSE(r.rep_available);
    CHECK_FALSE(r.char_available);
    CHECK(r.char_conjectural);
    CHECK_FALSE(r.equivariant_complete);
    CHECK(r.delta_available);
    CHECK_FALSE(r.notes.empty());
    CHECK_THROWS_AS(sl_baseline(cat(), 4, 2, 3), MissingBaseline);

    AssembleOptions opt;
    opt.sl4_baseline = parse_poly("q^9 - q^3"); // any reference: the identity is linear in it
    TorusKnotReport w = assemble(cat(), 2, 3, 4, opt);
    CHECK(w.rep_available);
    CHECK(w.char_available);
    CHECK(w.char_conjectural);
    RatFunc want = RatFunc(mpq_class(1, 4)) * parse_ratfunc("q-1") * RatFunc(*opt.sl4_baseline) +
                   w.delta_vs_sl * RatFunc(pgl_class(4));
    CHECK(w.rep_motive == want);
    CHECK(w.char_motive * RatFunc(pgl_class(4)) == w.rep_motive);
    CHECK(w.delta_vs_sl == r.delta_vs_sl); // reference does not move the defect
}

TEST_CASE("rank four defect vanishes on coprime knots", "[torusknot]") {
    TorusKnotReport r = assemble(cat(), 5, 3, 4);
    CHECK(r.delta_vs_sl.is_zero());
    CHECK(r.r_irr_equivariant == EqClass(15));
}

TEST_CASE("deviation notes surface in the report", "[torusknot]") {
    TorusKnotReport r2 = assemble(cat(), 2, 3, 2);
    bool found = false;
    for (const auto& note : r2.notes)
        found = found || note.find("rank2-final-simplified-line") != std::string::npos;
    CHECK(found);
}

TEST_CASE("stabilizer-pattern displays and defects at rank two", "[torusknot]") {
    auto run = checks::check_rank2_pipeline(cat());
    CAPTURE(run.failed);
    CHECK(run.ok());
}

TEST_CASE("regular-pattern displays and defects at rank three", "[torusknot]") {
    auto run = checks::check_rank3_pipeline(cat());
    CAPTURE(run.failed);
    CHECK(run.ok());
}

TEST_CASE("every recorded type solve reproduces", "[torusknot]") {
    auto run = checks::check_type_rows(cat(), tables());
    CAPTURE(run.failed);
    CHECK(run.ok());
}

TEST_CASE("every recorded pattern class reproduces", "[torusknot]") {
    auto run = checks::check_pattern_rows(cat(), tables());
    CAPTURE(run.failed);
    CHECK(run.ok());
}

TEST_CASE("rank-four defect matches its closed form", "[torusknot]") {
    auto run = checks::check_rank4_delta(cat());
    CAPTURE(run.failed);
    CHECK(run.ok());
}

TEST_CASE("coprime knots scale the determinant-one reference", "[torusknot]") {
    auto run = checks::check_coprime_identity(cat());
    CAPTURE(run.failed);
    CHECK(run.ok());
    CHECK(run.total == 3);
}

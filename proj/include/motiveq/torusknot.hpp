// SPDX-License-Identifier: MIT
/**
 * @file torusknot.hpp
 * @brief Assembly of torus-knot representation motives from the catalog:
 *        per-type fibration solves, per-pattern reducible corrections, and
 *        the weighted induction over eigenvalue-pattern orbits.
 *
 * For one reducible type the fibration identity reads
 *
 *   R(tau) * F0' * q^D = M * GL_r * I(tau)
 *
 * inside the ring attached to the type's stabilizer, and R(tau) is recovered
 * by triangular division.  A pattern's reducible locus is the weighted sum of
 * its types induced up to the pattern's stabilizer, the irreducible part is
 * the base class minus that locus, and the knot-level class is the orbit-
 * weighted induction of the irreducible parts to the full cyclic group.
 */
#pragma once

#include "catalog.hpp"

namespace motiveq {

/// Class of PGL_r: q^{r-1} * prod_{i=0}^{r-2} (q^r - q^i).
inline Poly pgl_class(i64 r) {
    if (r < 1) throw UnsupportedRank("rank must be positive");
    Poly p = Poly::monomial(1, static_cast<std::size_t>(r - 1));
    for (i64 i = 0; i + 1 < r; ++i)
        p = p * (Poly::monomial(1, static_cast<std::size_t>(r)) - Poly::monomial(1, static_cast<std::size_t>(i)));
    return p;
}

/// Orients (n, m) so the counting guards see the divisible parameter first:
/// the even one for ranks 2 and 4, the one divisible by 3 for rank 3.
/// The motive itself is symmetric in (n, m).
inline std::pair<i64, i64> normalize_knot(i64 n, i64 m, i64 r) {
    if (n < 1 || m < 1 || gcd_i(n, m) != 1)
        throw InvalidKnot("gcd(n,m) must be 1");
    if (r < 1 || r > 4) throw UnsupportedRank("rank must be between 1 and 4");
    if ((r == 2 || r == 4) && m % 2 == 0) std::swap(n, m);
    if (r == 3 && m % 3 == 0) std::swap(n, m);
    return {n, m};
}

/// Solves the fibration identity of one reducible type for R(tau).
inline EqClass r_tau(const Catalog& cat, const TauRecipe& tau, i64 rank) {
    const i64 g = tau.stabilizer_order;
    EqClass num = EqClass::term(g, 1, RatFunc(gl_class(rank)));
    if (!tau.m_tau.is_null()) {
        EqClass m = cat.eval(tau.m_tau);
        if (m.order() != g) throw GroupMismatch("type factor M lives in the wrong ring");
        num = num * m;
    }
    EqClass i = cat.eval(tau.i_tau);
    EqClass f0 = cat.eval(tau.f0_prime);
    if (i.order() != g || f0.order() != g)
        throw GroupMismatch("type factors live in the wrong ring");
    num = num * i;
    EqClass den = f0 * EqClass::term(g, 1, RatFunc(Poly::monomial(1, static_cast<std::size_t>(tau.d_exponent))));
    return divide(num, den);
}

/// Reducible locus of one pattern: sum over its types of
/// (|stab(tau)| / |stab(kappa)|) * count * induced R(tau).
inline EqClass r_kappa_red(const Catalog& cat, const KappaPattern& k) {
    EqClass red = EqClass(k.stabilizer_order);
    for (const TauRecipe& tau : k.taus) {
        if (k.stabilizer_order % tau.stabilizer_order != 0)
            throw GroupMismatch("type stabilizer must sit inside the pattern stabilizer");
        mpq_class weight(static_cast<long>(tau.count) * static_cast<long>(tau.stabilizer_order),
                         static_cast<long>(k.stabilizer_order));
        weight.canonicalize();
        red = red + RatFunc(weight) * induce(r_tau(cat, tau, k.rank), k.stabilizer_order);
    }
    return red;
}

/// Irreducible part of one pattern: base class minus reducible locus.
inline EqClass r_kappa_irr(const Catalog& cat, const KappaPattern& k) {
    EqClass base = cat.eval(k.base_class);
    if (base.order() != k.stabilizer_order)
        throw GroupMismatch("pattern base class lives in the wrong ring");
    return base - r_kappa_red(cat, k);
}

namespace detail {

/// Number of pattern orbits: count * |stab| / (n m).  Counts enumerate
/// individual eigenvalue configurations, so this must come out a
/// nonnegative integer.
inline mpq_class orbit_count(const KappaPattern& k, i64 n, i64 m) {
    mpq_class count = parse_count(k.count, {{"n", mpq_class(static_cast<long>(n))},
                                            {"m", mpq_class(static_cast<long>(m))}});
    if (count < 0) throw InternalInconsistency("pattern count must be nonnegative");
    mpq_class orbits = count * static_cast<long>(k.stabilizer_order);
    orbits /= static_cast<long>(n) * static_cast<long>(m);
    orbits.canonicalize();
    if (orbits.get_den() != 1)
        throw InternalInconsistency("pattern count does not split into whole orbits");
    return orbits;
}

} // namespace detail

/// Reference polynomial for the determinant-one variant, normalized as
/// (r / n m) * sum over patterns of count * plain irreducible class.
/// Available internally for ranks up to 3.
inline Poly sl_baseline(const Catalog& cat, i64 r, i64 n, i64 m) {
    if (r < 1 || r > 3)
        throw MissingBaseline("no internal determinant-one reference beyond rank 3");
    auto [nn, mm] = normalize_knot(n, m, r);
    RatFunc acc;
    for (const KappaPattern& k : cat.patterns(r)) {
        mpq_class count = parse_count(k.count, {{"n", mpq_class(static_cast<long>(nn))},
                                                {"m", mpq_class(static_cast<long>(mm))}});
        if (count == 0) continue;
        acc = acc + RatFunc(count) * plain_class(r_kappa_irr(cat, k));
    }
    mpq_class scale(static_cast<long>(r), static_cast<long>(nn) * static_cast<long>(mm));
    scale.canonicalize();
    acc = RatFunc(scale) * acc;
    if (!acc.is_polynomial())
        throw InternalInconsistency("determinant-one reference must be a polynomial");
    return acc.as_poly();
}

/// Closed form for the rank-4 defect between the knot motive and the scaled
/// determinant-one reference, as a polynomial identity in q with counting
/// coefficients in (n, m).  Matches the assembled pipeline value.
inline RatFunc delta_closed_form(i64 n, i64 m) {
    auto [nn, mm] = normalize_knot(n, m, 4);
    const auto Q = [](long c, std::size_t e) { return Poly::monomial(c, e); };
    const Poly q = Poly::q();
    const Poly qm1 = q - Poly(1);
    auto count = [&](const char* expr) {
        return parse_count(expr, {{"n", mpq_class(static_cast<long>(nn))},
                                  {"m", mpq_class(static_cast<long>(mm))}});
    };
    RatFunc total;
    if (nn % 2 == 0) {
        const Poly p7 = Q(1, 5) + Q(2, 4) - Q(1, 3) + Q(3, 2) + Q(2, 1) - Poly(2);
        const Poly p5 = Q(1, 7) + Q(2, 6) + Q(4, 5) + Q(5, 4) - Q(6, 3) - Q(6, 2) - Q(6, 1) - Poly(6);
        total = total + RatFunc(count("-(n-2)*(m-1)/16")) * RatFunc(qm1 * p7);
        total = total + RatFunc(count("(n-2)/8*binom(m-1,2)")) *
                RatFunc(qm1 * q * (Q(1, 2) + Q(1, 1) + Poly(1)) * (Q(1, 4) - Q(2, 2) - Poly(2)));
        total = total + RatFunc(count("-(n-2)*(m-1)/8")) * RatFunc(qm1 * q * (Q(3, 2) + Poly(2)));
        total = total + RatFunc(count("(n-2)/32*binom(m-1,3)")) * RatFunc(qm1 * Q(1, 2) * p5);
        total = total + RatFunc(count("-binom(m-1,2)/2")) * RatFunc(qm1 * q * (Q(1, 2) + Q(1, 1) + Poly(3)));
        total = total + RatFunc(count("binom(m-1,3)/8")) * RatFunc(Q(1, 4) * (Q(1, 2) + Q(1, 1) - Poly(5)));
    }
    if (nn % 4 == 0) {
        const Poly a = qm1 * Q(1, 6) * (q + Poly(1)) * (Q(1, 2) + Q(1, 1) + Poly(1));
        const Poly b = qm1 * Q(1, 5) * (Q(1, 2) + Q(1, 1) + Poly(1));
        const Poly c = qm1 * Q(1, 2) * (Q(1, 3) + Q(3, 1) - Poly(1));
        total = total + RatFunc(count("binom(m-1,3)/8")) * RatFunc(a);
        total = total + RatFunc(count("binom(m-1,2)/2")) * RatFunc(b);
        total = total + RatFunc(count("(m-1)/4")) * RatFunc(c);
    }
    return total;
}

struct AssembleOptions {
    /// Determinant-one reference polynomial for rank 4, supplied externally.
    std::optional<Poly> sl4_baseline;
    /// Diagnostic: skip all reducible corrections, keeping only the leading
    /// summand of the assembly identity.
    bool drop_corrections = false;
};

/// Everything the pipeline can say about one knot at one rank.
struct TorusKnotReport {
    i64 n = 0;                   // normalized orientation
    i64 m = 0;
    i64 rank = 0;
    EqClass r_irr_equivariant;   // class over the full cyclic group
    bool equivariant_complete = true;  // rank 4: only the beyond-average layers
    RatFunc rep_motive;
    bool rep_available = false;
    RatFunc char_motive;
    bool char_available = false;
    bool char_conjectural = false;     // rank 4 rests on an open conjecture
    RatFunc delta_vs_sl;
    bool delta_available = false;
    std::vector<std::string> notes;
};

/// Runs the whole pipeline for the (n, m) torus knot at the given rank.
inline TorusKnotReport assemble(const Catalog& cat, i64 n, i64 m, i64 r,
                                const AssembleOptions& opt = {}) {
    auto [nn, mm] = normalize_knot(n, m, r);
    const i64 nm = nn * mm;
    TorusKnotReport rep;
    rep.n = nn;
    rep.m = mm;
    rep.rank = r;
    rep.r_irr_equivariant = EqClass(nm);

    RatFunc delta_rep;   // (q-1) * sum of (count / nm) * (|stab| - d) coefficients
    for (const KappaPattern& k : cat.patterns(r)) {
        mpq_class orbits = detail::orbit_count(k, nn, mm);
        if (orbits == 0) continue;
        if (gcd_i(r, nm) % k.stabilizer_order != 0)
            throw InternalInconsistency("active pattern stabilizer must divide gcd(rank, n m)");
        EqClass irr = r_kappa_irr(cat, k);
        if (r == 4) {
            // Without an absolute reference the average layer stays symbolic;
            // assemble only the layers above it.
            RatFunc avg = RatFunc(mpq_class(1, static_cast<unsigned long>(k.stabilizer_order))) *
                          plain_class(irr);
            irr = irr - EqClass::term(k.stabilizer_order, k.stabilizer_order, avg);
        }
        rep.r_irr_equivariant = rep.r_irr_equivariant + RatFunc(orbits) * induce(irr, nm);
        for (const auto& [d, c] : irr.terms()) {
            if (d >= k.stabilizer_order) continue;
            mpq_class w = orbits * static_cast<long>(k.stabilizer_order - d);
            w /= static_cast<long>(k.stabilizer_order);
            w.canonicalize();
            delta_rep = delta_rep + RatFunc(w) * c;
        }
    }
    const RatFunc qm1 = RatFunc(Poly::q() - Poly(1));
    delta_rep = qm1 * delta_rep;
    // The diagnostic keeps the leading summand of the assembly identity only.
    const RatFunc delta_applied = opt.drop_corrections ? RatFunc() : delta_rep;
    const RatFunc pgl = RatFunc(pgl_class(r));
    rep.delta_vs_sl = delta_applied / pgl;
    rep.delta_available = true;

    if (r <= 3) {
        rep.rep_motive = qm1 * quotient_class(rep.r_irr_equivariant, 1) -
                         (delta_rep - delta_applied);
        rep.rep_available = true;
        rep.char_motive = rep.rep_motive / pgl;
        rep.char_available = true;
    } else {
        rep.equivariant_complete = false;
        rep.notes.push_back("rank 4: equivariant class covers the layers above the average; "
                            "absolute values need the external determinant-one reference");
        rep.char_conjectural = true;
        if (opt.sl4_baseline) {
            mpq_class quarter(1, 4);
            rep.rep_motive = qm1 * (RatFunc(quarter) * RatFunc(*opt.sl4_baseline)) + delta_applied;
            rep.rep_available = true;
            rep.char_motive = rep.rep_motive / pgl;
            rep.char_available = true;
            rep.notes.push_back("rank 4: absolute values assume the character-variety "
                                "correspondence, open at this rank");
        }
    }
    for (const Deviation& d : cat.deviations())
        for (i64 dr : d.ranks)
            if (dr == r)
                rep.notes.push_back(d.id + " [" + d.location + "]: source prints " + d.printed +
                                    ", computation uses " + d.used);
    return rep;
}

} // namespace motiveq

// SPDX-License-Identifier: MIT
/**
 * @file tower.hpp
 * @brief The permutation-of-factors calculus: fixed-point characters,
 *        divisor towers with the "*" addition and its inverse, the general
 *        Per operator on integer classes, and the prime-index closed form.
 *
 * Indexing convention: a tower over base order B with extension index N has
 * one entry per divisor m of N, and entry m lives over the group of order
 * B*m, the intermediate group in which the base has index m. Under this
 * convention the coherence law "restricting entry m to the index-(m/d)
 * subgroup equals entry d to the power m/d" and the plain-class law
 * "plain(entry m) = plain(entry 1)^m" hold simultaneously; both are enforced
 * by tests against the brute-force oracle.
 */
#pragma once

#include <map>

#include "eqclass.hpp"

namespace motiveq {

/**
 * The class Q^{Per(G/H)} of the permutation-of-factors action on the N-fold
 * product of the size-h quotient G/H: sum over divisors d of N that are
 * multiples of M of (1/(hd)) * (sum over M|d'|d of h^{d'} mu(d/d')) Q^{hd},
 * where M is the product over primes p dividing h of p^{v_p(N)}. All
 * resulting multiplicities are nonnegative integers.
 */
inline EqClass per_character(i64 h, i64 n) {
    if (h < 1 || n < 1) throw ParseError("per_character: arguments must be positive");
    i64 m_bound = 1; // product over primes p|h of the full p-power in n
    for (auto [p, e] : factorize(h)) {
        (void)e;
        i64 pk = 1;
        while (n % (pk * p) == 0) pk *= p;
        m_bound *= pk;
    }
    EqClass out(h * n);
    for (i64 d : divisors(n)) {
        if (d % m_bound != 0) continue;
        mpq_class acc(0);
        for (i64 dp : divisors(d)) {
            if (dp % m_bound != 0) continue;
            mpz_class hp;
            mpz_pow_ui(hp.get_mpz_t(), mpz_class(static_cast<long>(h)).get_mpz_t(),
                       static_cast<unsigned long>(dp));
            acc += mpq_class(hp) * mobius(d / dp);
        }
        acc /= mpq_class(static_cast<long>(h * d));
        if (acc != 0) {
            if (acc.get_den() != 1 || acc < 0)
                throw InternalInconsistency("per_character produced a non-integral multiplicity");
            out.add_to(h * d, RatFunc(acc));
        }
    }
    return out;
}

/// Family of classes over the intermediate groups of a cyclic extension.
struct DivisorTower {
    i64 base_order = 1;
    i64 extension = 1;                // N
    std::map<i64, EqClass> entries;   // m | N  ->  class over the order base_order*m group

    static DivisorTower zero(i64 base_order, i64 extension) {
        DivisorTower t{base_order, extension, {}};
        for (i64 m : divisors(extension))
            t.entries.emplace(m, EqClass(base_order * m));
        return t;
    }

    const EqClass& entry(i64 m) const { return entries.at(m); }

    friend bool operator==(const DivisorTower& a, const DivisorTower& b) {
        return a.base_order == b.base_order && a.extension == b.extension && a.entries == b.entries;
    }
};

inline void require_same_shape(const DivisorTower& a, const DivisorTower& b) {
    if (a.base_order != b.base_order || a.extension != b.extension)
        throw TowerMismatch("towers with base orders " + std::to_string(a.base_order) + ", " +
                            std::to_string(b.base_order) + " and extensions " +
                            std::to_string(a.extension) + ", " + std::to_string(b.extension));
}

/**
 * Tower of the unit monomial q^a tensor Q^d over base order B: entry m is
 * q^{a m} tensor Q^{Per(G/H)} with |G/H| = d, expanded over the order-(B m)
 * intermediate group.
 */
inline DivisorTower omega_monomial(i64 a, i64 d, i64 base_order, i64 extension) {
    if (base_order % d != 0)
        throw GroupMismatch("omega_monomial: Q^" + std::to_string(d) +
                            " does not exist over the order-" + std::to_string(base_order) + " group");
    DivisorTower t = DivisorTower::zero(base_order, extension);
    for (i64 m : divisors(extension)) {
        EqClass pc = per_character(d, m); // support divides d*m, hence base_order*m
        EqClass entry(base_order * m);
        for (const auto& [k, v] : pc.terms())
            entry.add_to(k, RatFunc(Poly::monomial(1, static_cast<std::size_t>(a * m))) * v);
        t.entries[m] = entry;
    }
    return t;
}

/**
 * The "*" addition on towers: entry m of X*Y is
 *   sum over d|m of (d/m) Ind from level d to level m of
 *     sum over d|d'|m of mu(d'/d) (X_d^{d'/d} + Y_d^{d'/d})^{m/d'} .
 * Commutative and associative with the zero tower as neutral element.
 */
inline DivisorTower star_add(const DivisorTower& x, const DivisorTower& y) {
    require_same_shape(x, y);
    DivisorTower z = DivisorTower::zero(x.base_order, x.extension);
    for (i64 m : divisors(x.extension)) {
        EqClass acc(x.base_order * m);
        for (i64 d : divisors(m)) {
            for (i64 dp : divisors(m)) {
                if (dp % d != 0) continue;
                int mu = mobius(dp / d);
                if (mu == 0) continue;
                EqClass s = x.entry(d).pow(static_cast<unsigned long>(dp / d)) +
                            y.entry(d).pow(static_cast<unsigned long>(dp / d));
                EqClass p = s.pow(static_cast<unsigned long>(m / dp));
                mpq_class w(static_cast<long>(mu) * static_cast<long>(d), static_cast<long>(m));
                w.canonicalize();
                acc += RatFunc(w) * induce(p, x.base_order * m);
            }
        }
        z.entries[m] = acc;
    }
    return z;
}

/// The "*"-inverse, solved entry by entry: the unknown enters linearly at its
/// own level, every other term involves strictly lower entries.
inline DivisorTower star_neg(const DivisorTower& x) {
    DivisorTower y = DivisorTower::zero(x.base_order, x.extension);
    for (i64 m : divisors(x.extension)) { // increasing order visits lower levels first
        EqClass rest(x.base_order * m);
        for (i64 d : divisors(m)) {
            if (d == m) continue;
            for (i64 dp : divisors(m)) {
                if (dp % d != 0) continue;
                int mu = mobius(dp / d);
                if (mu == 0) continue;
                EqClass s = x.entry(d).pow(static_cast<unsigned long>(dp / d)) +
                            y.entry(d).pow(static_cast<unsigned long>(dp / d));
                mpq_class w(static_cast<long>(mu) * static_cast<long>(d), static_cast<long>(m));
                w.canonicalize();
                rest += RatFunc(w) * induce(s.pow(static_cast<unsigned long>(m / dp)),
                                            x.base_order * m);
            }
        }
        y.entries[m] = -x.entry(m) - rest;
    }
    return y;
}

/**
 * Full Per tower of an integer class: decompose into signed unit monomials,
 * build their omega towers and combine with the "*" operations. Only genuine
 * classes (integer polynomial coefficients) are accepted.
 */
inline DivisorTower per_tower(const EqClass& x, i64 extension) {
    if (!x.is_integer_polynomial())
        throw NonIntegerInput("Per requires integer polynomial coefficients, got " + x.to_string());
    DivisorTower acc = DivisorTower::zero(x.order(), extension);
    for (const auto& [d, v] : x.terms()) {
        const Poly& p = v.num();
        for (int i = 0; i <= p.degree(); ++i) {
            mpq_class c = p.coeff(static_cast<std::size_t>(i));
            if (c == 0) continue;
            mpz_class reps = abs(mpz_class(c.get_num()));
            DivisorTower unit = omega_monomial(i, d, x.order(), extension);
            if (c < 0) unit = star_neg(unit);
            for (mpz_class k = 0; k < reps; ++k) acc = star_add(acc, unit);
        }
    }
    return acc;
}

/// Per of an integer class along a degree-N cyclic extension: the top entry
/// of the tower, a class over the order |G|*N group.
inline EqClass per(const EqClass& x, i64 extension) {
    return per_tower(x, extension).entry(extension);
}

/**
 * Prime-index closed form: for prime N and a plain class p carried by the
 * size-h quotient,
 *   p(q^N) tensor Q^{Per(G/H)} + h^{N-1} (1/N) (p^N - p(q^N)) tensor Q^{hN},
 * a class over the order-(hN) group. Agrees with per() wherever both apply.
 */
inline EqClass per_prime(const Poly& p, i64 h, i64 n) {
    if (!is_prime(n)) throw NotPrime("per_prime: index " + std::to_string(n) + " is not prime");
    Poly pn = p.compose_qpow(static_cast<std::size_t>(n));
    EqClass out(h * n);
    EqClass pc = per_character(h, n);
    for (const auto& [k, v] : pc.terms()) out.add_to(k, RatFunc(pn) * v);
    mpz_class hpow;
    mpz_pow_ui(hpow.get_mpz_t(), mpz_class(static_cast<long>(h)).get_mpz_t(),
               static_cast<unsigned long>(n - 1));
    mpq_class scale(hpow, mpz_class(static_cast<long>(n)));
    scale.canonicalize();
    Poly corr = p.pow(static_cast<unsigned long>(n)) - pn;
    out.add_to(h * n, RatFunc(scale) * RatFunc(corr));
    return out;
}

} // namespace motiveq

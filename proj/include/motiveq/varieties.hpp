// SPDX-License-Identifier: MIT
/**
 * @file varieties.hpp
 * @brief Classes of concrete varieties: rank-constrained row tuples via a
 *        product of inclusion-exclusion factors, general linear groups, and
 *        equivariant quotients of GL_n by products of block subgroups that
 *        a cyclic group permutes.
 */
#pragma once

#include <vector>

#include "profile.hpp"
#include "tower.hpp"

namespace motiveq {

namespace detail {

/**
 * The dimension functional d on families of row subsets:
 *   d(empty family) = m,
 *   d(F) = (-1)^(|F|-1) ( r(union of F) + sum over proper nonempty
 *          subfamilies F' of (-1)^(|F'|) d(F') ).
 * Unwinding the recursion gives inclusion-exclusion of r over unions, which
 * for realizable data is the dimension of the intersection of the spans.
 * Memoized over families canonicalized as sorted vectors of subset masks;
 * the family lattice is doubly exponential in the row count, hence the hard
 * cap on vclass.
 */
class DimensionFunctional {
public:
    DimensionFunctional(const RankProfile& p) : p_(p) {}

    i64 d(std::vector<unsigned> family) const {
        if (family.empty()) return p_.m;
        std::sort(family.begin(), family.end());
        family.erase(std::unique(family.begin(), family.end()), family.end());
        return d_sorted(family);
    }

private:
    i64 d_sorted(const std::vector<unsigned>& family) const {
        auto it = memo_.find(family);
        if (it != memo_.end()) return it->second;
        const std::size_t k = family.size();
        unsigned whole = 0;
        for (unsigned s : family) whole |= s;
        i64 acc = p_.r(whole);
        std::vector<unsigned> sub;
        for (unsigned long long pick = 1; pick + 1 < (1ull << k); ++pick) {
            sub.clear();
            for (std::size_t i = 0; i < k; ++i)
                if (pick & (1ull << i)) sub.push_back(family[i]);
            i64 sign = sub.size() % 2 == 0 ? 1 : -1;
            acc += sign * d_sorted(sub);
        }
        i64 value = (k % 2 == 1 ? 1 : -1) * acc;
        memo_.emplace(family, value);
        return value;
    }

    const RankProfile& p_;
    mutable std::map<std::vector<unsigned>, i64> memo_;
};

} // namespace detail

/**
 * Class of the variety of row tuples obeying a rank profile, as a polynomial
 * in q (the group action never mixes it with other representations, so the
 * equivariant class is this polynomial tensor the trivial character).
 *
 * Row j > t contributes the factor
 *   q^{d(K_j)} - sum over nonempty families F inside the complement of K_j
 *                of (-1)^(|F|+1) q^{d(F union K_j)}
 * where K_j collects the subsets S of {1..j-1} whose rank does not grow
 * when row j joins, and d is the dimension functional above. Pinned rows
 * contribute nothing; the result depends on them only through r.
 */
inline Poly vclass(const RankProfile& p) {
    p.validate();
    if (p.n > 6)
        throw ProfileTooLarge("vclass enumerates families of row subsets; n <= 6 required");
    detail::DimensionFunctional dim(p);
    Poly result = 1;
    for (i64 j = p.t + 1; j <= p.n; ++j) {
        const unsigned jbit = 1u << (j - 1);
        std::vector<unsigned> grown, kept; // subsets where row j does / does not add rank
        for (unsigned mask = 0; mask < (1u << (j - 1)); ++mask)
            (p.r(mask | jbit) != p.r(mask) ? grown : kept).push_back(mask);
        Poly factor = Poly::monomial(1, static_cast<std::size_t>(dim.d(kept)));
        std::vector<unsigned> family;
        for (unsigned long long pick = 1; pick < (1ull << grown.size()); ++pick) {
            family = kept;
            for (std::size_t i = 0; i < grown.size(); ++i)
                if (pick & (1ull << i)) family.push_back(grown[i]);
            i64 sign = __builtin_popcountll(pick) % 2 == 1 ? 1 : -1; // (-1)^(|F|+1)
            factor -= Poly::monomial(sign, static_cast<std::size_t>(dim.d(family)));
        }
        result *= factor;
    }
    return result;
}

/// Class of GL_n: product over i < n of (q^n - q^i).
inline Poly gl_class(i64 n) {
    if (n < 0) throw InvalidProfile("gl_class needs n >= 0");
    Poly result = 1;
    for (i64 i = 0; i < n; ++i)
        result *= Poly::monomial(1, static_cast<std::size_t>(n)) -
                  Poly::monomial(1, static_cast<std::size_t>(i));
    return result;
}

/**
 * A block datum for a quotient of GL_n: the centralizer-like subgroup is a
 * product of GL_lambda factors arranged in orbits that the acting cyclic
 * group permutes cyclically; one entry per orbit, ell = orbit length.
 */
struct OrbitBlocks {
    i64 group_order = 1;                      // order of the acting cyclic group
    std::vector<std::pair<i64, i64>> blocks;  // (lambda, ell) per orbit

    i64 total_size() const {
        i64 n = 0;
        for (auto [lambda, ell] : blocks) n += lambda * ell;
        return n;
    }

    void validate() const {
        if (group_order < 1) throw InvalidProfile("group order must be positive");
        if (blocks.empty()) throw InvalidProfile("at least one block orbit is required");
        for (auto [lambda, ell] : blocks) {
            if (lambda < 1 || ell < 1)
                throw InvalidProfile("block size and orbit length must be positive");
            if (group_order % ell != 0)
                throw InvalidProfile("orbit length must divide the group order");
        }
    }
};

/**
 * Equivariant class of GL_n divided by a product of block subgroups: the
 * class of GL_n (trivial action) divided, in the isotypic basis, by the
 * product over orbits of the permutation-of-factors class of GL_lambda^ell.
 * Each orbit factor is per() of the plain GL_lambda class lifted from the
 * index-ell intermediate subgroup; ell = 1 factors act trivially.
 */
inline EqClass conj_quotient(const OrbitBlocks& b) {
    b.validate();
    const i64 n = b.total_size();
    EqClass numerator = EqClass::term(b.group_order, 1, RatFunc(gl_class(n)));
    EqClass denominator = EqClass::one(b.group_order);
    for (auto [lambda, ell] : b.blocks) {
        EqClass seed = EqClass::term(b.group_order / ell, 1, RatFunc(gl_class(lambda)));
        denominator *= per(seed, ell); // ell = 1: per is the identity
    }
    return divide(numerator, denominator);
}

} // namespace motiveq

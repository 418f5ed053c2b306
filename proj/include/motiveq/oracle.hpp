// SPDX-License-Identifier: MIT
/**
 * @file oracle.hpp
 * @brief Brute-force validators, independent of the symbolic calculus:
 *        character decomposition of the shift-and-twist action on tuples,
 *        and point counts of rank-profile varieties over small prime fields.
 *
 * Everything in this file works by exhaustive enumeration with exact integer
 * arithmetic. The test suite checks agreement with the closed formulas
 * implemented elsewhere, so nothing here may call them.
 */
#pragma once

#include <vector>

#include "eqclass.hpp"
#include "profile.hpp"

namespace motiveq {

/**
 * Shift-and-twist action on tuples: the generator sends (x_1, ..., x_N) in
 * (Z/h)^N to (x_N + 1 mod h, x_1, ..., x_{N-1}). Its N-th power translates
 * every coordinate by one, so it generates a cyclic group of order hN;
 * h = 1 and N = 1 degenerate gracefully.
 */
struct FiniteActionSpec {
    i64 h = 1; // base set size, acted on by translation
    i64 N = 1; // number of factors

    void validate() const {
        if (h < 1 || N < 1) throw TooLarge("action parameters must be positive");
        if (h * N > 16) throw TooLarge("shift-and-twist enumeration limited to h*N <= 16");
    }
};

namespace detail {

/// One application of the shift-and-twist generator, in place.
inline void shift_twist_step(std::vector<i64>& x, i64 h) {
    i64 last = x.back();
    for (std::size_t i = x.size() - 1; i > 0; --i) x[i] = x[i - 1];
    x[0] = (last + 1) % h;
}

/// Advances the little-endian base-h counter; false once it wraps around.
inline bool next_tuple(std::vector<i64>& x, i64 h) {
    for (auto& xi : x) {
        if (++xi < h) return true;
        xi = 0;
    }
    return false;
}

} // namespace detail

/// Number of tuples fixed by the k-th power of the shift-and-twist generator.
inline i64 fixed_point_count(const FiniteActionSpec& s, i64 k) {
    s.validate();
    if (k < 0) throw TooLarge("power must be nonnegative");
    i64 count = 0;
    std::vector<i64> x(static_cast<std::size_t>(s.N), 0);
    do {
        std::vector<i64> y = x;
        for (i64 step = 0; step < k; ++step) detail::shift_twist_step(y, s.h);
        if (y == x) ++count;
    } while (detail::next_tuple(x, s.h));
    return count;
}

/**
 * Character decomposition of the shift-and-twist action by direct orbit
 * counting: a free orbit of the size-d quotient contributes d fixed tuples
 * to every power divisible by d and none otherwise, so the fixed-point
 * counts over divisors of hN determine the multiplicity of each Q^d by a
 * unitriangular solve in increasing divisor order.
 */
inline EqClass perm_character_bruteforce(const FiniteActionSpec& s) {
    s.validate();
    const i64 order = s.h * s.N;
    std::map<i64, i64> mult;
    for (i64 d : divisors(order)) {
        i64 fixed = fixed_point_count(s, d);
        for (const auto& [e, me] : mult)
            if (d % e == 0) fixed -= e * me;
        if (fixed % d != 0 || fixed < 0)
            throw InternalInconsistency("fixed-point counts are not a permutation character");
        mult[d] = fixed / d;
    }
    EqClass out(order);
    for (const auto& [d, md] : mult)
        if (md != 0) out.set(d, RatFunc(mpq_class(static_cast<long>(md))));
    return out;
}

namespace detail {

/**
 * Echelon bases over F_p for every row subset, rebuilt per matrix: the basis
 * for a mask extends the basis for the mask without its lowest bit by one
 * row reduction, so all 2^n ranks cost O(2^n * m^2) per matrix.
 */
class SubsetRanks {
public:
    SubsetRanks(i64 n, i64 p) : p_(p), basis_(1u << n) {}

    void load(const std::vector<std::vector<i64>>& rows) {
        basis_[0].clear();
        for (unsigned mask = 1; mask < basis_.size(); ++mask) {
            unsigned rest = mask & (mask - 1);
            int j = __builtin_ctz(mask ^ rest);
            basis_[mask] = basis_[rest];
            insert(basis_[mask], rows[static_cast<std::size_t>(j)]);
        }
    }

    i64 rank(unsigned mask) const { return static_cast<i64>(basis_[mask].size()); }

private:
    /// Reduces v against the echelon basis; appends the remainder if nonzero.
    void insert(std::vector<std::vector<i64>>& basis, std::vector<i64> v) const {
        for (const auto& b : basis) {
            std::size_t lead = 0;
            while (b[lead] == 0) ++lead; // basis rows are nonzero
            if (v[lead] == 0) continue;
            i64 factor = (v[lead] * inverse(b[lead])) % p_;
            for (std::size_t i = lead; i < v.size(); ++i)
                v[i] = ((v[i] - factor * b[i]) % p_ + p_) % p_;
        }
        for (i64 vi : v)
            if (vi != 0) {
                basis.push_back(std::move(v));
                return;
            }
    }

    i64 inverse(i64 a) const { // p_ is tiny, a scan beats anything clever
        for (i64 b = 1; b < p_; ++b)
            if ((a * b) % p_ == 1) return b;
        throw InternalInconsistency("no inverse modulo " + std::to_string(p_));
    }

    i64 p_;
    std::vector<std::vector<std::vector<i64>>> basis_;
};

inline void check_count_bounds(const RankProfile& profile, i64 p) {
    profile.validate();
    if (p != 2 && p != 3 && p != 5) throw TooLarge("point counts support p in {2, 3, 5} only");
    i64 cells = profile.n * profile.m;
    if (cells > 9 || (p == 5 && cells > 6))
        throw TooLarge("point count enumeration limited to n*m <= 9 (6 for p = 5)");
}

} // namespace detail

/**
 * Exact number of points over F_p of the variety cut out by a rank profile:
 * tuples of the n - t free rows extending a pinned tuple with the required
 * rank data. When t > 0 the count is computed separately for every pinned
 * tuple realizing the restricted data and must come out the same each time
 * (the class formula promises independence), else InternalInconsistency;
 * with no realizing pinned tuple the count is 0.
 */
inline i64 point_count(const RankProfile& profile, i64 p) {
    detail::check_count_bounds(profile, p);
    const i64 n = profile.n, m = profile.m, t = profile.t;
    const unsigned full = n > 0 ? (1u << n) - 1u : 0u;
    const unsigned pinned = t > 0 ? (1u << t) - 1u : 0u;
    detail::SubsetRanks ranks(n, p);
    std::vector<std::vector<i64>> rows(static_cast<std::size_t>(n),
                                       std::vector<i64>(static_cast<std::size_t>(m), 0));
    // Big-endian row-major odometer: index 0 moves slowest, so a carry into
    // positions < t*m marks the end of a pinned block.
    std::vector<i64> flat(static_cast<std::size_t>(n * m), 0);

    i64 block = -1;  // running count inside the current pinned block, -1 = skipping
    i64 agreed = -1; // common block count seen so far
    bool any_block = false, more = true;
    bool at_block_start = true;
    while (more) {
        for (i64 i = 0; i < n * m; ++i)
            rows[static_cast<std::size_t>(i / m)][static_cast<std::size_t>(i % m)] =
                flat[static_cast<std::size_t>(i)];
        ranks.load(rows);
        auto agree_up_to = [&](unsigned hi) {
            for (unsigned mask = 1; mask <= hi; ++mask)
                if (ranks.rank(mask) != profile.r(mask)) return false;
            return true;
        };
        if (t > 0 && at_block_start) {
            if (agree_up_to(pinned)) {
                block = 0;
                any_block = true;
            } else {
                // fast-forward past every matrix sharing this pinned tuple
                block = -1;
                more = false;
                for (i64 i = t * m; i < n * m; ++i) flat[static_cast<std::size_t>(i)] = 0;
                for (i64 i = t * m - 1; i >= 0; --i) {
                    if (++flat[static_cast<std::size_t>(i)] < p) { more = true; break; }
                    flat[static_cast<std::size_t>(i)] = 0;
                }
                continue; // at_block_start stays true
            }
        }
        if ((t == 0 || block >= 0) && agree_up_to(full)) {
            if (t == 0) block = block < 0 ? 1 : block + 1;
            else ++block;
        }
        more = false;
        i64 carried_to = n * m;
        for (i64 i = n * m - 1; i >= 0; --i) {
            if (++flat[static_cast<std::size_t>(i)] < p) { more = true; carried_to = i; break; }
            flat[static_cast<std::size_t>(i)] = 0;
        }
        at_block_start = !more || carried_to < t * m;
        if (t > 0 && at_block_start && block >= 0) {
            if (agreed >= 0 && block != agreed)
                throw InternalInconsistency("point count depends on the pinned tuple");
            agreed = block;
            block = -1;
        }
    }
    if (t == 0) return block < 0 ? 0 : block;
    return any_block ? agreed : 0;
}

/// Order of the group of invertible n x n matrices over F_p.
inline mpz_class gl_count(i64 n, i64 p) {
    if (n < 0 || p < 2) throw TooLarge("gl_count needs n >= 0 and p >= 2");
    mpz_class base = static_cast<long>(p), pn, pi = 1, res = 1;
    mpz_pow_ui(pn.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n));
    for (i64 i = 0; i < n; ++i) {
        res *= pn - pi;
        pi *= base;
    }
    return res;
}

/**
 * Census of realizable rank data: buckets every n x m matrix over F_p by its
 * vector of subset ranks (indexed by mask 1..2^n-1) and returns bucket
 * sizes. Every key, read as a t = 0 profile, has point_count equal to the
 * bucket size; keys absent from the census are exactly the unrealizable
 * rank vectors.
 */
inline std::map<std::vector<i64>, i64> rank_vector_census(i64 n, i64 m, i64 p) {
    detail::check_count_bounds(RankProfile::full_rank(n, m), p);
    const unsigned full = (1u << n) - 1u;
    detail::SubsetRanks ranks(n, p);
    std::vector<std::vector<i64>> rows(static_cast<std::size_t>(n),
                                       std::vector<i64>(static_cast<std::size_t>(m), 0));
    std::map<std::vector<i64>, i64> buckets;
    std::vector<i64> flat(static_cast<std::size_t>(n * m), 0);
    do {
        for (i64 i = 0; i < n * m; ++i)
            rows[static_cast<std::size_t>(i / m)][static_cast<std::size_t>(i % m)] =
                flat[static_cast<std::size_t>(i)];
        ranks.load(rows);
        std::vector<i64> key(full);
        for (unsigned mask = 1; mask <= full; ++mask) key[mask - 1] = ranks.rank(mask);
        ++buckets[key];
    } while (detail::next_tuple(flat, p));
    return buckets;
}

/// Rebuilds a profile from a census key, with the first t rows pinned.
inline RankProfile profile_from_rank_vector(i64 n, i64 m, i64 t, const std::vector<i64>& key) {
    RankProfile p;
    p.n = n;
    p.m = m;
    p.t = t;
    for (unsigned mask = 1; mask < (1u << n); ++mask)
        p.rank[mask] = key[static_cast<std::size_t>(mask - 1)];
    p.validate();
    return p;
}

} // namespace motiveq

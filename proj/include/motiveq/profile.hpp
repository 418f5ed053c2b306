// SPDX-License-Identifier: MIT
/**
 * @file profile.hpp
 * @brief Rank profiles: the combinatorial datum behind a rank-constrained
 *        variety of row tuples. Shared by the symbolic class formula and
 *        the finite-field counting oracle.
 *
 * A profile prescribes, for every nonempty subset S of the n rows, the rank
 * r(S) of the span of the rows in S. The first t rows are regarded as pinned
 * to some fixed tuple realizing the restricted data; both the class and the
 * point counts depend on that tuple only through r.
 */
#pragma once

#include <map>

#include "arith.hpp"

namespace motiveq {

/// Row subsets are bitmasks over {1..n}: bit j-1 set means row j is in S.
struct RankProfile {
    i64 n = 1;                    // rows
    i64 m = 1;                    // ambient dimension (columns)
    i64 t = 0;                    // number of pinned leading rows, 0 <= t <= n
    std::map<unsigned, i64> rank; // nonempty subset -> rank of its span

    /// r extended by r(empty) = 0.
    i64 r(unsigned mask) const {
        if (mask == 0) return 0;
        auto it = rank.find(mask);
        if (it == rank.end())
            throw InvalidProfile("rank value missing for subset mask " + std::to_string(mask));
        return it->second;
    }

    /**
     * Enforces the axioms of a rank function: defined on exactly the
     * nonempty subsets of {1..n}, bounded by min(|S|, m), monotone under
     * inclusion, and growing by at most one per added row.
     */
    void validate() const {
        if (n < 1) throw InvalidProfile("profile needs at least one row");
        if (m < 0) throw InvalidProfile("negative ambient dimension");
        if (t < 0 || t > n) throw InvalidProfile("pinned row count t must satisfy 0 <= t <= n");
        if (n > 20) throw ProfileTooLarge("explicit rank map would exceed 2^20 subsets");
        const unsigned full = (1u << n) - 1u;
        for (const auto& [mask, v] : rank) {
            (void)v;
            if (mask == 0 || mask > full)
                throw InvalidProfile("rank map key is not a nonempty subset of the rows");
        }
        if (rank.size() != full)
            throw InvalidProfile("rank map must cover every nonempty subset of the rows");
        for (unsigned mask = 1; mask <= full; ++mask) {
            i64 rs = r(mask);
            i64 size = __builtin_popcount(mask);
            if (rs < 0 || rs > std::min<i64>(size, m))
                throw InvalidProfile("rank exceeds min(|S|, m) on subset mask " +
                                     std::to_string(mask));
        }
        for (unsigned mask = 0; mask <= full; ++mask)
            for (i64 j = 0; j < n; ++j) {
                if (mask & (1u << j)) continue;
                i64 lo = r(mask), hi = r(mask | (1u << j));
                if (hi < lo || hi > lo + 1)
                    throw InvalidProfile("rank must be monotone and grow by at most one per row");
            }
    }

    /// Generic profile: r(S) = min(|S|, m), nothing pinned.
    static RankProfile full_rank(i64 n, i64 m) {
        RankProfile p;
        p.n = n;
        p.m = m;
        p.t = 0;
        for (unsigned mask = 1; mask < (1u << n); ++mask)
            p.rank[mask] = std::min<i64>(__builtin_popcount(mask), m);
        p.validate();
        return p;
    }

    /// Square full-rank profile: tuples forming a basis, i.e. the general
    /// linear group as a matrix variety.
    static RankProfile gl(i64 n) { return full_rank(n, n); }

    friend bool operator==(const RankProfile&, const RankProfile&) = default;
};

} // namespace motiveq

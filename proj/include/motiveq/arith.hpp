// SPDX-License-Identifier: MIT
/**
 * @file arith.hpp
 * @brief Divisor lattices, the Moebius function and small number-theoretic
 *        helpers on machine integers.
 *
 * Group orders and divisor indices stay far below 2^32 in this library, so
 * plain int64 arithmetic is exact here; all polynomial coefficients elsewhere
 * are arbitrary precision.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace motiveq {

using i64 = std::int64_t;

inline i64 gcd_i(i64 a, i64 b) { return std::gcd(a, b); }
inline i64 lcm_i(i64 a, i64 b) { return std::lcm(a, b); }

/// All divisors of n in increasing order. Requires n >= 1.
inline std::vector<i64> divisors(i64 n) {
    if (n < 1) throw ParseError("divisors: argument must be >= 1");
    std::vector<i64> small, large;
    for (i64 d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Prime factorization as (prime, exponent) pairs, primes increasing.
inline std::vector<std::pair<i64, int>> factorize(i64 n) {
    std::vector<std::pair<i64, int>> out;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

/// Moebius function: (-1)^k on squarefree numbers with k prime divisors, else 0.
inline int mobius(i64 n) {
    if (n < 1) throw ParseError("mobius: argument must be >= 1");
    int sign = 1;
    for (auto [p, e] : factorize(n)) {
        (void)p;
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

/// p-adic valuation v_p(n).
inline int valuation(i64 n, i64 p) {
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

} // namespace motiveq

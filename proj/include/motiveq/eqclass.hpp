// SPDX-License-Identifier: MIT
/**
 * @file eqclass.hpp
 * @brief Classes with a cyclic group action: elements of Q(q) tensor R_Q(G)
 *        for a cyclic group G, in the basis {Q^d : d divides |G|}.
 *
 * Q^d is the permutation representation on the size-d quotient of G; Q^1 is
 * the trivial representation and the multiplicative identity. The stored map
 * never holds zero coefficients, so structural equality is canonical.
 */
#pragma once

#include <map>
#include <string>
#include <vector>

#include "arith.hpp"
#include "ratfunc.hpp"

namespace motiveq {

/// Cyclic group of a given order; subgroups are identified with divisors.
struct CyclicGroup {
    i64 order = 1;
    friend bool operator==(const CyclicGroup&, const CyclicGroup&) = default;
};

class EqClass {
public:
    explicit EqClass(i64 order = 1) : order_(order) {
        if (order < 1) throw GroupMismatch("group order must be positive");
    }

    /// coeff * Q^d over the order-`order` group.
    static EqClass term(i64 order, i64 d, RatFunc coeff) {
        EqClass x(order);
        x.set(d, std::move(coeff));
        return x;
    }

    /// The multiplicative identity 1 tensor Q^1.
    static EqClass one(i64 order) { return term(order, 1, RatFunc(1)); }

    i64 order() const { return order_; }

    bool is_zero() const { return c_.empty(); }

    RatFunc coeff(i64 d) const {
        auto it = c_.find(d);
        return it == c_.end() ? RatFunc() : it->second;
    }

    const std::map<i64, RatFunc>& terms() const { return c_; }

    void set(i64 d, RatFunc v) {
        if (order_ % d != 0)
            throw GroupMismatch("Q^" + std::to_string(d) + " does not exist over the order-" +
                                std::to_string(order_) + " group");
        if (v.is_zero()) c_.erase(d);
        else c_[d] = std::move(v);
    }

    void add_to(i64 d, const RatFunc& v) { set(d, coeff(d) + v); }

    friend bool operator==(const EqClass& a, const EqClass& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const EqClass& a, const EqClass& b) { return !(a == b); }

    friend EqClass operator+(const EqClass& a, const EqClass& b) {
        require_same_group(a, b, "add");
        EqClass r = a;
        for (const auto& [d, v] : b.c_) r.add_to(d, v);
        return r;
    }

    friend EqClass operator-(const EqClass& a, const EqClass& b) {
        require_same_group(a, b, "subtract");
        EqClass r = a;
        for (const auto& [d, v] : b.c_) r.add_to(d, -v);
        return r;
    }

    EqClass operator-() const {
        EqClass r(order_);
        for (const auto& [d, v] : c_) r.set(d, -v);
        return r;
    }

    /// Bilinear extension of Q^d * Q^e = gcd(d,e) Q^{lcm(d,e)}.
    friend EqClass operator*(const EqClass& a, const EqClass& b) {
        require_same_group(a, b, "multiply");
        EqClass r(a.order_);
        for (const auto& [d, v] : a.c_)
            for (const auto& [e, w] : b.c_)
                r.add_to(lcm_i(d, e), mpq_class(gcd_i(d, e)) * (v * w));
        return r;
    }

    friend EqClass operator*(const RatFunc& s, const EqClass& a) {
        EqClass r(a.order_);
        for (const auto& [d, v] : a.c_) r.set(d, s * v);
        return r;
    }

    EqClass& operator+=(const EqClass& o) { return *this = *this + o; }
    EqClass& operator-=(const EqClass& o) { return *this = *this - o; }
    EqClass& operator*=(const EqClass& o) { return *this = *this * o; }

    EqClass pow(unsigned long e) const {
        EqClass result = one(order_), base = *this;
        while (e) {
            if (e & 1) result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    /// True when every coefficient is a polynomial with integer coefficients.
    bool is_integer_polynomial() const {
        for (const auto& [d, v] : c_) {
            (void)d;
            if (!v.is_polynomial() || !v.num().is_integer()) return false;
        }
        return true;
    }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (const auto& [d, v] : c_) {
            if (!out.empty()) out += " + ";
            out += "(" + v.to_string() + ") Q^" + std::to_string(d);
        }
        return out;
    }

private:
    static void require_same_group(const EqClass& a, const EqClass& b, const char* what) {
        if (a.order_ != b.order_)
            throw GroupMismatch(std::string("cannot ") + what + " classes over groups of order " +
                                std::to_string(a.order_) + " and " + std::to_string(b.order_));
    }

    i64 order_;
    std::map<i64, RatFunc> c_;
};

/// Induction along G -> G' with |G| dividing |G'|: Q^d maps to Q^{d N}, N = [G':G].
inline EqClass induce(const EqClass& x, i64 target_order) {
    if (target_order % x.order() != 0)
        throw GroupMismatch("induction target order " + std::to_string(target_order) +
                            " is not a multiple of " + std::to_string(x.order()));
    i64 n = target_order / x.order();
    EqClass r(target_order);
    for (const auto& [d, v] : x.terms()) r.set(d * n, v);
    return r;
}

/// Restriction to the index-k subgroup: Q^d maps to gcd(d,k) Q^{lcm(d,k)/k}.
inline EqClass restrict_to(const EqClass& x, i64 sub_index) {
    if (sub_index < 1 || x.order() % sub_index != 0)
        throw GroupMismatch("restriction index " + std::to_string(sub_index) +
                            " does not divide the group order " + std::to_string(x.order()));
    EqClass r(x.order() / sub_index);
    for (const auto& [d, v] : x.terms())
        r.add_to(lcm_i(d, sub_index) / sub_index, mpq_class(gcd_i(d, sub_index)) * v);
    return r;
}

/// Bilinear extension of <Q^d, Q^e> = gcd(d,e).
inline RatFunc inner(const EqClass& a, const EqClass& b) {
    if (a.order() != b.order())
        throw GroupMismatch("inner product of classes over groups of order " +
                            std::to_string(a.order()) + " and " + std::to_string(b.order()));
    RatFunc s;
    for (const auto& [d, v] : a.terms())
        for (const auto& [e, w] : b.terms())
            s += mpq_class(gcd_i(d, e)) * (v * w);
    return s;
}

/// Class of the quotient by the index-k subgroup: sum of c_d * gcd(d,k).
/// k = 1 gives the full quotient, k = |G| the plain (forgetful) class.
inline RatFunc quotient_class(const EqClass& x, i64 sub_index) {
    if (sub_index < 1 || x.order() % sub_index != 0)
        throw GroupMismatch("quotient subgroup index must divide the group order");
    RatFunc s;
    for (const auto& [d, v] : x.terms()) s += mpq_class(gcd_i(d, sub_index)) * v;
    return s;
}

/// Forgetful class: sum of d * c_d.
inline RatFunc plain_class(const EqClass& x) { return quotient_class(x, x.order()); }

/**
 * Division algorithm: returns h with g*h = f, walking divisors of the group
 * order along the supplied linear extension of the divisibility order. At
 * each divisor d the pivot is sum over d1|d of d1*g_{d1}; a vanishing pivot
 * raises ZeroPivot. The result is verified by re-multiplication.
 */
inline EqClass divide(const EqClass& f, const EqClass& g, const std::vector<i64>& div_order) {
    if (f.order() != g.order())
        throw GroupMismatch("division of classes over groups of order " +
                            std::to_string(f.order()) + " and " + std::to_string(g.order()));
    const i64 order = f.order();
    {
        std::vector<i64> sorted = div_order, all = divisors(order);
        std::sort(sorted.begin(), sorted.end());
        if (sorted != all)
            throw InternalInconsistency("divisor sequence is not a permutation of the divisors");
        std::map<i64, std::size_t> position;
        for (std::size_t i = 0; i < div_order.size(); ++i) position[div_order[i]] = i;
        for (i64 d : all)
            for (i64 d2 : divisors(d))
                if (position[d2] > position[d])
                    throw InternalInconsistency("divisor sequence is not a linear extension");
    }

    for (i64 d : div_order) {
        RatFunc pivot;
        for (i64 d1 : divisors(d)) pivot += mpq_class(d1) * g.coeff(d1);
        if (pivot.is_zero())
            throw ZeroPivot("vanishing pivot at divisor " + std::to_string(d));
    }

    EqClass h(order);
    for (i64 d : div_order) {
        RatFunc pivot;
        for (i64 d1 : divisors(d)) pivot += mpq_class(d1) * g.coeff(d1);
        RatFunc rhs = f.coeff(d);
        for (i64 d2 : divisors(d)) {
            if (d2 == d) continue;
            for (i64 d1 : divisors(d)) {
                if (lcm_i(d1, d2) != d) continue;
                rhs -= mpq_class(gcd_i(d1, d2)) * g.coeff(d1) * h.coeff(d2);
            }
        }
        h.set(d, rhs / pivot);
    }

    if (g * h != f) throw InternalInconsistency("division re-multiplication mismatch");
    return h;
}

inline EqClass divide(const EqClass& f, const EqClass& g) {
    return divide(f, g, divisors(f.order())); // increasing order is divisibility-compatible
}

} // namespace motiveq

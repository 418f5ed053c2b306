// SPDX-License-Identifier: MIT
/**
 * @file ratfunc.hpp
 * @brief Reduced rational functions in q: the coefficient field for all
 *        equivariant classes.
 *
 * Canonical form: gcd(num, den) = 1 and den is monic. Two rational functions
 * are equal exactly when their canonical components are equal, which makes
 * structural golden-value comparison sound.
 */
#pragma once

#include <string>
#include <utility>

#include "poly.hpp"

namespace motiveq {

class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    /*implicit*/ RatFunc(Poly p) : num_(std::move(p)), den_(1) {}
    /*implicit*/ RatFunc(const mpq_class& c) : num_(c), den_(1) {}
    /*implicit*/ RatFunc(long c) : num_(c), den_(1) {}
    /*implicit*/ RatFunc(int c) : num_(c), den_(1) {}

    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        canonicalize();
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == Poly(1); }

    /// The underlying polynomial; throws unless den = 1.
    const Poly& as_poly() const {
        if (!is_polynomial())
            throw InternalInconsistency("expected a polynomial, got denominator " + den_.to_string());
        return num_;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivisionByZero("rational function division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const {
        RatFunc r(*this);
        r.num_ = -r.num_;
        return r;
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc pow(unsigned long e) const {
        return RatFunc(num_.pow(e), den_.pow(e));
    }

    /// Exact evaluation; throws DivisionByZero on a denominator root.
    mpq_class eval(const mpq_class& x) const {
        mpq_class d = den_.eval(x);
        if (d == 0) throw DivisionByZero("evaluation at a pole");
        return num_.eval(x) / d;
    }

    std::string to_string() const {
        if (is_polynomial()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = div_exact(num_, g);
            den_ = div_exact(den_, g);
        }
        mpq_class l = den_.lc(); // make the denominator monic
        if (l != 1) {
            mpq_class inv = mpq_class(1) / l;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    Poly num_;
    Poly den_;
};

} // namespace motiveq

// SPDX-License-Identifier: MIT
/**
 * @file poly.hpp
 * @brief Dense univariate polynomials in the formal variable q with exact
 *        rational coefficients (GMP mpq).
 *
 * Canonical form: the coefficient vector carries no trailing zeros, so the
 * zero polynomial is the empty vector and degree() of zero is -1. All
 * arithmetic is exact; nothing in this library ever touches floating point.
 */
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"

namespace motiveq {

class Poly {
public:
    Poly() = default;

    /*implicit*/ Poly(const mpq_class& constant) {
        if (constant != 0) c_.push_back(constant);
    }
    /*implicit*/ Poly(long constant) : Poly(mpq_class(constant)) {}
    /*implicit*/ Poly(int constant) : Poly(mpq_class(constant)) {}

    /// Little-endian coefficients; trailing zeros are stripped.
    explicit Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    /// c * q^e
    static Poly monomial(const mpq_class& c, std::size_t e) {
        if (c == 0) return {};
        std::vector<mpq_class> v(e + 1, mpq_class(0));
        v[e] = c;
        return Poly(std::move(v));
    }

    /// The variable q itself.
    static Poly q() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }

    /// Degree, with degree(0) = -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of q^i (zero beyond the stored range).
    mpq_class coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : mpq_class(0);
    }

    const std::vector<mpq_class>& coeffs() const { return c_; }

    /// Leading coefficient; zero polynomial has leading coefficient 0.
    mpq_class lc() const { return c_.empty() ? mpq_class(0) : c_.back(); }

    bool is_constant() const { return c_.size() <= 1; }

    /// True when every coefficient is an integer.
    bool is_integer() const {
        return std::all_of(c_.begin(), c_.end(), [](const mpq_class& x) {
            return x.get_den() == 1;
        });
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<mpq_class> v(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
        return Poly(std::move(v));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<mpq_class> v(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
        return Poly(std::move(v));
    }

    Poly operator-() const {
        std::vector<mpq_class> v(c_);
        for (auto& x : v) x = -x;
        return Poly(std::move(v));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<mpq_class> v(a.c_.size() + b.c_.size() - 1, mpq_class(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                v[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(v));
    }

    friend Poly operator*(const mpq_class& s, const Poly& p) {
        if (s == 0) return {};
        std::vector<mpq_class> v(p.c_);
        for (auto& x : v) x *= s;
        return Poly(std::move(v));
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned long e) const {
        Poly result(1), base(*this);
        while (e) {
            if (e & 1) result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    /// Substitution q -> q^k, i.e. p(q^k).
    Poly compose_qpow(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<mpq_class> v(k * (c_.size() - 1) + 1, mpq_class(0));
        for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
        return Poly(std::move(v));
    }

    mpq_class eval(const mpq_class& x) const {
        mpq_class acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Quotient and remainder with deg(rem) < deg(d). Requires d != 0.
    friend std::pair<Poly, Poly> divmod(const Poly& n, const Poly& d) {
        if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
        Poly rem = n, quot;
        std::vector<mpq_class> qc;
        if (rem.degree() >= d.degree())
            qc.assign(rem.degree() - d.degree() + 1, mpq_class(0));
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            std::size_t shift = rem.degree() - d.degree();
            mpq_class f = rem.lc() / d.lc();
            qc[shift] = f;
            rem -= monomial(f, shift) * d;
        }
        return {Poly(std::move(qc)), rem};
    }

    /// Exact division; throws InternalInconsistency on a nonzero remainder.
    friend Poly div_exact(const Poly& n, const Poly& d) {
        auto [quot, rem] = divmod(n, d);
        if (!rem.is_zero())
            throw InternalInconsistency("div_exact: nonzero remainder");
        return quot;
    }

    /// Monic gcd (gcd(0,0) = 0).
    friend Poly poly_gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            auto [quot, rem] = divmod(a, b);
            (void)quot;
            a = std::move(b);
            b = std::move(rem);
            if (!b.is_zero()) b = (mpq_class(1) / b.lc()) * b; // keep sizes tame
        }
        if (!a.is_zero()) a = (mpq_class(1) / a.lc()) * a;
        return a;
    }

    /// Rendering like "q^4 - 2*q^3 + 1", highest degree first.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const mpq_class& c = c_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            mpq_class a = abs(c);
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            bool unit = (a == 1) && i > 0;
            if (!unit) out += a.get_str();
            if (i > 0) {
                if (!unit) out += "*";
                out += "q";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<mpq_class> c_;
};

} // namespace motiveq

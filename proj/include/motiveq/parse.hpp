// SPDX-License-Identifier: MIT
/**
 * @file parse.hpp
 * @brief Recursive-descent parser for polynomial and scalar expressions.
 *
 * One grammar serves two callers: catalog recipes written as readable
 * factored polynomials like "(q-1)^2*(q+1)*q^8", and counting formulas in
 * the knot parameters like "(n/4)*binom(m,4)*delta(n,4)". Implicit
 * multiplication ("3(q-1)", "q^8(q^2+1)") is allowed, matching how the
 * catalog data is written.
 *
 *   expr   := term (('+'|'-') term)*
 *   term   := unary (('*'|'/')? unary)*          // optional '*' between factors
 *   unary  := '-' unary | power
 *   power  := atom ('^' nonneg-integer)?
 *   atom   := integer | 'q' | variable | func '(' expr (',' expr)* ')' | '(' expr ')'
 *
 * Functions: binom(x, k) with integer k >= 0, and delta(a, b) = 1 if b
 * divides a else 0 (both arguments integers).
 */
#pragma once

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "ratfunc.hpp"

namespace motiveq {

namespace detail {

class ExprParser {
public:
    ExprParser(const std::string& src, bool allow_q, const std::map<std::string, mpq_class>& vars)
        : src_(src), allow_q_(allow_q), vars_(vars) {}

    RatFunc parse() {
        RatFunc v = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("trailing input");
        return v;
    }

private:
    RatFunc expr() {
        RatFunc v = term();
        for (;;) {
            skip_ws();
            if (peek() == '+') { ++pos_; v += term(); }
            else if (peek() == '-') { ++pos_; v -= term(); }
            else return v;
        }
    }

    RatFunc term() {
        RatFunc v = unary();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*') { ++pos_; v *= unary(); }
            else if (c == '/') { ++pos_; v /= unary(); }
            else if (c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
                     std::isalpha(static_cast<unsigned char>(c))) {
                v *= unary(); // implicit multiplication
            } else {
                return v;
            }
        }
    }

    RatFunc unary() {
        skip_ws();
        if (peek() == '-') { ++pos_; return -unary(); }
        return power();
    }

    RatFunc power() {
        RatFunc base = atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be a nonnegative integer");
            unsigned long e = integer().get_ui();
            return base.pow(e);
        }
        return base;
    }

    RatFunc atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            RatFunc v = expr();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return RatFunc(mpq_class(integer()));
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name = ident();
            skip_ws();
            if (peek() == '(') return call(name);
            if (name == "q") {
                if (!allow_q_) fail("the variable q is not allowed here");
                return RatFunc(Poly::q());
            }
            auto it = vars_.find(name);
            if (it == vars_.end()) fail("unknown variable '" + name + "'");
            return RatFunc(it->second);
        }
        fail("expected a value");
    }

    RatFunc call(const std::string& name) {
        expect('(');
        std::vector<RatFunc> args;
        args.push_back(expr());
        skip_ws();
        while (peek() == ',') {
            ++pos_;
            args.push_back(expr());
            skip_ws();
        }
        expect(')');
        if (name == "binom") {
            if (args.size() != 2) fail("binom takes two arguments");
            mpq_class x = constant(args[0]);
            mpq_class kq = constant(args[1]);
            if (kq.get_den() != 1 || kq < 0) fail("binom: second argument must be a nonnegative integer");
            unsigned long k = mpz_class(kq.get_num()).get_ui();
            mpq_class acc(1);
            for (unsigned long i = 0; i < k; ++i)
                acc *= (x - static_cast<long>(i)) / mpq_class(static_cast<long>(i) + 1);
            return RatFunc(acc);
        }
        if (name == "delta") {
            if (args.size() != 2) fail("delta takes two arguments");
            mpq_class a = constant(args[0]), b = constant(args[1]);
            if (a.get_den() != 1 || b.get_den() != 1 || b == 0) fail("delta: arguments must be integers, divisor nonzero");
            mpz_class r = mpz_class(a.get_num()) % mpz_class(b.get_num());
            return RatFunc(mpq_class(r == 0 ? 1 : 0));
        }
        fail("unknown function '" + name + "'");
    }

    mpq_class constant(const RatFunc& v) {
        if (!v.is_polynomial() || !v.num().is_constant()) fail("expected a constant argument");
        return v.num().coeff(0);
    }

    mpz_class integer() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return mpz_class(src_.substr(start, pos_ - start));
    }

    std::string ident() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return src_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at offset " + std::to_string(pos_) + " in \"" + src_ + "\"");
    }

    const std::string& src_;
    bool allow_q_;
    std::map<std::string, mpq_class> vars_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parse a rational-function expression in q.
inline RatFunc parse_ratfunc(const std::string& s) {
    return detail::ExprParser(s, /*allow_q=*/true, {}).parse();
}

/// Parse a polynomial in q; rational scalar coefficients are fine.
inline Poly parse_poly(const std::string& s) {
    return parse_ratfunc(s).as_poly();
}

/// Evaluate a counting formula over the given integer variables.
inline mpq_class parse_count(const std::string& s, const std::map<std::string, mpq_class>& vars) {
    RatFunc v = detail::ExprParser(s, /*allow_q=*/false, vars).parse();
    if (!v.is_polynomial() || !v.num().is_constant())
        throw ParseError("counting formula did not evaluate to a constant: " + s);
    return v.num().coeff(0);
}

} // namespace motiveq

// SPDX-License-Identifier: MIT
/**
 * @file jsonio.hpp
 * @brief JSON round-tripping for the shared value types. One canonical
 *        format serves the CLI, the catalog file, and the golden tests:
 *
 *   class     {"order": 4, "terms": [{"d": 1, "num": [-1, 1], "den": [1]}]}
 *   profile   {"n": 2, "m": 2, "t": 0, "ranks": [{"subset": [1], "rank": 1}, ...]}
 *   blocks    {"order": 2, "blocks": [{"lambda": 1, "ell": 2}, ...]}
 *
 * Coefficient arrays are ascending in the exponent. Coefficients are JSON
 * integers when they fit, decimal strings (with optional "/den") otherwise,
 * so nothing is ever rounded.
 */
#pragma once

#include <string>

#include <json.hpp>

#include "eqclass.hpp"
#include "profile.hpp"
#include "varieties.hpp"

namespace motiveq {

using nlohmann::json;

inline i64 int_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
        throw ParseError(std::string("expected an integer field \"") + key + "\"");
    return j.at(key).get<i64>();
}

inline json coeff_to_json(const mpq_class& c) {
    if (c.get_den() == 1 && c.get_num().fits_slong_p())
        return static_cast<std::int64_t>(c.get_num().get_si());
    return c.get_str();
}

inline mpq_class coeff_from_json(const json& j) {
    if (j.is_number_integer()) {
        mpq_class v;
        v = static_cast<long>(j.get<std::int64_t>());
        return v;
    }
    if (j.is_string()) {
        try {
            mpq_class v(j.get<std::string>());
            if (v.get_den() == 0) throw ParseError("zero denominator in coefficient");
            v.canonicalize();
            return v;
        } catch (const std::invalid_argument&) {
            throw ParseError("unreadable coefficient \"" + j.get<std::string>() + "\"");
        }
    }
    throw ParseError("coefficients must be integers or rational strings");
}

inline json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (int i = 0; i <= p.degree(); ++i)
        arr.push_back(coeff_to_json(p.coeff(static_cast<std::size_t>(i))));
    return arr;
}

inline Poly poly_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be an array of coefficients");
    std::vector<mpq_class> c;
    for (const auto& e : j) c.push_back(coeff_from_json(e));
    return Poly(std::move(c));
}

inline json ratfunc_to_json(const RatFunc& v) {
    return json{{"num", poly_to_json(v.num())}, {"den", poly_to_json(v.den())}};
}

inline RatFunc ratfunc_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num"))
        throw ParseError("rational function needs a \"num\" array");
    Poly num = poly_from_json(j.at("num"));
    Poly den = j.contains("den") ? poly_from_json(j.at("den")) : Poly(1);
    if (den.is_zero()) throw ParseError("zero denominator polynomial");
    return RatFunc(std::move(num), std::move(den));
}

inline json eqclass_to_json(const EqClass& x) {
    json terms = json::array();
    for (const auto& [d, v] : x.terms()) { // std::map iterates d ascending
        json t = ratfunc_to_json(v);
        t["d"] = d;
        terms.push_back(std::move(t));
    }
    return json{{"order", x.order()}, {"terms", std::move(terms)}};
}

inline EqClass eqclass_from_json(const json& j) {
    EqClass x(int_field(j, "order"));
    if (!j.contains("terms") || !j.at("terms").is_array())
        throw ParseError("class needs a \"terms\" array");
    for (const auto& t : j.at("terms"))
        x.add_to(int_field(t, "d"), ratfunc_from_json(t));
    return x;
}

inline json profile_to_json(const RankProfile& p) {
    json ranks = json::array();
    for (const auto& [mask, r] : p.rank) {
        json subset = json::array();
        for (i64 j = 0; j < p.n; ++j)
            if (mask & (1u << j)) subset.push_back(j + 1);
        ranks.push_back(json{{"subset", std::move(subset)}, {"rank", r}});
    }
    return json{{"n", p.n}, {"m", p.m}, {"t", p.t}, {"ranks", std::move(ranks)}};
}

inline RankProfile profile_from_json(const json& j) {
    RankProfile p;
    p.n = int_field(j, "n");
    p.m = int_field(j, "m");
    p.t = j.is_object() && j.contains("t") ? int_field(j, "t") : 0;
    if (!j.contains("ranks") || !j.at("ranks").is_array())
        throw ParseError("profile needs a \"ranks\" array");
    for (const auto& e : j.at("ranks")) {
        if (!e.is_object() || !e.contains("subset") || !e.at("subset").is_array())
            throw ParseError("profile rank entry needs a \"subset\" array");
        unsigned mask = 0;
        for (const auto& row : e.at("subset")) {
            if (!row.is_number_integer()) throw ParseError("row indices must be integers");
            i64 idx = row.get<i64>();
            if (idx < 1 || idx > 20) throw ParseError("row indices must lie in 1..20");
            mask |= 1u << (idx - 1);
        }
        p.rank[mask] = int_field(e, "rank");
    }
    p.validate();
    return p;
}

inline json blocks_to_json(const OrbitBlocks& b) {
    json blocks = json::array();
    for (auto [lambda, ell] : b.blocks)
        blocks.push_back(json{{"lambda", lambda}, {"ell", ell}});
    return json{{"order", b.group_order}, {"blocks", std::move(blocks)}};
}

inline OrbitBlocks blocks_from_json(const json& j) {
    OrbitBlocks b;
    b.group_order = int_field(j, "order");
    if (!j.contains("blocks") || !j.at("blocks").is_array())
        throw ParseError("blocks need a \"blocks\" array");
    for (const auto& e : j.at("blocks"))
        b.blocks.emplace_back(int_field(e, "lambda"), int_field(e, "ell"));
    b.validate();
    return b;
}

} // namespace motiveq

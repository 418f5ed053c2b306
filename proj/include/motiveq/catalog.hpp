// SPDX-License-Identifier: MIT
/**
 * @file catalog.hpp
 * @brief The declarative data layer of the pipeline: eigenvalue-pattern
 *        records with their reducible-type recipes, reusable class
 *        expressions, and the documented-deviation registry, all loaded
 *        from a versioned JSON file.
 *
 * Class expressions are small trees of ops:
 *
 *   {"op":"class","order":N,"terms":[{"d":1,"expr":"(q-1)^2*q"}]}
 *   {"op":"gl","n":2,"order":1}            plain GL_n class tensor Q^1
 *   {"op":"conj","order":2,"blocks":[...]} conjugacy-type quotient
 *   {"op":"ref","id":"shared-entry"}       reuse a shared expression
 *   {"op":"per","extension":2,"arg":e}     permutation-of-factors transport
 *   {"op":"ind","extension":2,"arg":e}     induction along an extension
 *   {"op":"mul"|"add","args":[...]}        products and sums
 *   {"op":"pow","exp":2,"arg":e}           powers
 *   {"op":"neg","arg":e}  {"op":"scale","by":"1/2","arg":e}
 *
 * Evaluation is deterministic and shared entries are cached per catalog.
 */
#pragma once

#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "jsonio.hpp"
#include "tower.hpp"
#include "parse.hpp"

namespace motiveq {

/// One reducible-type recipe: the constituents of the fibration identity
/// R * F0' * q^D = M * GL_r * I, solved for R by equivariant division.
struct TauRecipe {
    std::string name;
    i64 count = 1;            // how many types of this shape each pattern instance has
    i64 stabilizer_order = 1;
    i64 d_exponent = 0;       // the q-power D on the left side
    json m_tau;               // optional; empty means the unit class
    json f0_prime;
    json i_tau;
};

/// One eigenvalue-pattern record: base class, stabilizer, counting formula
/// in (n, m), and the reducible types to subtract.
struct KappaPattern {
    std::string name;
    std::string anchor;       // stable id of the source table row
    i64 rank = 1;
    i64 stabilizer_order = 1;
    std::string count;        // expression in n, m with divisibility guards
    json base_class;
    std::vector<TauRecipe> taus;
};

/// A spot where the source's displayed simplification disagrees with its own
/// underlying data; the computation uses `used`, the registry keeps both.
struct Deviation {
    std::string id;
    std::string location;
    std::string printed;
    std::string used;
    std::string note;
    std::vector<i64> ranks;   // pipeline ranks whose reports should mention it
};

class Catalog {
public:
    static Catalog from_json(const json& j) {
        Catalog c;
        if (!j.is_object() || int_field(j, "version") != 1)
            throw ParseError("catalog: unsupported version");
        if (j.contains("shared")) {
            if (!j.at("shared").is_object()) throw ParseError("catalog: \"shared\" must be an object");
            for (const auto& [id, expr] : j.at("shared").items()) c.shared_[id] = expr;
        }
        if (!j.contains("ranks") || !j.at("ranks").is_array())
            throw ParseError("catalog: missing \"ranks\" array");
        for (const auto& r : j.at("ranks")) {
            i64 rank = int_field(r, "rank");
            if (!r.contains("patterns") || !r.at("patterns").is_array())
                throw ParseError("catalog: rank entry without \"patterns\"");
            for (const auto& p : r.at("patterns")) c.patterns_[rank].push_back(parse_pattern(p, rank));
        }
        for (const auto& d : j.value("deviations", json::array())) {
            Deviation dev;
            dev.id = d.value("id", "");
            dev.location = d.value("location", "");
            dev.printed = d.value("printed", "");
            dev.used = d.value("used", "");
            dev.note = d.value("note", "");
            for (const auto& rk : d.value("ranks", json::array())) dev.ranks.push_back(rk.get<i64>());
            c.deviations_.push_back(std::move(dev));
        }
        return c;
    }

    static Catalog from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ParseError("catalog: cannot open " + path);
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw ParseError("catalog: " + std::string(e.what()));
        }
        return from_json(j);
    }

    /// Resolution order: MOTIVEQ_CATALOG environment variable, then the
    /// compiled-in default path.
    static Catalog load_default() {
        if (const char* env = std::getenv("MOTIVEQ_CATALOG")) return from_file(env);
#ifdef MOTIVEQ_CATALOG_DEFAULT
        return from_file(MOTIVEQ_CATALOG_DEFAULT);
#else
        throw ParseError("catalog: no default path compiled in; set MOTIVEQ_CATALOG");
#endif
    }

    const std::vector<KappaPattern>& patterns(i64 rank) const {
        static const std::vector<KappaPattern> none;
        auto it = patterns_.find(rank);
        return it == patterns_.end() ? none : it->second;
    }

    const std::vector<Deviation>& deviations() const { return deviations_; }

    /// Evaluates an expression tree to a class; refs resolve against the
    /// shared section (cached, cycles rejected).
    EqClass eval(const json& expr) const {
        if (!expr.is_object() || !expr.contains("op") || !expr.at("op").is_string())
            throw ParseError("class expression needs an \"op\" string");
        const std::string op = expr.at("op").get<std::string>();
        if (op == "class") {
            EqClass x(int_field(expr, "order"));
            if (!expr.contains("terms") || !expr.at("terms").is_array())
                throw ParseError("\"class\" op needs a \"terms\" array");
            for (const auto& t : expr.at("terms")) {
                if (!t.contains("expr") || !t.at("expr").is_string())
                    throw ParseError("class term needs an \"expr\" string");
                x.add_to(int_field(t, "d"), parse_ratfunc(t.at("expr").get<std::string>()));
            }
            return x;
        }
        if (op == "gl") {
            i64 order = expr.contains("order") ? int_field(expr, "order") : 1;
            return EqClass::term(order, 1, RatFunc(gl_class(int_field(expr, "n"))));
        }
        if (op == "conj") return conj_quotient(blocks_from_json(expr));
        if (op == "ref") {
            if (!expr.contains("id") || !expr.at("id").is_string())
                throw ParseError("\"ref\" op needs an \"id\" string");
            return resolve(expr.at("id").get<std::string>());
        }
        if (op == "per") return per(eval(arg(expr)), int_field(expr, "extension"));
        if (op == "ind") {
            EqClass x = eval(arg(expr));
            return induce(x, x.order() * int_field(expr, "extension"));
        }
        if (op == "mul" || op == "add") {
            if (!expr.contains("args") || !expr.at("args").is_array() || expr.at("args").empty())
                throw ParseError("\"" + op + "\" op needs a nonempty \"args\" array");
            std::optional<EqClass> acc;
            for (const auto& a : expr.at("args")) {
                EqClass x = eval(a);
                acc = acc ? (op == "mul" ? *acc * x : *acc + x) : x;
            }
            return *acc;
        }
        if (op == "pow") return eval(arg(expr)).pow(static_cast<unsigned long>(int_field(expr, "exp")));
        if (op == "neg") return -eval(arg(expr));
        if (op == "scale") {
            if (!expr.contains("by") || !expr.at("by").is_string())
                throw ParseError("\"scale\" op needs a \"by\" string");
            return parse_ratfunc(expr.at("by").get<std::string>()) * eval(arg(expr));
        }
        throw ParseError("unknown class expression op \"" + op + "\"");
    }

private:
    static const json& arg(const json& expr) {
        if (!expr.contains("arg")) throw ParseError("expression op needs an \"arg\"");
        return expr.at("arg");
    }

    static KappaPattern parse_pattern(const json& p, i64 rank) {
        KappaPattern k;
        k.rank = rank;
        k.name = p.value("name", "");
        k.anchor = p.value("anchor", "");
        k.stabilizer_order = int_field(p, "stabilizerOrder");
        if (!p.contains("count") || !p.at("count").is_string())
            throw ParseError("pattern needs a \"count\" expression string");
        k.count = p.at("count").get<std::string>();
        if (!p.contains("baseClass")) throw ParseError("pattern needs a \"baseClass\"");
        k.base_class = p.at("baseClass");
        for (const auto& t : p.value("taus", json::array())) {
            TauRecipe tau;
            tau.name = t.value("name", "");
            tau.count = int_field(t, "count");
            tau.stabilizer_order = int_field(t, "stabilizerOrder");
            tau.d_exponent = t.contains("D") ? int_field(t, "D") : 0;
            if (t.contains("mTau")) tau.m_tau = t.at("mTau");
            if (!t.contains("f0Prime") || !t.contains("iTau"))
                throw ParseError("type recipe needs \"f0Prime\" and \"iTau\"");
            tau.f0_prime = t.at("f0Prime");
            tau.i_tau = t.at("iTau");
            k.taus.push_back(std::move(tau));
        }
        return k;
    }

    EqClass resolve(const std::string& id) const {
        auto hit = cache_.find(id);
        if (hit != cache_.end()) return hit->second;
        auto it = shared_.find(id);
        if (it == shared_.end()) throw ParseError("unknown shared class \"" + id + "\"");
        if (!resolving_.insert(id).second)
            throw ParseError("shared class \"" + id + "\" refers to itself");
        EqClass x = eval(it->second);
        resolving_.erase(id);
        cache_.emplace(id, x);
        return x;
    }

    std::map<std::string, json> shared_;
    std::map<i64, std::vector<KappaPattern>> patterns_;
    std::vector<Deviation> deviations_;
    mutable std::map<std::string, EqClass> cache_;
    mutable std::set<std::string> resolving_;
};

} // namespace motiveq

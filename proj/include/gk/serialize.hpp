/*
 * serialize.hpp
 * -------------
 * JSON forms.  A polynomial is {"terms": [{"coeff": "<num>/<den>",
 * "exps": {"x1": 1, "b": 2}}, ...]} with terms in the canonical order; a
 * tableau is {"shape": "4,4,2,1/1", "n": 9, "cells": [{"r": 1, "c": 2,
 * "set": [2, 3]}, ...]}.  Parsing inverts printing exactly.
 */
#pragma once

#include "poly.hpp"
#include "tableau.hpp"

#include <json.hpp>

namespace gk {

struct BadSerialization : std::runtime_error {
    explicit BadSerialization(const std::string& what) : std::runtime_error(what) {}
};

inline Rational rational_parse(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw BadSerialization("bad rational: " + s);
    }
}

inline nlohmann::ordered_json poly_to_json(const SparsePoly& p) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (auto& [m, c] : p.terms()) {
        nlohmann::ordered_json exps = nlohmann::ordered_json::object();
        for (auto& [v, e] : m.exps) exps[var_name(v)] = e;
        terms.push_back({{"coeff", rational_str(c)}, {"exps", std::move(exps)}});
    }
    return {{"terms", std::move(terms)}};
}

inline SparsePoly poly_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw BadSerialization("polynomial JSON needs a \"terms\" array");
    SparsePoly p;
    for (auto& t : j["terms"]) {
        if (!t.contains("coeff") || !t.contains("exps"))
            throw BadSerialization("term needs \"coeff\" and \"exps\"");
        Monomial m;
        for (auto& [name, e] : t["exps"].items()) {
            auto v = parse_var(name);
            if (!v) throw BadSerialization("bad variable name: " + name);
            int exp = e.get<int>();
            if (exp <= 0) throw BadSerialization("exponents must be positive");
            m.exps[*v] = exp;
        }
        p.add_term(m, rational_parse(t["coeff"].get<std::string>()));
    }
    return p;
}

inline nlohmann::ordered_json tableau_to_json(const SetValuedTableau& T) {
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (Cell c : T.shape().cells()) {
        if (!T.has_entries(c)) continue;
        cells.push_back({{"r", c.row}, {"c", c.col}, {"set", T.at(c)}});
    }
    return {{"shape", T.shape().str()}, {"n", T.n()}, {"cells", std::move(cells)}};
}

inline SetValuedTableau tableau_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("n") || !j.contains("cells"))
        throw BadSerialization("tableau JSON needs \"shape\", \"n\" and \"cells\"");
    SetValuedTableau T(SkewShape::parse(j["shape"].get<std::string>()), j["n"].get<int>());
    for (auto& cj : j["cells"]) {
        Cell c{cj["r"].get<int>(), cj["c"].get<int>()};
        std::vector<int> vals = cj["set"].get<std::vector<int>>();
        if (vals.empty()) throw BadSerialization("empty entry set");
        T.set(c, std::move(vals));
    }
    return T;
}

}  // namespace gk

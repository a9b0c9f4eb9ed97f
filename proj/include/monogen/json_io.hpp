#pragma once

// JSON (de)serialization.  Multivectors are objects mapping blade keys
// ("" for the scalar blade, "1,2" for e_{12}) to canonical "p/q" strings;
// polynomials are {"m": int, "terms": [{"exp": [...], "coeff": {...}}]}
// with terms in graded lexicographic order.  Round trips are bit-exact.

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "poly.hpp"

namespace monogen {

using json = nlohmann::ordered_json;

inline std::string blade_key(Blade b) {
    std::string key;
    for (int j : blade_indices(b)) {
        if (!key.empty()) key += ',';
        key += std::to_string(j);
    }
    return key;
}

inline Blade blade_from_key(AlgebraDim dim, const std::string& key) {
    std::vector<int> indices;
    std::istringstream in(key);
    std::string part;
    while (std::getline(in, part, ',')) {
        try {
            indices.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed blade key: " + key);
        }
    }
    return blade_from_indices(dim, indices);
}

inline json multivector_to_json(const Multivector& mv) {
    json out = json::object();
    for (const auto& [blade, c] : mv.coeffs()) out[blade_key(blade)] = rational_to_string(c);
    return out;
}

inline Multivector multivector_from_json(AlgebraDim dim, const json& j) {
    if (!j.is_object()) throw std::invalid_argument("multivector JSON must be an object");
    Multivector mv(dim);
    for (const auto& [key, value] : j.items()) {
        if (!value.is_string())
            throw std::invalid_argument("multivector coefficient must be a rational string");
        mv.add(blade_from_key(dim, key), rational_from_string(value.get<std::string>()));
    }
    return mv;
}

inline json polynomial_to_json(const CliffordPolynomial& p) {
    json terms = json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        json term;
        term["exp"] = mono;
        term["coeff"] = multivector_to_json(coeff);
        terms.push_back(std::move(term));
    }
    json out;
    out["m"] = p.dim().m;
    out["terms"] = std::move(terms);
    return out;
}

inline CliffordPolynomial polynomial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("terms"))
        throw std::invalid_argument("polynomial JSON must have \"m\" and \"terms\"");
    if (!j["m"].is_number_integer())
        throw std::invalid_argument("polynomial \"m\" must be an integer");
    const AlgebraDim dim(j["m"].get<int>());
    CliffordPolynomial p(dim);
    if (!j["terms"].is_array())
        throw std::invalid_argument("polynomial \"terms\" must be an array");
    for (const auto& term : j["terms"]) {
        if (!term.contains("exp") || !term.contains("coeff"))
            throw std::invalid_argument("polynomial term must have \"exp\" and \"coeff\"");
        Monomial mono = term["exp"].get<Monomial>();
        p.add_term(mono, multivector_from_json(dim, term["coeff"]));
    }
    return p;
}

/// A term list M_0..M_N as a JSON array of polynomial objects.
inline json sequence_to_json(const std::vector<CliffordPolynomial>& terms) {
    json out = json::array();
    for (const auto& p : terms) out.push_back(polynomial_to_json(p));
    return out;
}

inline std::vector<CliffordPolynomial> sequence_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("sequence JSON must be an array");
    std::vector<CliffordPolynomial> terms;
    for (const auto& item : j) terms.push_back(polynomial_from_json(item));
    return terms;
}

}  // namespace monogen

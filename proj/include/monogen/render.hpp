#pragma once

// One-way rendering to plain text (ascii blade names e1, e12) and LaTeX
// (e_{12}, x_0^{2} ...).  No parsing of either format.

#include <sstream>
#include <string>

#include "poly.hpp"

namespace monogen {

namespace detail {

inline std::string rational_text(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return rational_to_string(r);
}

inline std::string blade_text(Blade b) {
    if (b == 0) return "";
    std::string out = "e";
    for (int j : blade_indices(b)) out += std::to_string(j);
    return out;
}

inline std::string blade_latex(Blade b) {
    if (b == 0) return "";
    std::string out = "e_{";
    for (int j : blade_indices(b)) out += std::to_string(j);
    return out + "}";
}

template <typename BladeFn>
std::string multivector_render(const Multivector& mv, BladeFn&& blade_fn) {
    if (mv.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [blade, c] : mv.coeffs()) {
        if (!first) out << " + ";
        first = false;
        const std::string bl = blade_fn(blade);
        if (bl.empty())
            out << rational_text(c);
        else if (c == 1)
            out << bl;
        else
            out << rational_text(c) << "*" << bl;
    }
    return out.str();
}

template <typename BladeFn>
std::string monomial_render(const Monomial& mono, BladeFn&& var_fn) {
    std::string out;
    for (std::size_t j = 0; j < mono.size(); ++j) {
        if (mono[j] == 0) continue;
        if (!out.empty()) out += " ";
        out += var_fn(static_cast<int>(j), mono[j]);
    }
    return out;
}

}  // namespace detail

inline std::string to_text(const Multivector& mv) {
    return detail::multivector_render(mv, detail::blade_text);
}

inline std::string to_text(const CliffordPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, coeff] : p.terms()) {
        if (!first) out << " + ";
        first = false;
        const std::string vars = detail::monomial_render(mono, [](int j, unsigned e) {
            std::string v = "x" + std::to_string(j);
            return e == 1 ? v : v + "^" + std::to_string(e);
        });
        const bool multi = coeff.coeffs().size() > 1;
        const std::string c = to_text(coeff);
        if (vars.empty())
            out << (multi ? "(" + c + ")" : c);
        else if (c == "1")
            out << vars;
        else
            out << (multi ? "(" + c + ")" : c) << " " << vars;
    }
    return out.str();
}

inline std::string to_latex(const Multivector& mv) {
    if (mv.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [blade, c] : mv.coeffs()) {
        if (!first) out << " + ";
        first = false;
        const std::string bl = detail::blade_latex(blade);
        std::string cs;
        if (denominator(c) == 1)
            cs = numerator(c).str();
        else
            cs = "\\frac{" + numerator(c).str() + "}{" + denominator(c).str() + "}";
        if (bl.empty())
            out << cs;
        else if (c == 1)
            out << bl;
        else
            out << cs << bl;
    }
    return out.str();
}

inline std::string to_latex(const CliffordPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, coeff] : p.terms()) {
        if (!first) out << " + ";
        first = false;
        const std::string vars = detail::monomial_render(mono, [](int j, unsigned e) {
            std::string v = "x_" + std::to_string(j);
            return e == 1 ? v : v + "^{" + std::to_string(e) + "}";
        });
        const bool multi = coeff.coeffs().size() > 1;
        const std::string c = to_latex(coeff);
        if (vars.empty())
            out << (multi ? "\\left(" + c + "\\right)" : c);
        else if (c == "1")
            out << vars;
        else
            out << (multi ? "\\left(" + c + "\\right)" : c) << vars;
    }
    return out.str();
}

}  // namespace monogen

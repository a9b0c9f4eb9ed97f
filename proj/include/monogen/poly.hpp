#pragma once

// Sparse polynomials in the real variables x_0..x_m with Multivector
// coefficients.  Variables commute with everything; coefficient products
// keep factor order, so multiplication is noncommutative.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "clifford.hpp"

namespace monogen {

/// Exponent vector for x_0..x_m; length is always m+1.
using Monomial = std::vector<unsigned>;

inline unsigned total_degree(const Monomial& mono) {
    return std::accumulate(mono.begin(), mono.end(), 0u);
}

/// Graded lexicographic order: total degree first; within a degree,
/// lexicographically with x_0 ranked highest (so x_0 x_1 precedes x_1^2).
/// Fixes the canonical serialization order.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a > b;
    }
};

class CliffordPolynomial {
public:
    using TermMap = std::map<Monomial, Multivector, GrlexLess>;

    explicit CliffordPolynomial(AlgebraDim dim) : dim_(dim) {}

    static CliffordPolynomial zero(AlgebraDim dim) { return CliffordPolynomial(dim); }

    static CliffordPolynomial constant(const Multivector& c) {
        CliffordPolynomial p(c.dim());
        p.add_term(Monomial(c.dim().m + 1, 0), c);
        return p;
    }

    static CliffordPolynomial constant(AlgebraDim dim, const Rational& c) {
        return constant(Multivector::scalar(dim, c));
    }

    /// The monomial x_j (j in 0..m) with scalar coefficient 1.
    static CliffordPolynomial variable(AlgebraDim dim, int j) {
        if (j < 0 || j > dim.m) throw std::out_of_range("variable index out of range");
        CliffordPolynomial p(dim);
        Monomial mono(dim.m + 1, 0);
        mono[j] = 1;
        p.add_term(mono, Multivector::scalar(dim, 1));
        return p;
    }

    AlgebraDim dim() const { return dim_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& mono, const Multivector& coeff) {
        if (mono.size() != static_cast<std::size_t>(dim_.m + 1))
            throw std::invalid_argument("monomial length must be m+1");
        if (!(coeff.dim() == dim_))
            throw std::invalid_argument("coefficient dimension mismatch");
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(mono, coeff);
        if (!inserted) {
            it->second = it->second + coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Multivector coeff(const Monomial& mono) const {
        auto it = terms_.find(mono);
        return it == terms_.end() ? Multivector(dim_) : it->second;
    }

    /// Total degree; empty for the zero polynomial.
    std::optional<unsigned> degree() const {
        if (terms_.empty()) return std::nullopt;
        unsigned d = 0;
        for (const auto& [mono, c] : terms_) d = std::max(d, total_degree(mono));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const unsigned d = total_degree(terms_.begin()->first);
        for (const auto& [mono, c] : terms_)
            if (total_degree(mono) != d) return false;
        return true;
    }

    bool involves_x0() const {
        for (const auto& [mono, c] : terms_)
            if (mono[0] > 0) return true;
        return false;
    }

    friend CliffordPolynomial operator+(const CliffordPolynomial& p, const CliffordPolynomial& q) {
        require_same_dim(p, q);
        CliffordPolynomial out = p;
        for (const auto& [mono, c] : q.terms_) out.add_term(mono, c);
        return out;
    }

    friend CliffordPolynomial operator-(const CliffordPolynomial& p, const CliffordPolynomial& q) {
        require_same_dim(p, q);
        CliffordPolynomial out = p;
        for (const auto& [mono, c] : q.terms_) out.add_term(mono, -c);
        return out;
    }

    friend CliffordPolynomial operator-(const CliffordPolynomial& p) {
        CliffordPolynomial out(p.dim_);
        for (const auto& [mono, c] : p.terms_) out.terms_.emplace(mono, -c);
        return out;
    }

    friend CliffordPolynomial operator*(const Rational& s, const CliffordPolynomial& p) {
        CliffordPolynomial out(p.dim_);
        if (s == 0) return out;
        for (const auto& [mono, c] : p.terms_) out.terms_.emplace(mono, s * c);
        return out;
    }

    friend CliffordPolynomial operator*(const CliffordPolynomial& p, const CliffordPolynomial& q) {
        require_same_dim(p, q);
        CliffordPolynomial out(p.dim_);
        for (const auto& [ma, ca] : p.terms_)
            for (const auto& [mb, cb] : q.terms_) {
                Monomial mono(ma.size());
                for (std::size_t i = 0; i < mono.size(); ++i) mono[i] = ma[i] + mb[i];
                out.add_term(mono, ca * cb);
            }
        return out;
    }

    /// Left multiplication by a Clifford constant (operator actions).
    friend CliffordPolynomial operator*(const Multivector& c, const CliffordPolynomial& p) {
        CliffordPolynomial out(p.dim_);
        for (const auto& [mono, coeff] : p.terms_) out.add_term(mono, c * coeff);
        return out;
    }

    friend bool operator==(const CliffordPolynomial& p, const CliffordPolynomial& q) {
        return p.dim_ == q.dim_ && p.terms_ == q.terms_;
    }

private:
    static void require_same_dim(const CliffordPolynomial& p, const CliffordPolynomial& q) {
        if (!(p.dim_ == q.dim_))
            throw std::invalid_argument("polynomial dimension mismatch");
    }

    AlgebraDim dim_;
    TermMap terms_;
};

/// d/dx_j, termwise power rule.
inline CliffordPolynomial partial_derivative(const CliffordPolynomial& p, int j) {
    if (j < 0 || j > p.dim().m) throw std::out_of_range("derivative index out of range");
    CliffordPolynomial out(p.dim());
    for (const auto& [mono, c] : p.terms()) {
        if (mono[j] == 0) continue;
        Monomial d = mono;
        d[j] -= 1;
        out.add_term(d, Rational(mono[j]) * c);
    }
    return out;
}

/// Substitutes x_0 = 0: keeps only terms with zero x_0-exponent.
inline CliffordPolynomial restrict_x0(const CliffordPolynomial& p) {
    CliffordPolynomial out(p.dim());
    for (const auto& [mono, c] : p.terms())
        if (mono[0] == 0) out.add_term(mono, c);
    return out;
}

/// Partition by total degree, ascending; empty for the zero polynomial.
inline std::vector<std::pair<unsigned, CliffordPolynomial>>
homogeneous_components(const CliffordPolynomial& p) {
    std::map<unsigned, CliffordPolynomial> parts;
    for (const auto& [mono, c] : p.terms()) {
        const unsigned d = total_degree(mono);
        parts.try_emplace(d, p.dim()).first->second.add_term(mono, c);
    }
    return {parts.begin(), parts.end()};
}

/// Exact substitution of a rational point (length m+1).
inline Multivector evaluate(const CliffordPolynomial& p, const std::vector<Rational>& point) {
    if (point.size() != static_cast<std::size_t>(p.dim().m + 1))
        throw std::invalid_argument("evaluation point length must be m+1");
    Multivector out(p.dim());
    for (const auto& [mono, c] : p.terms()) {
        Rational v = 1;
        for (std::size_t j = 0; j < point.size(); ++j)
            for (unsigned e = 0; e < mono[j]; ++e) v *= point[j];
        out = out + v * c;
    }
    return out;
}

}  // namespace monogen

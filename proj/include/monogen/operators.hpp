#pragma once

// The first-order operators of Clifford analysis on polynomials:
// Dirac ∂_x̲ = Σ e_j ∂_{x_j}, generalized Cauchy-Riemann ∂_x = ∂_{x_0} + ∂_x̲,
// its conjugate ∂̄_x = ∂_{x_0} - ∂_x̲, the hypercomplex derivative (1/2)∂̄_x,
// and the Laplacian they factor.  All operators act from the left.

#include <stdexcept>

#include "poly.hpp"

namespace monogen {

inline CliffordPolynomial dirac(const CliffordPolynomial& p) {
    CliffordPolynomial out(p.dim());
    for (int j = 1; j <= p.dim().m; ++j) {
        const Multivector ej = Multivector::basis(p.dim(), Blade(1) << (j - 1));
        out = out + ej * partial_derivative(p, j);
    }
    return out;
}

inline CliffordPolynomial cauchy_riemann(const CliffordPolynomial& p) {
    return partial_derivative(p, 0) + dirac(p);
}

inline CliffordPolynomial cauchy_riemann_conjugate(const CliffordPolynomial& p) {
    return partial_derivative(p, 0) - dirac(p);
}

/// (1/2)∂̄_x p; for monogenic p this equals ∂_{x_0}p and -∂_x̲ p.
inline CliffordPolynomial hypercomplex_derivative(const CliffordPolynomial& p) {
    return Rational(1, 2) * cauchy_riemann_conjugate(p);
}

inline CliffordPolynomial laplacian(const CliffordPolynomial& p) {
    CliffordPolynomial out(p.dim());
    for (int j = 0; j <= p.dim().m; ++j)
        out = out + partial_derivative(partial_derivative(p, j), j);
    return out;
}

inline bool is_monogenic(const CliffordPolynomial& p) {
    return cauchy_riemann(p).is_zero();
}

/// Exact zero test of ∂_x̲ p; requires p free of x_0.
inline bool is_dirac_monogenic(const CliffordPolynomial& p) {
    if (p.involves_x0())
        throw std::invalid_argument("is_dirac_monogenic requires a polynomial without x_0");
    return dirac(p).is_zero();
}

}  // namespace monogen

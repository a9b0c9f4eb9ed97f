#pragma once

// Constructive core: the coefficients β_k(n), μ_j^{k,ν}, λ_n^{k,ν}, vector
// powers x̲^n, the Cauchy-Kovalevskaya extension, the Almansi-Fischer
// decomposition, and the shifted Appell sequences built from them.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "operators.hpp"

namespace monogen {

/// Raised when a construction requires a monogenic input; carries the
/// nonzero residual ∂_x(seed).
class NotMonogenicError : public std::invalid_argument {
public:
    NotMonogenicError(std::string what, CliffordPolynomial residual)
        : std::invalid_argument(std::move(what)), residual_(std::move(residual)) {}

    const CliffordPolynomial& residual() const { return residual_; }

private:
    CliffordPolynomial residual_;
};

/// β_k(n) = n for n even, 2k + m + n - 1 for n odd (n ≥ 1).
inline Integer beta(AlgebraDim dim, unsigned k, unsigned n) {
    if (n == 0) throw std::invalid_argument("beta requires n >= 1");
    if (n % 2 == 0) return Integer(n);
    return Integer(2) * k + dim.m + n - 1;
}

/// μ_j^{k,ν} = Π_{s=ν-j+1}^{ν} β_{k-ν}(s); equals 1 for j = 0.
inline Integer mu(AlgebraDim dim, unsigned k, unsigned nu, unsigned j) {
    if (nu > k) throw std::invalid_argument("mu requires nu <= k");
    if (j > nu) throw std::invalid_argument("mu requires j <= nu");
    Integer prod = 1;
    for (unsigned s = nu - j + 1; s <= nu; ++s) prod *= beta(dim, k - nu, s);
    return prod;
}

/// λ_n^{k,ν} = n! / Π_{s=1}^{n} β_{k-ν}(ν+s); equals 1 for n = 0.
inline Rational lambda_coeff(AlgebraDim dim, unsigned k, unsigned nu, unsigned n) {
    if (nu > k) throw std::invalid_argument("lambda requires nu <= k");
    Integer den = 1;
    for (unsigned s = 1; s <= n; ++s) den *= beta(dim, k - nu, nu + s);
    return Rational(factorial(n), den);
}

/// The vector variable x̲ = Σ_{j=1}^m e_j x_j.
inline CliffordPolynomial vector_variable(AlgebraDim dim) {
    CliffordPolynomial out(dim);
    for (int j = 1; j <= dim.m; ++j) {
        Monomial mono(dim.m + 1, 0);
        mono[j] = 1;
        out.add_term(mono, Multivector::basis(dim, Blade(1) << (j - 1)));
    }
    return out;
}

/// x̲^n via the closed form x̲^{2l} = (-1)^l (Σ x_j²)^l,
/// x̲^{2l+1} = x̲ · x̲^{2l}.
inline CliffordPolynomial vector_power(AlgebraDim dim, unsigned n) {
    CliffordPolynomial even = CliffordPolynomial::constant(dim, 1);
    if (n >= 2) {
        CliffordPolynomial neg_norm_sq(dim);
        for (int j = 1; j <= dim.m; ++j) {
            Monomial mono(dim.m + 1, 0);
            mono[j] = 2;
            neg_norm_sq.add_term(mono, Multivector::scalar(dim, -1));
        }
        for (unsigned l = 0; l < n / 2; ++l) even = even * neg_norm_sq;
    }
    return (n % 2 == 0) ? even : vector_variable(dim) * even;
}

/// CK[g] = Σ_j ((-x_0)^j / j!) ∂_x̲^j g.  The series terminates because
/// ∂_x̲ strictly lowers degree; result is monogenic and restricts back to g.
inline CliffordPolynomial ck_extension(const CliffordPolynomial& g) {
    if (g.involves_x0())
        throw std::invalid_argument("ck_extension input must not involve x_0");
    const AlgebraDim dim = g.dim();
    CliffordPolynomial out(dim);
    CliffordPolynomial dirac_power = g;
    const unsigned bound = g.degree().value_or(0) + 1;
    CliffordPolynomial x0_power = CliffordPolynomial::constant(dim, 1);
    const CliffordPolynomial neg_x0 = Rational(-1) * CliffordPolynomial::variable(dim, 0);
    for (unsigned j = 0; j < bound; ++j) {
        if (dirac_power.is_zero()) break;
        out = out + Rational(Integer(1), factorial(j)) * (x0_power * dirac_power);
        dirac_power = dirac(dirac_power);
        x0_power = x0_power * neg_x0;
    }
    return out;
}

/// Almansi-Fischer decomposition of a homogeneous p of degree k in
/// x_1..x_m: p = Σ_{ν=0}^k x̲^ν P_{k-ν} with each P_{k-ν} Dirac-monogenic.
/// components[ν] holds P_{k-ν}.
struct FischerComponents {
    AlgebraDim dim;
    unsigned k = 0;
    std::vector<CliffordPolynomial> components;

    /// Σ_ν x̲^ν · components[ν].
    CliffordPolynomial reconstruct() const {
        CliffordPolynomial out(dim);
        for (unsigned nu = 0; nu < components.size(); ++nu)
            out = out + vector_power(dim, nu) * components[nu];
        return out;
    }
};

/// Recursive Dirac peel-off.  ∂_x̲ p = Σ_{ν≥1} -β_{k-ν}(ν) x̲^{ν-1} P_{k-ν},
/// so decomposing ∂_x̲ p (degree k-1) recovers every P_{k-ν} with ν ≥ 1 up
/// to the nonzero factor -β_{k-ν}(ν), and P_k is the remainder.
inline FischerComponents fischer_decompose(const CliffordPolynomial& p, unsigned k) {
    const AlgebraDim dim = p.dim();
    if (p.involves_x0())
        throw std::invalid_argument("fischer_decompose input must not involve x_0");
    if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != k))
        throw std::invalid_argument("fischer_decompose input must be homogeneous of degree k");

    FischerComponents out{dim, k, {}};
    out.components.assign(k + 1, CliffordPolynomial::zero(dim));
    if (k == 0) {
        out.components[0] = p;
        return out;
    }
    const FischerComponents lower = fischer_decompose(dirac(p), k - 1);
    CliffordPolynomial tail(dim);
    for (unsigned nu = 1; nu <= k; ++nu) {
        const Rational factor(Integer(-1), beta(dim, k - nu, nu));
        out.components[nu] = factor * lower.components[nu - 1];
        tail = tail + vector_power(dim, nu) * out.components[nu];
    }
    out.components[0] = p - tail;
    return out;
}

/// M_n^{k,ν} = λ_n^{k,ν} · CK[x̲^{ν+n} P], for Dirac-monogenic P
/// homogeneous of degree k-ν.
inline CliffordPolynomial appell_term(AlgebraDim dim, unsigned k, unsigned nu, unsigned n,
                                      const CliffordPolynomial& P) {
    if (nu > k) throw std::invalid_argument("appell_term requires nu <= k");
    if (!is_dirac_monogenic(P))
        throw std::invalid_argument("appell_term requires a Dirac-monogenic P");
    if (!P.is_zero() && (!P.is_homogeneous() || P.degree() != k - nu))
        throw std::invalid_argument("appell_term requires P homogeneous of degree k-nu");
    return lambda_coeff(dim, k, nu, n) * ck_extension(vector_power(dim, nu + n) * P);
}

/// Closed form of M_n^{k,ν} in powers of x_0, equal to appell_term.
inline CliffordPolynomial appell_term_closed_form(AlgebraDim dim, unsigned k, unsigned nu,
                                                  unsigned n, const CliffordPolynomial& P) {
    if (nu > k) throw std::invalid_argument("appell_term requires nu <= k");
    if (!is_dirac_monogenic(P))
        throw std::invalid_argument("appell_term requires a Dirac-monogenic P");
    if (!P.is_zero() && (!P.is_homogeneous() || P.degree() != k - nu))
        throw std::invalid_argument("appell_term requires P homogeneous of degree k-nu");

    const CliffordPolynomial x0 = CliffordPolynomial::variable(dim, 0);
    CliffordPolynomial inner(dim);
    CliffordPolynomial x0_power = CliffordPolynomial::constant(dim, 1);
    if (n == 0) {
        for (unsigned j = 0; j <= nu; ++j) {
            inner = inner + Rational(mu(dim, k, nu, j), factorial(j)) *
                                (x0_power * vector_power(dim, nu - j));
            x0_power = x0_power * x0;
        }
        return inner * P;
    }
    for (unsigned j = 0; j < n; ++j) {
        inner = inner + Rational(1, factorial(j) * factorial(n - j)) *
                            (lambda_coeff(dim, k, nu, n - j) *
                             (x0_power * vector_power(dim, nu + n - j)));
        x0_power = x0_power * x0;
    }
    for (unsigned j = n; j <= nu + n; ++j) {
        inner = inner + Rational(mu(dim, k, nu, j - n), factorial(j)) *
                            (x0_power * vector_power(dim, nu + n - j));
        x0_power = x0_power * x0;
    }
    return Rational(factorial(n)) * (inner * P);
}

/// A shifted Appell sequence: M_0 = seed and (1/2)∂̄_x M_n = n M_{n-1},
/// every M_n monogenic.
struct ShiftedAppellSequence {
    CliffordPolynomial seed;
    // Fischer data of each homogeneous part of the seed restricted to x_0=0.
    std::vector<FischerComponents> parts;
    std::vector<CliffordPolynomial> terms;  // M_0..M_N
};

/// Builds a shifted Appell sequence for a monogenic seed:
/// per homogeneous component of degree k, restrict to x_0 = 0, Fischer
/// decompose, and set M_n += Σ_ν appell_term(k, ν, n, P_{k-ν}).
inline ShiftedAppellSequence shifted_appell_sequence(const CliffordPolynomial& seed, unsigned N) {
    const AlgebraDim dim = seed.dim();
    const CliffordPolynomial residual = cauchy_riemann(seed);
    if (!residual.is_zero())
        throw NotMonogenicError("seed is not monogenic", residual);

    ShiftedAppellSequence out{seed, {}, {}};
    out.terms.assign(N + 1, CliffordPolynomial::zero(dim));
    for (const auto& [k, component] : homogeneous_components(seed)) {
        FischerComponents fc = fischer_decompose(restrict_x0(component), k);
        for (unsigned n = 0; n <= N; ++n)
            for (unsigned nu = 0; nu <= k; ++nu)
                out.terms[n] = out.terms[n] + appell_term(dim, k, nu, n, fc.components[nu]);
        out.parts.push_back(std::move(fc));
    }
    return out;
}

/// Deterministic monogenic test-input generator: CK extension of a random
/// homogeneous degree-k polynomial in x_1..x_m with small rational
/// coefficients.
inline CliffordPolynomial random_monogenic(AlgebraDim dim, unsigned k, std::uint64_t rng_seed) {
    std::mt19937_64 rng(rng_seed);
    std::uniform_int_distribution<int> num_dist(-3, 3);
    std::uniform_int_distribution<int> den_dist(1, 3);
    std::uniform_int_distribution<Blade> blade_dist(0, (Blade(1) << dim.m) - 1);

    CliffordPolynomial g(dim);
    // Walk every monomial of total degree k in x_1..x_m.
    Monomial mono(dim.m + 1, 0);
    auto visit = [&](auto&& self, int var, unsigned remaining) -> void {
        if (var == dim.m) {
            mono[var] = remaining;
            Multivector c(dim);
            c.add(blade_dist(rng), Rational(num_dist(rng), den_dist(rng)));
            g.add_term(mono, c);
            mono[var] = 0;
            return;
        }
        for (unsigned e = 0; e <= remaining; ++e) {
            mono[var] = e;
            self(self, var + 1, remaining - e);
        }
        mono[var] = 0;
    };
    visit(visit, 1, k);
    return ck_extension(g);
}

}  // namespace monogen

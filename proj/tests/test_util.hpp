#pragma once

// Shared helpers for the test suites: deterministic random inputs and a
// few shorthand constructors.

#include <cstdint>
#include <random>
#include <vector>

#include "monogen/monogen.hpp"

namespace monogen::testutil {

struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    int int_in(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(engine);
    }

    Rational small_rational() {
        return Rational(int_in(-4, 4), int_in(1, 3));
    }

    Blade blade(AlgebraDim dim) {
        return static_cast<Blade>(int_in(0, (1 << dim.m) - 1));
    }

    Multivector multivector(AlgebraDim dim, int nterms = 3) {
        Multivector mv(dim);
        for (int i = 0; i < nterms; ++i) mv.add(blade(dim), small_rational());
        return mv;
    }

    Monomial monomial(AlgebraDim dim, int max_deg, bool allow_x0 = true) {
        Monomial mono(dim.m + 1, 0);
        int budget = int_in(0, max_deg);
        for (int i = 0; i < budget; ++i) {
            const int j = int_in(allow_x0 ? 0 : 1, dim.m);
            mono[j] += 1;
        }
        return mono;
    }

    CliffordPolynomial polynomial(AlgebraDim dim, int max_deg = 3, int nterms = 4,
                                  bool allow_x0 = true) {
        CliffordPolynomial p(dim);
        for (int i = 0; i < nterms; ++i)
            p.add_term(monomial(dim, max_deg, allow_x0), multivector(dim, 2));
        return p;
    }

    /// Homogeneous of exactly the given degree in x_1..x_m (may be zero).
    CliffordPolynomial homogeneous(AlgebraDim dim, unsigned degree, int nterms = 4) {
        CliffordPolynomial p(dim);
        for (int i = 0; i < nterms; ++i) {
            Monomial mono(dim.m + 1, 0);
            for (unsigned d = 0; d < degree; ++d) mono[int_in(1, dim.m)] += 1;
            p.add_term(mono, multivector(dim, 2));
        }
        return p;
    }

    /// Scalar-valued (blade e_∅ only) polynomial.
    CliffordPolynomial scalar_polynomial(AlgebraDim dim, int max_deg = 3, int nterms = 4) {
        CliffordPolynomial p(dim);
        for (int i = 0; i < nterms; ++i) {
            Multivector c = Multivector::scalar(dim, small_rational());
            p.add_term(monomial(dim, max_deg), c);
        }
        return p;
    }

    /// Vector-valued polynomial f̲ = Σ f_j e_j with scalar f_j.
    CliffordPolynomial vector_polynomial(AlgebraDim dim, int max_deg = 3, int nterms = 4) {
        CliffordPolynomial p(dim);
        for (int i = 0; i < nterms; ++i) {
            Multivector c(dim);
            c.add(Blade(1) << (int_in(1, dim.m) - 1), small_rational());
            p.add_term(monomial(dim, max_deg), c);
        }
        return p;
    }

    std::vector<Rational> point(AlgebraDim dim) {
        std::vector<Rational> pt;
        for (int j = 0; j <= dim.m; ++j) pt.push_back(small_rational());
        return pt;
    }

    /// Random Dirac-monogenic homogeneous polynomial of degree k, via the
    /// Fischer projection of a random homogeneous polynomial.
    CliffordPolynomial dirac_monogenic(AlgebraDim dim, unsigned k) {
        return fischer_decompose(homogeneous(dim, k), k).components[0];
    }
};

}  // namespace monogen::testutil

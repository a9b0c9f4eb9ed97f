#pragma once

// Independent oracle for the Almansi-Fischer decomposition: sets up the
// defining equations as a dense exact linear system over the monomial x
// blade basis and solves by Gaussian elimination.  Deliberately shares no
// code path with fischer_decompose.

#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "monogen/monogen.hpp"

namespace monogen::testoracle {

/// All monomials of total degree d in x_1..x_m (x_0 exponent 0).
inline std::vector<Monomial> homogeneous_monomials(AlgebraDim dim, unsigned d) {
    std::vector<Monomial> out;
    Monomial mono(dim.m + 1, 0);
    auto rec = [&](auto&& self, int var, unsigned remaining) -> void {
        if (var == dim.m) {
            mono[var] = remaining;
            out.push_back(mono);
            mono[var] = 0;
            return;
        }
        for (unsigned e = 0; e <= remaining; ++e) {
            mono[var] = e;
            self(self, var + 1, remaining - e);
        }
        mono[var] = 0;
    };
    rec(rec, 1, d);
    return out;
}

/// Solves A x = b exactly; the system must be consistent with a unique
/// solution (full column rank).
inline std::vector<Rational> solve_unique(std::vector<std::vector<Rational>> A,
                                          std::vector<Rational> b) {
    const std::size_t rows = A.size();
    const std::size_t cols = rows ? A[0].size() : 0;
    std::vector<std::size_t> pivot_row(cols, SIZE_MAX);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pr = SIZE_MAX;
        for (std::size_t r = rank; r < rows; ++r)
            if (A[r][c] != 0) {
                pr = r;
                break;
            }
        if (pr == SIZE_MAX) continue;
        std::swap(A[rank], A[pr]);
        std::swap(b[rank], b[pr]);
        const Rational inv = A[rank][c];
        for (std::size_t cc = c; cc < cols; ++cc) A[rank][cc] /= inv;
        b[rank] /= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || A[r][c] == 0) continue;
            const Rational f = A[r][c];
            for (std::size_t cc = c; cc < cols; ++cc) A[r][cc] -= f * A[rank][cc];
            b[r] -= f * b[rank];
        }
        pivot_row[c] = rank;
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (b[r] != 0) throw std::runtime_error("fischer oracle: inconsistent system");
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_row[c] == SIZE_MAX)
            throw std::runtime_error("fischer oracle: non-unique solution");
        x[c] = b[pivot_row[c]];
    }
    return x;
}

/// Fischer decomposition by dense linear solve.  Unknowns are the
/// coefficients of each candidate P_{k-ν}; equations enforce
/// Σ_ν x̲^ν P_{k-ν} = p and ∂_x̲ P_{k-ν} = 0.
inline std::vector<CliffordPolynomial> fischer_by_linear_solve(const CliffordPolynomial& p,
                                                               unsigned k) {
    const AlgebraDim dim = p.dim();
    const Blade nblades = Blade(1) << dim.m;

    // Column layout: (ν, monomial index within degree k-ν, blade).
    struct Basis {
        unsigned nu;
        Monomial mono;
        Blade blade;
    };
    std::vector<Basis> columns;
    std::vector<std::vector<Monomial>> monos(k + 1);
    for (unsigned nu = 0; nu <= k; ++nu) {
        monos[nu] = homogeneous_monomials(dim, k - nu);
        for (const auto& mono : monos[nu])
            for (Blade bl = 0; bl < nblades; ++bl) columns.push_back({nu, mono, bl});
    }

    // Row index per (equation group, monomial, blade).
    std::map<std::tuple<int, Monomial, Blade>, std::size_t> row_of;
    auto row = [&](int group, const Monomial& mono, Blade bl) {
        return row_of.try_emplace({group, mono, bl}, row_of.size()).first->second;
    };

    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    auto ensure_rows = [&] {
        while (A.size() < row_of.size()) {
            A.emplace_back(columns.size(), Rational(0));
            b.emplace_back(0);
        }
    };

    for (std::size_t c = 0; c < columns.size(); ++c) {
        const auto& col = columns[c];
        CliffordPolynomial basis_poly(dim);
        Multivector unit(dim);
        unit.set(col.blade, 1);
        basis_poly.add_term(col.mono, unit);

        // Reconstruction contribution: group 0 rows are degree-k coefficients.
        const CliffordPolynomial lifted = vector_power(dim, col.nu) * basis_poly;
        for (const auto& [mono, coeff] : lifted.terms())
            for (const auto& [bl, value] : coeff.coeffs()) {
                const std::size_t r = row(0, mono, bl);
                ensure_rows();
                A[r][c] += value;
            }

        // Monogenicity constraint: group 1+ν rows, right-hand side zero.
        const CliffordPolynomial dirac_basis = dirac(basis_poly);
        for (const auto& [mono, coeff] : dirac_basis.terms())
            for (const auto& [bl, value] : coeff.coeffs()) {
                const std::size_t r = row(1 + static_cast<int>(col.nu), mono, bl);
                ensure_rows();
                A[r][c] += value;
            }
    }

    for (const auto& [mono, coeff] : p.terms())
        for (const auto& [bl, value] : coeff.coeffs()) {
            const std::size_t r = row(0, mono, bl);
            ensure_rows();
            b[r] = value;
        }

    const std::vector<Rational> x = solve_unique(std::move(A), std::move(b));

    std::vector<CliffordPolynomial> components(k + 1, CliffordPolynomial::zero(dim));
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (x[c] == 0) continue;
        Multivector unit(dim);
        unit.set(columns[c].blade, x[c]);
        components[columns[c].nu].add_term(columns[c].mono, unit);
    }
    return components;
}

}  // namespace monogen::testoracle

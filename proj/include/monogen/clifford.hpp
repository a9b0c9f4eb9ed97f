#pragma once

// Exact arithmetic in the Clifford algebra R_{0,m}: the real algebra on
// generators e_1..e_m with e_j e_k + e_k e_j = -2 delta_{jk}.  Blades are
// bitmasks, coefficients exact rationals, elements sparse maps.

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace monogen {

inline constexpr int kDefaultGeneratorCap = 8;

/// Number of generators of R_{0,m}.  Rejects m outside [1, cap].
struct AlgebraDim {
    int m;

    explicit AlgebraDim(int m_, int cap = kDefaultGeneratorCap) : m(m_) {
        if (m < 1 || m > cap)
            throw std::invalid_argument("algebra dimension m=" + std::to_string(m_) +
                                        " outside [1, " + std::to_string(cap) + "]");
    }

    friend bool operator==(AlgebraDim a, AlgebraDim b) { return a.m == b.m; }
};

// Basis blade e_A as a bitmask: bit j-1 set iff generator e_j occurs.
// Mask 0 is the identity blade e_∅ = 1.
using Blade = std::uint32_t;

inline int blade_grade(Blade b) { return std::popcount(b); }

/// Builds a blade from strictly ascending generator indices in 1..m.
inline Blade blade_from_indices(AlgebraDim dim, const std::vector<int>& indices) {
    Blade b = 0;
    int prev = 0;
    for (int j : indices) {
        if (j < 1 || j > dim.m)
            throw std::out_of_range("blade index " + std::to_string(j) + " outside 1.." +
                                    std::to_string(dim.m));
        if (j <= prev) throw std::invalid_argument("blade indices must be strictly ascending");
        b |= Blade(1) << (j - 1);
        prev = j;
    }
    return b;
}

inline std::vector<int> blade_indices(Blade b) {
    std::vector<int> out;
    while (b) {
        out.push_back(std::countr_zero(b) + 1);
        b &= b - 1;
    }
    return out;
}

inline void check_blade(AlgebraDim dim, Blade b) {
    if (dim.m < 32 && (b >> dim.m) != 0)
        throw std::out_of_range("blade uses generators beyond m=" + std::to_string(dim.m));
}

/// Geometric product of basis blades: sign * e_result = e_a e_b.
/// Reordering contributes (-1)^swaps, each shared generator a further -1
/// (e_j^2 = -1); the surviving indices are the symmetric difference.
inline std::pair<int, Blade> blade_product(AlgebraDim dim, Blade a, Blade b) {
    check_blade(dim, a);
    check_blade(dim, b);
    int swaps = 0;
    Blade rest = a >> 1;
    while (rest) {
        swaps += std::popcount(rest & b);
        rest >>= 1;
    }
    swaps += std::popcount(a & b);  // e_j^2 = -1 per repeated generator
    const int sign = (swaps % 2 == 0) ? 1 : -1;
    return {sign, a ^ b};
}

/// Sparse element of R_{0,m}; zero coefficients are never stored.
class Multivector {
public:
    using CoeffMap = std::map<Blade, Rational>;

    explicit Multivector(AlgebraDim dim) : dim_(dim) {}

    /// Scalar c viewed as c * e_∅.
    static Multivector scalar(AlgebraDim dim, const Rational& c) {
        Multivector mv(dim);
        mv.set(0, c);
        return mv;
    }

    static Multivector basis(AlgebraDim dim, Blade b) {
        check_blade(dim, b);
        Multivector mv(dim);
        mv.set(b, 1);
        return mv;
    }

    AlgebraDim dim() const { return dim_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(Blade b) const {
        auto it = coeffs_.find(b);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void set(Blade b, const Rational& c) {
        check_blade(dim_, b);
        if (c == 0)
            coeffs_.erase(b);
        else
            coeffs_[b] = c;
    }

    void add(Blade b, const Rational& c) {
        check_blade(dim_, b);
        auto [it, inserted] = coeffs_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        } else if (c == 0) {
            coeffs_.erase(it);
        }
    }

    friend Multivector operator+(const Multivector& a, const Multivector& b) {
        require_same_dim(a, b);
        Multivector out = a;
        for (const auto& [blade, c] : b.coeffs_) out.add(blade, c);
        return out;
    }

    friend Multivector operator-(const Multivector& a, const Multivector& b) {
        require_same_dim(a, b);
        Multivector out = a;
        for (const auto& [blade, c] : b.coeffs_) out.add(blade, -c);
        return out;
    }

    friend Multivector operator-(const Multivector& a) {
        Multivector out(a.dim_);
        for (const auto& [blade, c] : a.coeffs_) out.coeffs_[blade] = -c;
        return out;
    }

    friend Multivector operator*(const Multivector& a, const Multivector& b) {
        require_same_dim(a, b);
        Multivector out(a.dim_);
        for (const auto& [ba, ca] : a.coeffs_)
            for (const auto& [bb, cb] : b.coeffs_) {
                auto [sign, blade] = blade_product(a.dim_, ba, bb);
                Rational c = ca * cb;
                out.add(blade, sign > 0 ? c : Rational(-c));
            }
        return out;
    }

    friend Multivector operator*(const Rational& s, const Multivector& a) {
        Multivector out(a.dim_);
        if (s == 0) return out;
        for (const auto& [blade, c] : a.coeffs_) out.coeffs_[blade] = s * c;
        return out;
    }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_;
    }

private:
    static void require_same_dim(const Multivector& a, const Multivector& b) {
        if (!(a.dim_ == b.dim_))
            throw std::invalid_argument("multivector dimension mismatch");
    }

    AlgebraDim dim_;
    CoeffMap coeffs_;
};

/// Clifford conjugation: per grade-g blade the coefficient picks up
/// (-1)^{g(g+1)/2}.  An involutive anti-automorphism.
inline Multivector conjugate(const Multivector& a) {
    Multivector out(a.dim());
    for (const auto& [blade, c] : a.coeffs()) {
        const int g = blade_grade(blade);
        const bool flip = ((g * (g + 1)) / 2) % 2 != 0;
        out.set(blade, flip ? -c : c);
    }
    return out;
}

}  // namespace monogen

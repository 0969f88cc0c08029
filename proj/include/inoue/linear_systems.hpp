#pragma once

// h^0 of divisor classes on Y by plane interpolation.
//
// For a = deg >= 0 and m_i >= 0, H^0(Y, aL - sum m_i E_i) is the space of
// degree-a forms vanishing to order >= m_i at P_i. A homogeneous form F of
// degree a vanishes to order m at P iff every partial derivative of F of
// order exactly m-1 vanishes at P (the lower orders follow from Euler's
// identity whenever m-1 <= a), which gives m(m+1)/2 linear conditions.

#include <algorithm>
#include <array>
#include <cstddef>
#include <vector>

#include "inoue/exact.hpp"
#include "inoue/picard_lattice.hpp"
#include "inoue/quadrilateral.hpp"

namespace inoue {

struct InterpolationCondition {
    ProjectivePoint point;
    long multiplicity = 0;
};

struct InterpolationProblem {
    long degree = 0;
    std::vector<InterpolationCondition> conditions;

    std::size_t column_count() const {
        const auto d = static_cast<std::size_t>(degree);
        return (d + 1) * (d + 2) / 2;
    }
    std::size_t row_count() const {
        std::size_t rows = 0;
        for (const auto& c : conditions) {
            if (c.multiplicity > 0) rows += static_cast<std::size_t>(c.multiplicity * (c.multiplicity + 1) / 2);
        }
        return rows;
    }
};

using Exponent = std::array<long, 3>;

/// Exponent triples of total degree d in graded lexicographic order:
/// x^d, x^(d-1)y, x^(d-1)z, x^(d-2)y^2, ...
inline std::vector<Exponent> exponents_of_degree(long d) {
    std::vector<Exponent> out;
    for (long i = d; i >= 0; --i) {
        for (long j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
    }
    return out;
}

namespace detail {

inline Integer falling_factorial(long n, long k) {
    Integer r = 1;
    for (long t = 0; t < k; ++t) r *= (n - t);
    return r;
}

inline Rational power(const Rational& base, long e) {
    Rational r = 1;
    for (long t = 0; t < e; ++t) r *= base;
    return r;
}

}  // namespace detail

/// Rows: conditions in input order; within a condition, the derivative
/// multi-indices of order m-1 in graded lexicographic order.
/// Columns: monomial coefficients in the order of exponents_of_degree(degree).
inline RationalMatrix interpolation_matrix(const InterpolationProblem& p) {
    if (p.degree < 0) throw DomainError("interpolation_matrix: negative degree");
    const auto monomials = exponents_of_degree(p.degree);
    RationalMatrix rows;
    rows.reserve(p.row_count());
    for (const auto& cond : p.conditions) {
        if (cond.multiplicity <= 0) continue;
        for (const auto& alpha : exponents_of_degree(cond.multiplicity - 1)) {
            RationalVector row(monomials.size());
            for (std::size_t c = 0; c < monomials.size(); ++c) {
                const auto& e = monomials[c];
                if (e[0] < alpha[0] || e[1] < alpha[1] || e[2] < alpha[2]) continue;
                Rational v = 1;
                for (std::size_t r = 0; r < 3; ++r) {
                    v *= Rational(detail::falling_factorial(e[r], alpha[r]));
                    v *= detail::power(cond.point[r], e[r] - alpha[r]);
                }
                row[c] = v;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

/// Interpolation problem for d on cfg, with negative multiplicities clamped to 0.
inline InterpolationProblem interpolation_problem(const DivisorClass& d, const PointConfiguration& cfg) {
    InterpolationProblem p;
    p.degree = d.a;
    for (std::size_t i = 0; i < kBlownUpPoints; ++i) {
        p.conditions.push_back({cfg.points[i], std::max(0L, d.m[i])});
    }
    return p;
}

/// A class with some m_i < 0 has E_i as a fixed component, so its h^0 equals
/// that of the class with m_i clamped to 0. A nonzero form of degree a has
/// multiplicity at most a everywhere, hence h^0 = 0 once some m_i exceeds a.
inline long h0(const DivisorClass& d, const PointConfiguration& cfg = standard_points()) {
    require_valid(cfg);
    if (d.a < 0) return 0;
    for (const long m : d.m) {
        if (m > d.a) return 0;
    }
    const auto problem = interpolation_problem(d, cfg);
    const auto matrix = interpolation_matrix(problem);
    return static_cast<long>(problem.column_count() - rank_fraction_free(matrix));
}

/// Riemann-Roch on Y (chi(O_Y) = 1): chi(d) = 1 + (d^2 - d.K)/2.
inline long chi_riemann_roch(const DivisorClass& d) {
    const long twice = intersect(d, d) - intersect(d, canonical_class());
    if (twice % 2 != 0) throw DomainError("Riemann-Roch parity violated: d^2 - d.K is odd");
    return 1 + twice / 2;
}

}  // namespace inoue

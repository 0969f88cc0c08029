#include <gtest/gtest.h>

#include "inoue/cover_invariants.hpp"
#include "inoue/linear_systems.hpp"

using namespace inoue;

namespace {

Rational binom(long n, long k) {
    Rational r = 1;
    for (long t = 0; t < k; ++t) r = r * (n - t) / (t + 1);
    return r;
}

Rational pow_q(const Rational& b, long e) {
    Rational r = 1;
    for (long t = 0; t < e; ++t) r *= b;
    return r;
}

// h0 by vanishing of the Taylor expansion in an affine chart around each point:
// dehomogenize at a nonzero coordinate c, write the other coordinates as
// p_i + u, p_j + v, and require every coefficient u^s v^t with s + t < m to vanish.
long h0_local(const DivisorClass& d, const PointConfiguration& cfg) {
    if (d.a < 0) return 0;
    for (long m : d.m) {
        if (m > d.a) return 0;
    }
    std::vector<std::array<long, 3>> monomials;
    for (long i = 0; i <= d.a; ++i) {
        for (long j = 0; i + j <= d.a; ++j) monomials.push_back({i, j, d.a - i - j});
    }
    RationalMatrix rows;
    for (std::size_t n = 0; n < 6; ++n) {
        const long m = std::max(0L, d.m[n]);
        if (m == 0) continue;
        auto p = cfg.points[n];
        std::size_t c = 0;
        while (p[c] == 0) ++c;
        const Rational scale = p[c];
        for (auto& x : p) x /= scale;
        const std::size_t i = (c + 1) % 3, j = (c + 2) % 3;
        for (long s = 0; s < m; ++s) {
            for (long t = 0; s + t < m; ++t) {
                RationalVector row;
                for (const auto& e : monomials) {
                    if (e[i] < s || e[j] < t) {
                        row.push_back(0);
                        continue;
                    }
                    row.push_back(binom(e[i], s) * pow_q(p[i], e[i] - s) * binom(e[j], t) * pow_q(p[j], e[j] - t));
                }
                rows.push_back(row);
            }
        }
    }
    return static_cast<long>(monomials.size() - rank_rational(rows));
}

InterpolationProblem single(long degree, ProjectivePoint p, long m) {
    InterpolationProblem prob;
    prob.degree = degree;
    prob.conditions.push_back({p, m});
    return prob;
}

const DivisorClass kM{9, {3, 4, 3, 4, 4, 4}};

}  // namespace

TEST(LinearSystems, ExponentOrder) {
    const auto e = exponents_of_degree(2);
    const std::vector<Exponent> expected{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
    EXPECT_EQ(e, expected);
    EXPECT_EQ(exponents_of_degree(0).size(), 1u);
    EXPECT_EQ(exponents_of_degree(5).size(), 21u);
}

TEST(LinearSystems, SimplePointMatrix) {
    const auto m = interpolation_matrix(single(1, {1, 0, 0}, 1));
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ(m[0], (RationalVector{1, 0, 0}));
}

TEST(LinearSystems, DoublePointMatrix) {
    // first partials of the six conic monomials, evaluated at (0:0:1)
    const auto m = interpolation_matrix(single(2, {0, 0, 1}, 2));
    const RationalMatrix expected{{0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 2}};
    EXPECT_EQ(m, expected);
}

TEST(LinearSystems, MatrixShapeForBicanonicalBase) {
    const auto p = interpolation_problem(kM, standard_points());
    const auto m = interpolation_matrix(p);
    EXPECT_EQ(p.column_count(), 55u);
    EXPECT_EQ(p.row_count(), 6u + 10u + 6u + 10u + 10u + 10u);
    EXPECT_EQ(m.size(), 52u);
    for (const auto& row : m) EXPECT_EQ(row.size(), 55u);
}

TEST(LinearSystems, NegativeDegreeRejected) {
    EXPECT_THROW(interpolation_matrix(single(-1, {1, 0, 0}, 1)), DomainError);
}

TEST(LinearSystems, SmallH0) {
    EXPECT_EQ(h0(DivisorClass{0, {}}), 1);
    EXPECT_EQ(h0(line_class()), 3);
    EXPECT_EQ(h0(DivisorClass{2, {}}), 6);
    EXPECT_EQ(h0(DivisorClass{-1, {}}), 0);
    EXPECT_EQ(h0(DivisorClass{1, {1, 1, 0, 0, 1, 0}}), 1);      // S1
    EXPECT_EQ(h0(DivisorClass{1, {1, 1, 1, 0, 0, 0}}), 0);      // no line through P1, P2, P3
    EXPECT_EQ(h0(DivisorClass{2, {0, 1, 0, 1, 1, 1}}), 2);      // f1 is a pencil
    EXPECT_EQ(h0(DivisorClass{1, {2, 0, 0, 0, 0, 0}}), 0);      // m > a
    EXPECT_EQ(h0(DivisorClass{1, {-1, 0, 0, 0, 0, 0}}), 3);     // E1 fixed component
    EXPECT_EQ(h0(-canonical_class()), 4);
    EXPECT_EQ(h0(canonical_class()), 0);
}

TEST(LinearSystems, CharacterClasses) {
    EXPECT_EQ(h0(kM), 7);
    EXPECT_EQ(h0(DivisorClass{4, {2, 2, 2, 1, 2, 2}}), 1);
    EXPECT_EQ(h0(DivisorClass{3, {1, 2, 1, 2, 1, 1}}), 0);
    EXPECT_EQ(h0(DivisorClass{5, {1, 2, 1, 3, 3, 3}}), 0);
}

TEST(LinearSystems, AgreesWithLocalExpansionOracle) {
    const auto cfg = standard_points();
    const std::vector<DivisorClass> classes{
        kM,
        {4, {2, 2, 2, 1, 2, 2}},
        {3, {1, 2, 1, 2, 1, 1}},
        {5, {1, 2, 1, 3, 3, 3}},
        {3, {1, 1, 1, 1, 1, 1}},
        {6, {2, 2, 2, 2, 2, 2}},
        {4, {0, 3, 0, 1, 1, 2}},
        {2, {1, 1, 1, 1, 1, 1}},
    };
    for (const auto& d : classes) EXPECT_EQ(h0(d, cfg), h0_local(d, cfg)) << to_string(d);
}

TEST(LinearSystems, RiemannRoch) {
    EXPECT_EQ(chi_riemann_roch(kM), 3);
    EXPECT_EQ(chi_riemann_roch(DivisorClass{0, {}}), 1);
    EXPECT_EQ(chi_riemann_roch(-canonical_class()), 4);
    EXPECT_EQ(chi_riemann_roch(line_class()), 3);
    EXPECT_EQ(chi_riemann_roch(canonical_class()), 1);
}

TEST(LinearSystems, RiemannRochLowerBound) {
    // h0(d) >= chi(d) - h0(K - d), since h2(d) = h0(K - d)
    const auto K = canonical_class();
    const std::vector<DivisorClass> classes{
        kM, {4, {2, 2, 2, 1, 2, 2}}, {3, {1, 2, 1, 2, 1, 1}}, {5, {1, 2, 1, 3, 3, 3}},
        {3, {1, 1, 1, 1, 1, 1}}, {2, {}}, {0, {}}, {4, {1, 1, 1, 1, 0, 0}}, {-1, {}},
    };
    for (const auto& d : classes) {
        EXPECT_GE(h0(d), chi_riemann_roch(d) - h0(K - d)) << to_string(d);
    }
}

TEST(LinearSystems, InvalidConfigurationRejected) {
    auto cfg = standard_points();
    cfg.points[4] = {1, 2, 0};
    EXPECT_THROW(h0(line_class(), cfg), DomainError);
}

#include "crepant/errors.hpp"
#include "crepant/k3moduli.hpp"

#include <gtest/gtest.h>

#include <thread>

using namespace crepant;

namespace {

Poly P(std::initializer_list<long> c) { return Poly(c); }

// Schubert cells of the Lagrangian Grassmannian LG(n, 2n) are indexed by
// strict partitions with parts <= n; the cell of lambda has dimension |lambda|.
Poly lagrangian_cell_count(int n) {
    std::vector<Rational> c(static_cast<std::size_t>(n * (n + 1) / 2 + 1));
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        int dim = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1U << i)) dim += i + 1;
        c[static_cast<std::size_t>(dim)] += 1;
    }
    return Poly(std::move(c));
}

long long eta24_coeff(int max_n, int n) {
    std::vector<long long> sigma(static_cast<std::size_t>(max_n) + 1), f(sigma.size());
    for (int d = 1; d <= max_n; ++d)
        for (int m = d; m <= max_n; m += d) sigma[static_cast<std::size_t>(m)] += d;
    f[0] = 1;
    for (int m = 1; m <= max_n; ++m) {
        long long s = 0;
        for (int k = 1; k <= m; ++k) s += sigma[static_cast<std::size_t>(k)] * f[static_cast<std::size_t>(m - k)];
        f[static_cast<std::size_t>(m)] = 24 * s / m;
    }
    return f[static_cast<std::size_t>(n)];
}

}  // namespace

TEST(Hilbert, SmallCases) {
    EXPECT_EQ(hilb_poincare(0), Poly{1});
    EXPECT_EQ(hilb_poincare(1), P({1, 22, 1}));
    EXPECT_EQ(hilb_poincare(3), P({1, 23, 299, 2554, 299, 23, 1}));
    EXPECT_EQ(hilb_poincare(4)[4], 19298);
    EXPECT_THROW(hilb_poincare(-1), DomainError);
}

TEST(Hilbert, LowCoefficientTable) {
    const long table[][4] = {{23, 299, 2554, 299},   {23, 300, 2852, 19298}, {23, 300, 2875, 22127},
                             {23, 300, 2876, 22426}, {23, 300, 2876, 22449}, {23, 300, 2876, 22450}};
    for (int n = 3; n <= 8; ++n) {
        const Poly p = hilb_poincare(n);
        for (int i = 1; i <= 4; ++i) EXPECT_EQ(p[static_cast<std::size_t>(i)], table[n - 3][i - 1]) << n << " " << i;
    }
    for (int n = 9; n <= 14; ++n) {
        const Poly p = hilb_poincare(n);
        EXPECT_EQ(p[1], 23);
        EXPECT_EQ(p[2], 300);
        EXPECT_EQ(p[3], 2876);
        EXPECT_EQ(p[4], 22450);
    }
}

TEST(Hilbert, PalindromicOfDegree2n) {
    for (int n = 0; n <= 12; ++n) {
        const Poly p = hilb_poincare(n);
        EXPECT_EQ(p.degree(), 2 * n);
        EXPECT_TRUE(p.is_palindromic()) << n;
        EXPECT_TRUE(p.is_integral() && p.has_nonnegative_coeffs());
    }
}

TEST(Hilbert, EulerCharacteristicMatchesEtaProduct) {
    EXPECT_EQ(euler_char_hilb(1), 24);
    EXPECT_EQ(euler_char_hilb(2), 324);
    EXPECT_EQ(euler_char_hilb(3), 3200);
    for (int n = 0; n <= 12; ++n) EXPECT_EQ(euler_char_hilb(n), Integer(static_cast<long>(eta24_coeff(12, n)))) << n;
}

TEST(Hilbert, ConcurrentCallsAgree) {
    std::vector<Poly> got(8);
    std::vector<std::thread> pool;
    for (int i = 0; i < 8; ++i) pool.emplace_back([&, i] { got[static_cast<std::size_t>(i)] = hilb_poincare(10 + i % 3); });
    for (auto& t : pool) t.join();
    for (int i = 0; i < 8; ++i) EXPECT_EQ(got[static_cast<std::size_t>(i)], hilb_poincare(10 + i % 3));
}

TEST(IsotropicGrassmannian, Examples) {
    EXPECT_EQ(isotropic_grass_E(1, 1), P({1, 1}));
    EXPECT_EQ(isotropic_grass_E(2, 2), P({1, 1, 1, 1}));
    for (int n = 1; n <= 7; ++n) EXPECT_EQ(isotropic_grass_E(1, n), geometric_sum(static_cast<std::size_t>(2 * n)));
    EXPECT_THROW(isotropic_grass_E(0, 3), DomainError);
    EXPECT_THROW(isotropic_grass_E(4, 3), DomainError);
}

TEST(IsotropicGrassmannian, LagrangianMatchesSchubertCells) {
    for (int n = 1; n <= 6; ++n) {
        const Poly e = isotropic_grass_E(n, n);
        EXPECT_EQ(e, lagrangian_cell_count(n)) << n;
        EXPECT_EQ(e.evaluate(1), Rational(1L << n));
    }
}

TEST(IsotropicGrassmannian, PositiveIntegerCoefficients) {
    for (int n = 1; n <= 10; ++n)
        for (int k = 1; k <= n; ++k) {
            const Poly e = isotropic_grass_E(k, n);
            EXPECT_TRUE(e.is_integral() && e.has_nonnegative_coeffs());
            EXPECT_EQ(e.degree(), static_cast<long>(k * (2 * n - k) - k * (k - 1) / 2));
        }
}

TEST(ProjectiveSpace, Examples) {
    EXPECT_EQ(proj_space_E(0), Poly{1});
    EXPECT_EQ(proj_space_E(2), P({1, 1, 1}));
    EXPECT_THROW(proj_space_E(-1), DomainError);
}

TEST(Incidence, Examples) {
    EXPECT_EQ(incidence_P(3), P({1, 2, 3, 3, 2, 1}));
    EXPECT_EQ(incidence_P(3).evaluate(1), 12);
    EXPECT_EQ(incidence_Pplus(3), P({1, 1, 2, 1, 1}));
    EXPECT_EQ(incidence_Pplus(3).evaluate(1), 6);
    EXPECT_THROW(incidence_P(2), DomainError);
}

TEST(Incidence, PlusPartTimesOnePlusT) {
    for (int n = 3; n <= 50; ++n) EXPECT_EQ(P({1, 1}) * incidence_Pplus(n), incidence_P(n)) << n;
}

TEST(Macdonald, Examples) {
    const auto line = macdonald_split(P({1, 1}));
    EXPECT_EQ(line.plus, P({1, 1, 1}));
    EXPECT_EQ(line.minus, P({0, 1}));
    const auto point = macdonald_split(Poly{1});
    EXPECT_EQ(point.plus, Poly{1});
    EXPECT_TRUE(point.minus.is_zero());
    const Poly p = hilb_poincare(3);
    const auto s = macdonald_split(p);
    EXPECT_EQ(s.plus + s.minus, p * p);
    EXPECT_EQ(s.plus - s.minus, substitute_power(p, 2));
    EXPECT_TRUE(s.plus.is_integral() && s.minus.is_integral());
}

TEST(DivisorSubset, NamesAndLabels) {
    EXPECT_EQ(DivisorSubset({1, 3}).name(), "D13");
    EXPECT_EQ(DivisorSubset{}.name(), "M^s");
    EXPECT_EQ(DivisorSubset({2, 3}).size(), 2);
    EXPECT_EQ(DivisorSubset({3, 1}).labels(), (std::vector<int>{1, 3}));
    EXPECT_TRUE(DivisorSubset({1, 2}).contains(2));
    EXPECT_FALSE(DivisorSubset({1, 2}).contains(3));
}

TEST(ClosedStrata, DeepestAtNEquals3) {
    const auto closed = closed_strata_E(3);
    const Poly expected = P({1, 1}) * P({1, 1}) * P({1, 1, 1, 1}) *
                          exact_div(Poly::one_minus_power(6), Poly::one_minus_power(2), "test") * hilb_poincare(3);
    EXPECT_EQ(closed.at({1, 2, 3}), expected);
    EXPECT_EQ(closed.at({1, 2, 3}).degree(), 15);
    EXPECT_EQ(closed.at({1}).degree(), 17);
}

TEST(ClosedStrata, DegreesAndPositivity) {
    for (int n = 3; n <= 12; ++n) {
        const auto closed = closed_strata_E(n);
        EXPECT_EQ(closed.size(), 6U);
        for (const auto& [key, poly] : closed) {
            EXPECT_EQ(poly.degree(), 8L * n - 6 - key.size()) << key.name();
            EXPECT_GT(poly.evaluate(1), 0) << key.name();
        }
    }
    EXPECT_THROW(closed_strata_E(2), DomainError);
}

TEST(OpenStrata, DeepestEqualsClosed) {
    EXPECT_EQ(open_strata_E(4).at({1, 2, 3}), closed_strata_E(4).at({1, 2, 3}));
}

TEST(OpenStrata, MoebiusReconstruction) {
    for (int n = 3; n <= 8; ++n) {
        const auto open = open_strata_E(n);
        const auto closed = closed_strata_E(n);
        EXPECT_EQ(open.at({1}) + open.at({1, 2}) + open.at({1, 3}) + open.at({1, 2, 3}), closed.at({1}));
        EXPECT_EQ(open.at({3}) + open.at({1, 3}) + open.at({2, 3}) + open.at({1, 2, 3}), closed.at({3}));
        EXPECT_EQ(open.at({1, 2}) + open.at({1, 2, 3}), closed.at({1, 2}));
    }
}

TEST(OpenStrata, D1OpenIsSmoothConicsBundle) {
    // Over each point the open part of the blown-up P^5 is the space of smooth
    // conics, whose E-polynomial t^5 - t^2 has a negative coefficient.
    for (int n = 3; n <= 8; ++n) {
        EXPECT_EQ(open_strata_E(n).at({1}), P({0, 0, -1, 0, 0, 1}) * isotropic_grass_E(3, n) * hilb_poincare(n));
    }
    EXPECT_EQ(open_strata_E(3).at({1}).degree(), 17);
}

TEST(OpenStrata, IntegralCoefficients) {
    for (int n = 3; n <= 10; ++n)
        for (const auto& [key, poly] : open_strata_E(n)) EXPECT_TRUE(poly.is_integral()) << key.name();
}

TEST(D2Open, DivisibleByGeometricSum) {
    for (int n = 3; n <= 50; ++n) {
        EXPECT_TRUE(poly_rem(E_D2_open(n), geometric_sum(static_cast<std::size_t>(2 * n - 3))).is_zero()) << n;
    }
}

TEST(D2Open, ConstantHilbertPolynomialGivesZero) { EXPECT_TRUE(E_D2_open(Poly{1}, 3).is_zero()); }

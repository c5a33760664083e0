#include "crepant/errors.hpp"
#include "crepant/polyring.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace crepant;

namespace {

// Schoolbook arithmetic on small int64 coefficient vectors, kept apart from
// Poly so the randomized checks compare two independent implementations.
using Naive = std::vector<long long>;

Naive naive_trim(Naive v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

Naive naive_add(const Naive& a, const Naive& b) {
    Naive out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return naive_trim(out);
}

Naive naive_mul(const Naive& a, const Naive& b) {
    if (a.empty() || b.empty()) return {};
    Naive out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return naive_trim(out);
}

Poly from_naive(const Naive& v) {
    std::vector<Rational> c;
    for (long long x : v) c.emplace_back(static_cast<long>(x));
    return Poly(std::move(c));
}

Naive random_naive(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(-1, max_deg);
    std::uniform_int_distribution<int> coef(-50, 50);
    Naive v(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& x : v) x = coef(rng);
    return naive_trim(v);
}

Poly random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(-1, max_deg);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 6);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& x : c) {
        x = Rational(num(rng), den(rng));
        x.canonicalize();
    }
    return Poly(std::move(c));
}

}  // namespace

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(parse_rational("3"), Rational(3));
    EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
    EXPECT_EQ(to_string(parse_rational("10/5")), "2");
    EXPECT_EQ(to_string(parse_rational("-1/3")), "-1/3");
    EXPECT_EQ(parse_rational("123456789012345678901234567890").get_str(), "123456789012345678901234567890");
    EXPECT_THROW(parse_rational("1/0"), DomainError);
    EXPECT_THROW(parse_rational("x"), DomainError);
    EXPECT_THROW(parse_rational(""), DomainError);
}

TEST(Poly, ZeroAndDegree) {
    Poly z;
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.degree(), -1);
    EXPECT_EQ(Poly({0, 0, 0}), z);
    EXPECT_EQ(Poly({1, 2, 0}).degree(), 1);
    EXPECT_EQ(Poly({1, 2})[5], 0);
}

TEST(Poly, Printing) {
    EXPECT_EQ(to_string(Poly{1, 22, 1}), "1 + 22*t + t^2");
    EXPECT_EQ(to_string(Poly{-1, 0, 0, 1}), "-1 + t^3");
    EXPECT_EQ(to_string(Poly{}), "0");
}

TEST(Poly, GeometricSumAndOneMinusPower) {
    EXPECT_EQ(geometric_sum(1), Poly{1});
    EXPECT_EQ(geometric_sum(3), (Poly{1, 1, 1}));
    EXPECT_EQ(Poly::one_minus_power(3), (Poly{1, 0, 0, -1}));
    EXPECT_EQ((Poly{1, -1} * geometric_sum(7)), Poly::one_minus_power(7));
    EXPECT_THROW(geometric_sum(0), DomainError);
}

TEST(Poly, SubstitutePower) {
    EXPECT_EQ(substitute_power(Poly{1, 22, 1}, 2), (Poly{1, 0, 22, 0, 1}));
    EXPECT_THROW(substitute_power(Poly{1}, 0), DomainError);
}

TEST(Poly, Predicates) {
    EXPECT_TRUE((Poly{1, 23, 299, 23, 1}).is_palindromic());
    EXPECT_FALSE((Poly{1, 2}).is_palindromic());
    EXPECT_TRUE((Poly{1, 2}).has_nonnegative_coeffs());
    EXPECT_FALSE((Poly{1, -2}).has_nonnegative_coeffs());
    EXPECT_FALSE((Poly({Rational(1, 2)})).is_integral());
    EXPECT_EQ((Poly{1, 22, 1}).evaluate(1), 24);
    EXPECT_EQ((Poly{2, 4}).monic(), Poly(std::vector<Rational>{Rational(1, 2), Rational(1)}));
}

TEST(PolyProperty, RingOpsMatchSchoolbook) {
    std::mt19937_64 rng(20261015);
    for (int trial = 0; trial < 1500; ++trial) {
        const Naive a = random_naive(rng, 12), b = random_naive(rng, 12);
        ASSERT_EQ(from_naive(a) + from_naive(b), from_naive(naive_add(a, b)));
        ASSERT_EQ(from_naive(a) * from_naive(b), from_naive(naive_mul(a, b)));
        ASSERT_EQ(poly_mul(from_naive(a), from_naive(b)), from_naive(naive_mul(a, b)));
    }
}

TEST(PolyProperty, RingAxioms) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        const Poly a = random_poly(rng, 8), b = random_poly(rng, 8), c = random_poly(rng, 8);
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a - a, Poly{});
        ASSERT_EQ(a * Poly{1}, a);
        ASSERT_EQ(a + Poly{}, a);
        ASSERT_EQ(-(-a), a);
    }
}

TEST(PolyProperty, DivModRecomposes) {
    std::mt19937_64 rng(11);
    int checked = 0;
    while (checked < 1000) {
        const Poly a = random_poly(rng, 14), b = random_poly(rng, 7);
        if (b.is_zero()) continue;
        const DivMod qr = poly_divmod(a, b);
        ASSERT_EQ(qr.quotient * b + qr.remainder, a);
        ASSERT_LT(qr.remainder.degree(), b.degree());
        ASSERT_EQ(poly_rem(a, b), qr.remainder);
        ASSERT_EQ(exact_div(a * b, b, "test"), a);
        ++checked;
    }
}

TEST(PolyProperty, GcdDividesBothAndIsMonic) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const Poly common = random_poly(rng, 3), a = random_poly(rng, 5), b = random_poly(rng, 5);
        if (common.is_zero() || (a.is_zero() && b.is_zero())) continue;
        const Poly g = poly_gcd(a * common, b * common);
        ASSERT_EQ(g.leading(), 1);
        ASSERT_TRUE(poly_rem(a * common, g).is_zero());
        ASSERT_TRUE(poly_rem(b * common, g).is_zero());
        ASSERT_TRUE(poly_rem(g, common.monic()).is_zero());
    }
}

TEST(Poly, DivisionErrors) {
    EXPECT_THROW(poly_divmod(Poly{1, 2}, Poly{}), DomainError);
    EXPECT_THROW(exact_div(Poly{1, 0, 1}, Poly{1, 1}, "stage"), InvariantViolation);
    EXPECT_THROW(poly_gcd(Poly{}, Poly{}), DomainError);
}

TEST(Poly, GcdOfCyclotomicProducts) {
    EXPECT_EQ(poly_gcd(Poly::one_minus_power(9), Poly::one_minus_power(6)), (Poly{-1, 0, 0, 1}));
    EXPECT_EQ(poly_gcd(Poly::one_minus_power(5), Poly::one_minus_power(7)), (Poly{-1, 1}));
    EXPECT_TRUE(associates(Poly{1, -1}, Poly{-1, 1}));
    EXPECT_FALSE(associates(Poly{1, -1}, Poly{1, 1}));
}

TEST(Poly, Pow) {
    EXPECT_EQ(pow(Poly{1, 1}, 3), (Poly{1, 3, 3, 1}));
    EXPECT_EQ(pow(Poly{1, 1}, 0), Poly{1});
}

TEST(RationalFn, NormalizedAndDisplayForms) {
    const Poly num = Poly{1, -1} * Poly{1, 2};
    const Poly den = Poly{1, -1} * Poly{3, 1};
    const RationalFn shown = RationalFn::unreduced(num, den);
    EXPECT_EQ(shown.num(), num);
    EXPECT_FALSE(shown.is_normalized());
    const RationalFn r = shown.normalized();
    EXPECT_TRUE(r.is_normalized());
    EXPECT_EQ(r.den(), (Poly{3, 1}));
    EXPECT_EQ(r.num(), (Poly{1, 2}));
    EXPECT_FALSE(r.is_polynomial());
    EXPECT_TRUE(RationalFn::normalized(Poly::one_minus_power(4), Poly{1, -1}).is_polynomial());
    EXPECT_THROW(RationalFn::normalized(Poly{1}, Poly{}), DomainError);
    EXPECT_THROW(RationalFn::unreduced(Poly{1}, Poly{}), DomainError);
}

TEST(RationalFn, Arithmetic) {
    // 1/(1+t) + t/(1+t) = 1.
    const RationalFn a = RationalFn::normalized(Poly{1}, Poly{1, 1});
    const RationalFn b = RationalFn::normalized(Poly{0, 1}, Poly{1, 1});
    EXPECT_EQ(ratfn_add(a, b), RationalFn(Poly{1}));
    EXPECT_EQ(ratfn_mul(a, RationalFn(Poly{1, 1})), RationalFn(Poly{1}));
}

TEST(SeriesExpand, GeometricSeries) {
    const auto c = series_expand(Poly{1}, Poly{1, -1}, 5);
    ASSERT_EQ(c.size(), 5U);
    for (const auto& x : c) EXPECT_EQ(x, 1);
    const auto d = series_expand(Poly{1}, Poly::one_minus_power(3), 7);
    EXPECT_EQ(d, (std::vector<Rational>{1, 0, 0, 1, 0, 0, 1}));
    EXPECT_THROW(series_expand(Poly{1}, Poly{0, 1}, 3), DomainError);
}

TEST(SeriesExpand, RecoversPolynomialQuotient) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        Poly q = random_poly(rng, 6), den = random_poly(rng, 4);
        if (den.is_zero() || den[0] == 0) continue;
        const auto c = series_expand(q * den, den, 10);
        for (std::size_t i = 0; i < 10; ++i) ASSERT_EQ(c[i], q[i]);
    }
}

#pragma once

/**
 * @file polyring.hpp
 * @brief Exact dense univariate polynomials and rational functions over Q.
 *
 * Every polynomial in this library lives in a single variable t. Coefficients
 * are arbitrary-precision rationals; nothing here ever rounds.
 */

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crepant {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws DomainError on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integral values, "p/q" otherwise.
std::string to_string(const Rational& r);

/// Dense polynomial in t; coeffs()[i] is the coefficient of t^i.
///
/// The stored vector never ends in a zero, so the zero polynomial is the empty
/// vector and degree() is size() - 1 (or -1 for zero).
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<long> coeffs);
    explicit Poly(std::vector<Rational> coeffs);

    static Poly constant(Rational c);
    static Poly monomial(Rational c, std::size_t exponent);
    /// 1 - t^k.
    static Poly one_minus_power(std::size_t k);

    std::span<const Rational> coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    /// Coefficient of t^i; zero past the degree.
    Rational operator[](std::size_t i) const;
    const Rational& leading() const;

    bool is_integral() const;
    bool has_nonnegative_coeffs() const;
    bool is_palindromic() const;
    Rational evaluate(const Rational& x) const;

    /// Scalar multiple with leading coefficient 1. Zero stays zero.
    Poly monic() const;

    /// Keeps only the coefficients of t^0 .. t^(len-1).
    Poly truncated(std::size_t len) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

Poly poly_mul(const Poly& a, const Poly& b);

/// a = q*b + r with deg r < deg b. Throws DomainError when b is zero.
DivMod poly_divmod(const Poly& a, const Poly& b);

/// Remainder of a modulo b.
Poly poly_rem(const Poly& a, const Poly& b);

/// a / b when b divides a. Throws InvariantViolation tagged with `stage`
/// if the remainder is nonzero.
Poly exact_div(const Poly& a, const Poly& b, const char* stage);

/// Monic gcd. Throws DomainError for gcd(0, 0).
Poly poly_gcd(const Poly& a, const Poly& b);

/// p(t^k). Throws DomainError for k = 0.
Poly substitute_power(const Poly& p, std::size_t k);

/// 1 + t + ... + t^(k-1). Throws DomainError for k = 0.
Poly geometric_sum(std::size_t k);

Poly pow(const Poly& p, unsigned e);

/// True when a and b differ by a nonzero constant factor.
bool associates(const Poly& a, const Poly& b);

/// Human-readable form such as "1 + 22*t + t^2".
std::string to_string(const Poly& p);

/// Quotient num/den. A value is either normalized (gcd(num, den) = 1, den
/// monic) or carries a caller-chosen display denominator that arithmetic
/// leaves untouched until normalized() is requested.
class RationalFn {
public:
    RationalFn() : num_(), den_(Poly{1}) {}
    /// Polynomial p/1.
    RationalFn(Poly p);  // NOLINT(google-explicit-constructor)

    /// Normalized num/den. Throws DomainError when den is zero.
    static RationalFn normalized(Poly num, Poly den);
    /// num/den kept exactly as given. Throws DomainError when den is zero.
    static RationalFn unreduced(Poly num, Poly den);

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }

    RationalFn normalized() const;
    bool is_normalized() const;
    /// True when the reduced denominator is constant.
    bool is_polynomial() const;

    friend bool operator==(const RationalFn&, const RationalFn&) = default;

private:
    RationalFn(Poly num, Poly den, int) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;
};

/// Normalized sum.
RationalFn ratfn_add(const RationalFn& a, const RationalFn& b);
/// Normalized product.
RationalFn ratfn_mul(const RationalFn& a, const RationalFn& b);

/// First `len` coefficients of the power series of num/den about t = 0.
/// Throws DomainError when den(0) = 0.
std::vector<Rational> series_expand(const Poly& num, const Poly& den, std::size_t len);

}  // namespace crepant

#include "crepant/powerseries.hpp"

#include "crepant/errors.hpp"

#include <algorithm>
#include <string>

namespace crepant {

TruncSeries TruncSeries::one(std::size_t order) {
    std::vector<Poly> c(order + 1);
    c[0] = Poly{1};
    return TruncSeries(std::move(c));
}

TruncSeries::TruncSeries(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("a truncated series needs at least the q^0 coefficient");
}

const Poly& TruncSeries::operator[](std::size_t m) const {
    if (m >= coeffs_.size()) {
        throw DomainError("coefficient of q^" + std::to_string(m) + " is beyond truncation order " +
                          std::to_string(order()));
    }
    return coeffs_[m];
}

TruncSeries TruncSeries::truncated(std::size_t order) const {
    if (order >= this->order()) return *this;
    return TruncSeries(std::vector<Poly>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<Poly> out(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return TruncSeries(std::move(out));
}

namespace {

// Coefficient of x^j in (1 - x)^e, i.e. (-1)^j C(e, j). For e = -m < 0 this is
// C(m - 1 + j, j) with no sign.
Integer binomial_series_coeff(long e, std::size_t j) {
    Integer c;
    if (e < 0) {
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(-e - 1) + j, j);
        return c;
    }
    if (j > static_cast<std::size_t>(e)) return 0;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(e), j);
    return (j % 2 == 0) ? c : Integer(-c);
}

}  // namespace

TruncSeries factor_power(const ProductFactor& f, std::size_t order) {
    if (f.q_exponent == 0) throw DomainError("product factor must carry a positive power of q");
    std::vector<Poly> out(order + 1);
    out[0] = Poly{1};
    for (std::size_t j = 1; j * f.q_exponent <= order; ++j) {
        Integer c = binomial_series_coeff(f.outer_exponent, j);
        if (c == 0) break;
        out[j * f.q_exponent] = Poly::monomial(Rational(c), j * f.t_exponent);
    }
    return TruncSeries(std::move(out));
}

TruncSeries euler_product(std::span<const ProductFactor> factors, std::size_t order) {
    for (const auto& f : factors) {
        if (f.q_exponent == 0) throw DomainError("product factor must carry a positive power of q");
    }
    TruncSeries acc = TruncSeries::one(order);
    for (const auto& f : factors) {
        if (f.q_exponent > order || f.outer_exponent == 0) continue;
        acc = series_mul(acc, factor_power(f, order));
    }
    return acc;
}

}  // namespace crepant

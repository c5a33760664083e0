#pragma once

/**
 * @file powerseries.hpp
 * @brief Power series in a bookkeeping variable q, truncated at a fixed
 * order, with polynomial coefficients in t.
 */

#include "crepant/polyring.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace crepant {

/// Coefficients of q^0 .. q^order. Anything past the order is unknown, so
/// reading it is an error rather than an implicit zero.
class TruncSeries {
public:
    /// The constant series 1 to the given order.
    static TruncSeries one(std::size_t order);
    /// Throws DomainError if coeffs is empty.
    explicit TruncSeries(std::vector<Poly> coeffs);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    /// Coefficient of q^m. Throws DomainError when m > order().
    const Poly& operator[](std::size_t m) const;
    std::span<const Poly> coeffs() const noexcept { return coeffs_; }

    TruncSeries truncated(std::size_t order) const;

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

private:
    std::vector<Poly> coeffs_;
};

/// Result order is min(a.order(), b.order()).
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

/// The factor (1 - t^t_exponent * q^q_exponent)^outer_exponent.
struct ProductFactor {
    std::size_t t_exponent = 0;
    std::size_t q_exponent = 1;
    long outer_exponent = 0;
};

/// Binomial expansion of one factor up to q^order.
TruncSeries factor_power(const ProductFactor& f, std::size_t order);

/// Product of all factors up to q^order. Factors whose q exponent exceeds the
/// order are identity to this order and are skipped. Throws DomainError for a
/// factor with q_exponent = 0.
TruncSeries euler_product(std::span<const ProductFactor> factors, std::size_t order);

}  // namespace crepant

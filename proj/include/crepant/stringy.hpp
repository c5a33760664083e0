#pragma once

/**
 * @file stringy.hpp
 * @brief Batyrev's stringy E-function assembled from a normal-crossing
 * stratification, and its specialization to M(2,0,2n).
 *
 * For divisors D_j with discrepancies a_j, the stringy E-function on the
 * diagonal is
 *
 *     E_st = sum_J E(D_J^0) prod_{j in J} (t - 1) / (t^(a_j + 1) - 1)
 *
 * where J runs over subsets of the divisors (J empty is the complement of the
 * exceptional locus).
 */

#include "crepant/k3moduli.hpp"
#include "crepant/polyring.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace crepant {

struct DivisorInfo {
    std::string name;
    Rational discrepancy;

    friend bool operator==(const DivisorInfo&, const DivisorInfo&) = default;
};

/// E-polynomial of one open stratum; `subset` holds 0-based indices into the
/// divisor list.
struct Stratum {
    std::vector<std::size_t> subset;
    Poly poly;

    friend bool operator==(const Stratum&, const Stratum&) = default;
};

struct StratificationSpec {
    std::vector<DivisorInfo> divisors;
    /// Entries sharing a subset are summed.
    std::vector<Stratum> strata;

    friend bool operator==(const StratificationSpec&, const StratificationSpec&) = default;
};

/// Coefficients of t^0 .. t^order of an expanded series.
struct SeriesWindow {
    std::size_t order = 0;
    std::vector<Integer> coeffs;
};

/// Normalized stringy E-function of `spec`.
///
/// Throws SchemaError for a subset index outside the divisor list and
/// DomainError when some a_j <= -1 (not log-terminal) or a_j + 1 is not an
/// integer (fractional powers of t are not supported).
RationalFn stringy_E(const StratificationSpec& spec);

/// Divisors D1, D2, D3 with discrepancies 6n-7, 2n-4, 4n-6 and the seven
/// nonempty open strata. The stable locus M^s is left out because its
/// E-polynomial is unknown.
StratificationSpec build_moduli_spec(int n);

/// Weight exponents a_j + 1 for D1, D2, D3.
struct ModuliExponents {
    long d1;
    long d2;
    long d3;
};
ModuliExponents moduli_weight_exponents(int n);

/// (1 - t^(2n-3)) (1 - t^(4n-5)) (1 - t^(6n-6)).
Poly moduli_display_denominator(int n);

/// S = E_st(M_2n) - E(M^s_2n) over the display denominator, numerator
/// unreduced. Throws InvariantViolation if the numerator is not integral.
RationalFn S_rational(int n);

/// Power series of S_rational(n) through t^order. Throws InvariantViolation
/// if a coefficient is not an integer.
SeriesWindow S_series(int n, std::size_t order);

}  // namespace crepant

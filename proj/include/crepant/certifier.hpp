#pragma once

/**
 * @file certifier.hpp
 * @brief Exact witnesses for (non-)polynomiality of S = E_st(M_2n) - E(M^s_2n).
 *
 * The verdict always comes from dividing the numerator n(t) by the display
 * denominator. For n >= 4 the cyclotomic argument runs alongside: reduce
 * n(t) modulo 1 - t^(2n-3), factor the result as s̄(t) p(X^[n]; t), locate
 * the common roots of s̄ and 1 - t^(2n-3), and show that p is not divisible
 * by what is left. For n = 3 the series is scanned past the degree a
 * polynomial S could have.
 */

#include "crepant/polyring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crepant {

enum class Verdict { NotPolynomial, Polynomial };
enum class CaseTag { NDivisibleBy3, NNotDivisibleBy3, SeriesDegreeArgument };

std::string to_string(Verdict v);
std::string to_string(CaseTag c);
/// Inverses of to_string; throw DomainError on unknown names.
Verdict verdict_from_string(const std::string& s);
CaseTag case_tag_from_string(const std::string& s);

struct CaseAnalysis {
    int n = 0;
    bool three_divides_n = false;
    /// 1 - t or 1 - t^3, written as in the argument (leading coefficient -1).
    Poly expected_gcd;

    friend bool operator==(const CaseAnalysis&, const CaseAnalysis&) = default;
};

struct DirectDivision {
    bool is_poly = false;
    Poly remainder;
};

/// One equation of the coefficient criterion that fails: lhs != rhs.
struct CriterionWitness {
    std::string lhs_label;
    Integer lhs;
    std::string rhs_label;
    Integer rhs;

    friend bool operator==(const CriterionWitness&, const CriterionWitness&) = default;
};

struct PoincareDivisibility {
    bool divisible = false;
    /// geometric_sum(2n-3) when 3 does not divide n, (1 - t^(2n-3))/(1 - t^3) otherwise.
    Poly divisor;
    /// p mod divisor by long division.
    Poly generic_remainder;
    /// The coefficient-folded form of p that the criterion inspects:
    /// p mod (1 - t^(2n-3)) in the first case, R(t) in the second.
    Poly folded;
    std::optional<CriterionWitness> witness;

    friend bool operator==(const PoincareDivisibility&, const PoincareDivisibility&) = default;
};

struct ModularWitness {
    Poly reduced_numerator;
    Poly bar_s;
    PoincareDivisibility poincare;

    friend bool operator==(const ModularWitness&, const ModularWitness&) = default;
};

struct SeriesArgument {
    /// Largest t-degree S could have if it were a polynomial.
    long degree_bound = 0;
    /// Coefficients past the bound were scanned through this exponent; the
    /// window is long enough for the scan to decide polynomiality.
    long scanned_through = 0;
    /// First exponent past the bound with a nonzero coefficient, if any.
    std::optional<long> witness_exponent;
    /// Coefficient of t^(degree_bound + 1).
    Integer first_coeff_past_bound;

    friend bool operator==(const SeriesArgument&, const SeriesArgument&) = default;
};

struct TableRow {
    Integer c1, c2, c3, c4;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct Certificate {
    int n = 0;
    Verdict verdict = Verdict::Polynomial;
    CaseTag case_tag = CaseTag::SeriesDegreeArgument;
    Poly direct_remainder;
    /// gcd(1 - t^(2n-3), s̄) for n >= 4; gcd(n(t), denominator) for n = 3.
    Poly gcd_witness;
    std::optional<ModularWitness> modular;
    std::optional<SeriesArgument> series;
    TableRow table_row;
    /// Coefficients of t^0 .. t^(degree_bound + 1), n = 3 only.
    std::vector<Integer> series_head;
    std::string soundness;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Integral numerator of S over (1 - t^(2n-3))(1 - t^(4n-5))(1 - t^(6n-6)).
Poly numerator_n_of_t(int n);

DirectDivision direct_division_test(const RationalFn& s);
DirectDivision direct_division_test(int n);

/// s̄(t): the bracket multiplying p(X^[n]; t) in n(t) mod 1 - t^(2n-3),
/// assembled from the raw (1 - t^k) factors. Requires n >= 4.
Poly bar_s(int n);

/// (s̄(t)(1 + t) - (1 - t)(1 - t^3)^2) mod geometric_sum(2n-3). Zero exactly
/// when s̄ takes the predicted value at every root of 1 - t^(2n-3) other than 1.
Poly bar_s_root_identity_remainder(int n);

/// n(t) mod 1 - t^(2n-3), checked against s̄(t) p(t) mod 1 - t^(2n-3).
/// Throws InvariantViolation when the two disagree. Requires n >= 4.
Poly reduce_numerator_mod_cyclic(int n);

struct GcdResult {
    CaseAnalysis analysis;
    Poly gcd;
};
/// gcd(1 - t^(2n-3), s̄); throws InvariantViolation when it is not the
/// expected factor. Requires n >= 4.
GcdResult gcd_case(int n);

/// Divisibility of p(X^[n]; t) by the factor left over from gcd_case, by long
/// division and by the coefficient criterion. Throws InvariantViolation if
/// the two disagree. Requires n >= 4.
PoincareDivisibility poincare_divisibility(int n);

/// Coefficient criterion for divisibility by geometric_sum(k) of a polynomial
/// of degree < 2k: fold modulo 1 - t^k and test that all k folded
/// coefficients are equal.
bool geometric_sum_divides_by_folding(const Poly& p, std::size_t k);

/// Largest degree a polynomial S could have: max over J of
/// dim D_J - sum_{j in J} a_j. Throws InvariantViolation if some stratum
/// polynomial exceeds its dimension.
long polynomial_degree_bound(int n);

TableRow table_row(int n);

Certificate certify(int n);

}  // namespace crepant

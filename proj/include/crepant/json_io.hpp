#pragma once

/**
 * @file json_io.hpp
 * @brief JSON forms of polynomials, stratification specs and certificates.
 *
 * Numbers that may exceed 64 bits are written as decimal strings ("12",
 * "-3/4"); a polynomial is the array of its coefficients from t^0 upward.
 * Objects keep insertion order so output is byte-stable.
 */

#include "crepant/certifier.hpp"
#include "crepant/polyring.hpp"
#include "crepant/stringy.hpp"

#include "json.hpp"

#include <string>

namespace crepant {

using Json = nlohmann::ordered_json;

Json poly_to_json(const Poly& p);
/// Throws SchemaError at `pointer` when `j` is not an array of rational strings.
Poly poly_from_json(const Json& j, const std::string& pointer);

Json integer_to_json(const Integer& z);
Integer integer_from_json(const Json& j, const std::string& pointer);

Json spec_to_json(const StratificationSpec& spec);
/// Validates against
///   {"divisors": [{"name": str, "discrepancy": "p/q"}],
///    "strata": [{"subset": [index, ...], "poly": ["c0", "c1", ...]}]}
/// Subset indices are 0-based. Throws SchemaError with a JSON pointer to the
/// first offending field; index range is checked later by stringy_E.
StratificationSpec spec_from_json(const Json& j);

Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

}  // namespace crepant

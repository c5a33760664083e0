#include "crepant/json_io.hpp"

#include "crepant/errors.hpp"

namespace crepant {

namespace {

const Json& require(const Json& obj, const char* key, const std::string& pointer) {
    if (!obj.is_object()) throw SchemaError(pointer, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(pointer + "/" + key, "missing required field");
    return *it;
}

const Json& require_array(const Json& obj, const char* key, const std::string& pointer) {
    const Json& v = require(obj, key, pointer);
    if (!v.is_array()) throw SchemaError(pointer + "/" + key, "expected an array");
    return v;
}

std::string require_string(const Json& obj, const char* key, const std::string& pointer) {
    const Json& v = require(obj, key, pointer);
    if (!v.is_string()) throw SchemaError(pointer + "/" + key, "expected a string");
    return v.get<std::string>();
}

bool require_bool(const Json& obj, const char* key, const std::string& pointer) {
    const Json& v = require(obj, key, pointer);
    if (!v.is_boolean()) throw SchemaError(pointer + "/" + key, "expected a boolean");
    return v.get<bool>();
}

long require_long(const Json& obj, const char* key, const std::string& pointer) {
    const Json& v = require(obj, key, pointer);
    if (!v.is_number_integer()) throw SchemaError(pointer + "/" + key, "expected an integer");
    return v.get<long>();
}

Rational rational_from_json(const Json& j, const std::string& pointer) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw SchemaError(pointer, "expected a rational such as \"3\" or \"-1/2\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const DomainError& e) {
        throw SchemaError(pointer, e.what());
    }
}

Json integers_to_json(const std::vector<Integer>& v) {
    Json out = Json::array();
    for (const auto& z : v) out.push_back(integer_to_json(z));
    return out;
}

Json witness_to_json(const CriterionWitness& w) {
    return Json{{"lhs_label", w.lhs_label},
                {"lhs", integer_to_json(w.lhs)},
                {"rhs_label", w.rhs_label},
                {"rhs", integer_to_json(w.rhs)}};
}

CriterionWitness witness_from_json(const Json& j, const std::string& ptr) {
    return {require_string(j, "lhs_label", ptr), integer_from_json(require(j, "lhs", ptr), ptr + "/lhs"),
            require_string(j, "rhs_label", ptr), integer_from_json(require(j, "rhs", ptr), ptr + "/rhs")};
}

}  // namespace

Json poly_to_json(const Poly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

Poly poly_from_json(const Json& j, const std::string& pointer) {
    if (!j.is_array()) throw SchemaError(pointer, "expected an array of coefficients");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        coeffs.push_back(rational_from_json(j[i], pointer + "/" + std::to_string(i)));
    }
    return Poly(std::move(coeffs));
}

Json integer_to_json(const Integer& z) { return z.get_str(); }

Integer integer_from_json(const Json& j, const std::string& pointer) {
    const Rational r = rational_from_json(j, pointer);
    if (r.get_den() != 1) throw SchemaError(pointer, "expected an integer");
    return r.get_num();
}

Json spec_to_json(const StratificationSpec& spec) {
    Json divisors = Json::array();
    for (const auto& d : spec.divisors) {
        divisors.push_back(Json{{"name", d.name}, {"discrepancy", to_string(d.discrepancy)}});
    }
    Json strata = Json::array();
    for (const auto& s : spec.strata) {
        strata.push_back(Json{{"subset", s.subset}, {"poly", poly_to_json(s.poly)}});
    }
    return Json{{"divisors", std::move(divisors)}, {"strata", std::move(strata)}};
}

StratificationSpec spec_from_json(const Json& j) {
    if (!j.is_object()) throw SchemaError("", "top level must be an object");
    StratificationSpec spec;
    const Json& divisors = require_array(j, "divisors", "");
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        const std::string ptr = "/divisors/" + std::to_string(i);
        DivisorInfo d;
        d.name = require_string(divisors[i], "name", ptr);
        d.discrepancy = rational_from_json(require(divisors[i], "discrepancy", ptr), ptr + "/discrepancy");
        spec.divisors.push_back(std::move(d));
    }
    const Json& strata = require_array(j, "strata", "");
    for (std::size_t i = 0; i < strata.size(); ++i) {
        const std::string ptr = "/strata/" + std::to_string(i);
        Stratum s;
        const Json& subset = require_array(strata[i], "subset", ptr);
        for (std::size_t k = 0; k < subset.size(); ++k) {
            if (!subset[k].is_number_unsigned()) {
                throw SchemaError(ptr + "/subset/" + std::to_string(k), "expected a nonnegative integer index");
            }
            s.subset.push_back(subset[k].get<std::size_t>());
        }
        s.poly = poly_from_json(require(strata[i], "poly", ptr), ptr + "/poly");
        spec.strata.push_back(std::move(s));
    }
    return spec;
}

Json certificate_to_json(const Certificate& cert) {
    Json j;
    j["n"] = cert.n;
    j["verdict"] = to_string(cert.verdict);
    j["case"] = to_string(cert.case_tag);
    j["direct_remainder"] = poly_to_json(cert.direct_remainder);
    j["gcd"] = poly_to_json(cert.gcd_witness);
    j["table_row"] = Json{{"c1", integer_to_json(cert.table_row.c1)},
                          {"c2", integer_to_json(cert.table_row.c2)},
                          {"c3", integer_to_json(cert.table_row.c3)},
                          {"c4", integer_to_json(cert.table_row.c4)}};
    if (!cert.series_head.empty()) j["series_head"] = integers_to_json(cert.series_head);
    if (cert.series) {
        const auto& s = *cert.series;
        Json arg{{"degree_bound", s.degree_bound},
                 {"scanned_through", s.scanned_through},
                 {"first_coeff_past_bound", integer_to_json(s.first_coeff_past_bound)}};
        arg["witness_exponent"] = s.witness_exponent ? Json(*s.witness_exponent) : Json(nullptr);
        j["series_argument"] = std::move(arg);
    }
    if (cert.modular) {
        const auto& m = *cert.modular;
        Json pd{{"divisible", m.poincare.divisible},
                {"divisor", poly_to_json(m.poincare.divisor)},
                {"generic_remainder", poly_to_json(m.poincare.generic_remainder)},
                {"folded", poly_to_json(m.poincare.folded)}};
        pd["witness"] = m.poincare.witness ? witness_to_json(*m.poincare.witness) : Json(nullptr);
        j["modular"] = Json{{"reduced_numerator", poly_to_json(m.reduced_numerator)},
                            {"bar_s", poly_to_json(m.bar_s)},
                            {"poincare", std::move(pd)}};
    }
    j["soundness"] = cert.soundness;
    return j;
}

Certificate certificate_from_json(const Json& j) {
    if (!j.is_object()) throw SchemaError("", "certificate must be an object");
    Certificate cert;
    cert.n = static_cast<int>(require_long(j, "n", ""));
    try {
        cert.verdict = verdict_from_string(require_string(j, "verdict", ""));
    } catch (const DomainError& e) {
        throw SchemaError("/verdict", e.what());
    }
    try {
        cert.case_tag = case_tag_from_string(require_string(j, "case", ""));
    } catch (const DomainError& e) {
        throw SchemaError("/case", e.what());
    }
    cert.direct_remainder = poly_from_json(require(j, "direct_remainder", ""), "/direct_remainder");
    cert.gcd_witness = poly_from_json(require(j, "gcd", ""), "/gcd");
    const Json& row = require(j, "table_row", "");
    cert.table_row = {integer_from_json(require(row, "c1", "/table_row"), "/table_row/c1"),
                      integer_from_json(require(row, "c2", "/table_row"), "/table_row/c2"),
                      integer_from_json(require(row, "c3", "/table_row"), "/table_row/c3"),
                      integer_from_json(require(row, "c4", "/table_row"), "/table_row/c4")};
    if (auto it = j.find("series_head"); it != j.end()) {
        if (!it->is_array()) throw SchemaError("/series_head", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            cert.series_head.push_back(integer_from_json((*it)[i], "/series_head/" + std::to_string(i)));
        }
    }
    if (auto it = j.find("series_argument"); it != j.end()) {
        const std::string ptr = "/series_argument";
        SeriesArgument s;
        s.degree_bound = require_long(*it, "degree_bound", ptr);
        s.scanned_through = require_long(*it, "scanned_through", ptr);
        s.first_coeff_past_bound =
            integer_from_json(require(*it, "first_coeff_past_bound", ptr), ptr + "/first_coeff_past_bound");
        const Json& w = require(*it, "witness_exponent", ptr);
        if (!w.is_null()) s.witness_exponent = require_long(*it, "witness_exponent", ptr);
        cert.series = std::move(s);
    }
    if (auto it = j.find("modular"); it != j.end()) {
        const std::string ptr = "/modular";
        ModularWitness m;
        m.reduced_numerator = poly_from_json(require(*it, "reduced_numerator", ptr), ptr + "/reduced_numerator");
        m.bar_s = poly_from_json(require(*it, "bar_s", ptr), ptr + "/bar_s");
        const std::string pp = ptr + "/poincare";
        const Json& pd = require(*it, "poincare", ptr);
        m.poincare.divisible = require_bool(pd, "divisible", pp);
        m.poincare.divisor = poly_from_json(require(pd, "divisor", pp), pp + "/divisor");
        m.poincare.generic_remainder = poly_from_json(require(pd, "generic_remainder", pp), pp + "/generic_remainder");
        m.poincare.folded = poly_from_json(require(pd, "folded", pp), pp + "/folded");
        const Json& w = require(pd, "witness", pp);
        if (!w.is_null()) m.poincare.witness = witness_from_json(w, pp + "/witness");
        cert.modular = std::move(m);
    }
    cert.soundness = require_string(j, "soundness", "");
    return cert;
}

}  // namespace crepant

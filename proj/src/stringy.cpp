#include "crepant/stringy.hpp"

#include "crepant/errors.hpp"

#include <algorithm>
#include <array>

namespace crepant {

namespace {

std::vector<std::size_t> weight_exponents(const std::vector<DivisorInfo>& divisors) {
    std::vector<std::size_t> out;
    out.reserve(divisors.size());
    for (const auto& d : divisors) {
        if (d.discrepancy <= -1) {
            throw DomainError("divisor " + d.name + " has discrepancy " + to_string(d.discrepancy) +
                              " <= -1: not log-terminal");
        }
        const Rational shifted = d.discrepancy + 1;
        if (shifted.get_den() != 1) {
            throw DomainError("divisor " + d.name + " has discrepancy " + to_string(d.discrepancy) +
                              ": non-integer weight exponents are unsupported");
        }
        out.push_back(shifted.get_num().get_ui());
    }
    return out;
}

}  // namespace

RationalFn stringy_E(const StratificationSpec& spec) {
    const auto exps = weight_exponents(spec.divisors);
    // (t - 1) / (t^m - 1) = 1 / (1 + t + ... + t^(m-1)); put everything over
    // the product of those sums and reduce once at the end.
    std::vector<Poly> weight_den;
    weight_den.reserve(exps.size());
    Poly common{1};
    for (std::size_t m : exps) {
        weight_den.push_back(geometric_sum(m));
        common = common * weight_den.back();
    }

    Poly num;
    for (std::size_t s = 0; s < spec.strata.size(); ++s) {
        const auto& stratum = spec.strata[s];
        std::vector<bool> in_subset(exps.size(), false);
        for (std::size_t idx : stratum.subset) {
            if (idx >= exps.size()) {
                throw SchemaError("/strata/" + std::to_string(s) + "/subset",
                                  "divisor index " + std::to_string(idx) + " is not declared");
            }
            in_subset[idx] = true;
        }
        Poly term = stratum.poly;
        for (std::size_t j = 0; j < exps.size(); ++j) {
            if (!in_subset[j]) term = term * weight_den[j];
        }
        num += term;
    }
    return RationalFn::normalized(std::move(num), std::move(common));
}

ModuliExponents moduli_weight_exponents(int n) {
    require_moduli_range(n);
    return {6L * n - 6, 2L * n - 3, 4L * n - 5};
}

StratificationSpec build_moduli_spec(int n) {
    const auto e = moduli_weight_exponents(n);
    StratificationSpec spec;
    spec.divisors = {{"D1", Rational(e.d1 - 1)}, {"D2", Rational(e.d2 - 1)}, {"D3", Rational(e.d3 - 1)}};
    for (auto& [key, poly] : open_strata_E(n)) {
        Stratum s;
        for (int label : key.labels()) s.subset.push_back(static_cast<std::size_t>(label - 1));
        s.poly = poly;
        spec.strata.push_back(std::move(s));
    }
    return spec;
}

Poly moduli_display_denominator(int n) {
    const auto e = moduli_weight_exponents(n);
    return Poly::one_minus_power(e.d2) * Poly::one_minus_power(e.d3) * Poly::one_minus_power(e.d1);
}

RationalFn S_rational(int n) {
    const auto e = moduli_weight_exponents(n);
    const StrataTable strata = open_strata_E(n);
    const Poly one_minus_t{1, -1};
    // Over the full denominator, the stratum D_J^0 picks up (1 - t) for every
    // divisor in J and 1 - t^(a_j+1) for every divisor outside it.
    const std::array<Poly, 3> outside{Poly::one_minus_power(e.d1), Poly::one_minus_power(e.d2),
                                      Poly::one_minus_power(e.d3)};
    Poly num;
    for (const auto& [key, poly] : strata) {
        Poly term = poly;
        for (int label = 1; label <= 3; ++label) {
            term = term * (key.contains(label) ? one_minus_t : outside[label - 1]);
        }
        num += term;
    }
    check_invariant(num.is_integral(), "S_rational", "numerator has a fractional coefficient");
    return RationalFn::unreduced(std::move(num), moduli_display_denominator(n));
}

SeriesWindow S_series(int n, std::size_t order) {
    const RationalFn s = S_rational(n);
    const auto raw = series_expand(s.num(), s.den(), order + 1);
    SeriesWindow w;
    w.order = order;
    w.coeffs.reserve(raw.size());
    for (std::size_t m = 0; m < raw.size(); ++m) {
        check_invariant(raw[m].get_den() == 1, "S_series",
                        "coefficient of t^" + std::to_string(m) + " is " + to_string(raw[m]));
        w.coeffs.push_back(raw[m].get_num());
    }
    return w;
}

}  // namespace crepant

#include "crepant/k3moduli.hpp"

#include "crepant/errors.hpp"

#include <bit>
#include <mutex>

namespace crepant {

void require_moduli_range(int n) {
    if (n < 3) {
        throw DomainError("n = " + std::to_string(n) +
                          " is out of range: the stratum formulas for M(2,0,2n) need n >= 3");
    }
}

std::vector<ProductFactor> goettsche_factors(std::size_t max_k) {
    std::vector<ProductFactor> out;
    for (std::size_t k = 1; k <= max_k; ++k) {
        for (std::size_t i = 0; i < kK3Betti.size(); ++i) {
            if (kK3Betti[i] == 0) continue;
            const long sign = (i % 2 == 1) ? 1 : -1;
            out.push_back({2 * k - 2 + i, k, sign * kK3Betti[i]});
        }
    }
    return out;
}

namespace {

std::mutex hilb_mutex;
std::map<int, Poly> hilb_memo;

// Expands the product once to order n and records every coefficient up to
// q^n, reindexed from z to t.
void fill_hilb_memo(int n) {
    const auto order = static_cast<std::size_t>(n);
    TruncSeries series = euler_product(goettsche_factors(order), order);
    std::map<int, Poly> fresh;
    for (std::size_t m = 0; m <= order; ++m) {
        const Poly& in_z = series[m];
        std::vector<Rational> in_t((in_z.size() + 1) / 2);
        for (std::size_t i = 0; i < in_z.size(); ++i) {
            if (i % 2 == 1) {
                check_invariant(in_z.coeffs()[i] == 0, "hilb_poincare",
                                "odd power z^" + std::to_string(i) + " in P(X^[" + std::to_string(m) + "])");
            } else {
                in_t[i / 2] = in_z.coeffs()[i];
            }
        }
        fresh.emplace(static_cast<int>(m), Poly(std::move(in_t)));
    }
    std::lock_guard lock(hilb_mutex);
    hilb_memo.merge(fresh);
}

}  // namespace

Poly hilb_poincare(int n) {
    if (n < 0) throw DomainError("hilb_poincare requires n >= 0");
    {
        std::lock_guard lock(hilb_mutex);
        if (auto it = hilb_memo.find(n); it != hilb_memo.end()) return it->second;
    }
    fill_hilb_memo(n);
    std::lock_guard lock(hilb_mutex);
    return hilb_memo.at(n);
}

Integer euler_char_hilb(int n) {
    Rational chi = hilb_poincare(n).evaluate(1);
    return chi.get_num();
}

Poly isotropic_grass_E(int k, int n) {
    if (k < 1 || k > n) {
        throw DomainError("isotropic Grassmannian Gr(" + std::to_string(k) + ", " + std::to_string(2 * n) +
                          ") needs 1 <= k <= n");
    }
    // Gr(1, 2n) = P^{2n-1}; the incidence correspondence between Gr(j-1) and
    // Gr(j) gives E(Gr(j)) = E(P^{2n-2j+1}) E(Gr(j-1)) / E(P^{j-1}).
    Poly acc = geometric_sum(static_cast<std::size_t>(2 * n));
    for (int j = 2; j <= k; ++j) {
        acc = exact_div(acc * geometric_sum(static_cast<std::size_t>(2 * n - 2 * j + 2)),
                        geometric_sum(static_cast<std::size_t>(j)), "isotropic_grass_E");
    }
    return acc;
}

Poly proj_space_E(int m) {
    if (m < 0) throw DomainError("P^m needs m >= 0");
    return geometric_sum(static_cast<std::size_t>(m) + 1);
}

Poly incidence_P(int n) {
    require_moduli_range(n);
    return geometric_sum(static_cast<std::size_t>(2 * n - 2)) * geometric_sum(static_cast<std::size_t>(2 * n - 3));
}

Poly incidence_Pplus(int n) { return exact_div(incidence_P(n), Poly{1, 1}, "incidence_Pplus"); }

MacdonaldSplit macdonald_split(const Poly& p) {
    const Poly square = p * p;
    const Poly doubled = substitute_power(p, 2);
    const Rational half(1, 2);
    return {(square + doubled) * half, (square - doubled) * half};
}

// ---------------------------------------------------------------------------
// DivisorSubset

DivisorSubset::DivisorSubset(std::initializer_list<int> labels) {
    for (int j : labels) bits_ |= 1U << (j - 1);
}

int DivisorSubset::size() const noexcept { return std::popcount(bits_); }

std::vector<int> DivisorSubset::labels() const {
    std::vector<int> out;
    for (int j = 1; j <= 32; ++j) {
        if (contains(j)) out.push_back(j);
    }
    return out;
}

std::string DivisorSubset::name() const {
    if (bits_ == 0) return "M^s";
    std::string s = "D";
    for (int j : labels()) s += std::to_string(j);
    return s;
}

// ---------------------------------------------------------------------------
// Strata

StrataTable closed_strata_E(int n) {
    require_moduli_range(n);
    const Poly p = hilb_poincare(n);
    const Poly gr2 = isotropic_grass_E(2, n);
    const Poly gr3 = isotropic_grass_E(3, n);
    const Poly p1 = proj_space_E(1);
    const Poly p2 = proj_space_E(2);
    // Blow-up of P^5 along the Veronese P^2.
    const Poly blown_up_p5 = proj_space_E(5) - p2 + p2 * p2;

    StrataTable out;
    out[{1}] = blown_up_p5 * gr3 * p;
    out[{3}] = proj_space_E(2 * n - 4) * p2 * gr2 * p;
    out[{1, 2}] = p2 * p2 * gr3 * p;
    out[{2, 3}] = proj_space_E(2 * n - 4) * p1 * gr2 * p;
    out[{1, 3}] = p2 * proj_space_E(2 * n - 5) * gr2 * p;
    out[{1, 2, 3}] = p1 * proj_space_E(2 * n - 5) * gr2 * p;

    for (const auto& [key, poly] : out) {
        check_invariant(poly.degree() == 8L * n - 6 - key.size(), "closed_strata_E",
                        key.name() + " has degree " + std::to_string(poly.degree()));
        check_invariant(poly.is_integral() && poly.has_nonnegative_coeffs(), "closed_strata_E",
                        key.name() + " has a negative or fractional coefficient");
    }
    return out;
}

Poly E_D2_open(const Poly& p, int n) {
    require_moduli_range(n);
    const Poly p_sq = substitute_power(p, 2);
    Poly e = incidence_P(n) * macdonald_split(p).minus + incidence_Pplus(n) * (p_sq - p);
    check_invariant(e.is_integral(), "E_D2_open", "fractional coefficient in " + to_string(e));
    return e;
}

Poly E_D2_open(int n) { return E_D2_open(hilb_poincare(n), n); }

StrataTable open_strata_E(int n) {
    StrataTable closed = closed_strata_E(n);
    const Poly& d123 = closed.at({1, 2, 3});

    StrataTable out;
    out[{1}] = closed.at({1}) - closed.at({1, 2}) - closed.at({1, 3}) + d123;
    out[{2}] = E_D2_open(n);
    out[{3}] = closed.at({3}) - closed.at({1, 3}) - closed.at({2, 3}) + d123;
    out[{1, 2}] = closed.at({1, 2}) - d123;
    out[{1, 3}] = closed.at({1, 3}) - d123;
    out[{2, 3}] = closed.at({2, 3}) - d123;
    out[{1, 2, 3}] = d123;

    for (const auto& [key, poly] : out) {
        check_invariant(poly.is_integral(), "open_strata_E",
                        "E(" + key.name() + "^0) = " + to_string(poly) + " has a fractional coefficient");
    }
    return out;
}

}  // namespace crepant

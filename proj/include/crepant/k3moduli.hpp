#pragma once

/**
 * @file k3moduli.hpp
 * @brief Closed-form E-polynomials for the exceptional strata of Kirwan's
 * desingularization of M(2,0,2n) on a K3 surface.
 *
 * All polynomials are the diagonal specialization u = v = z written in
 * t = uv = z^2. Inputs below n = 3 are rejected: the stratum formulas do
 * not cover them.
 */

#include "crepant/polyring.hpp"
#include "crepant/powerseries.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace crepant {

/// Betti numbers b_0..b_4 of a K3 surface.
inline constexpr std::array<long, 5> kK3Betti{1, 0, 22, 0, 1};

/// Factors (1 - z^(2k-2+i) q^k)^((-1)^(i+1) b_i) of Goettsche's product for
/// k = 1..max_k. Factors with b_i = 0 are omitted. The polynomial variable
/// here is z, not t.
std::vector<ProductFactor> goettsche_factors(std::size_t max_k);

/// Poincare polynomial of the Hilbert scheme of n points, in t = z^2.
/// Memoized; safe to call from several threads.
Poly hilb_poincare(int n);

/// hilb_poincare(n) at t = 1.
Integer euler_char_hilb(int n);

/// E-polynomial of the isotropic Grassmannian of k-planes in a symplectic
/// 2n-space. Requires 1 <= k <= n.
Poly isotropic_grass_E(int k, int n);

/// E-polynomial of P^m.
Poly proj_space_E(int m);

/// Poincare polynomial of the incidence variety I_{2n-3} in P^{2n-3} x P^{2n-3}.
Poly incidence_P(int n);
/// Its part invariant under swapping the two factors.
Poly incidence_Pplus(int n);

struct MacdonaldSplit {
    Poly plus;
    Poly minus;
};

/// Symmetric / antisymmetric halves (p^2 +- p(t^2)) / 2 of the Poincare
/// polynomial of Y x Y, given p = P(Y).
MacdonaldSplit macdonald_split(const Poly& p);

/// Subset of the exceptional divisors {D1, D2, D3}; bit j-1 marks D_j.
class DivisorSubset {
public:
    constexpr DivisorSubset() = default;
    constexpr explicit DivisorSubset(unsigned bits) : bits_(bits) {}
    /// From 1-based divisor labels, e.g. {1, 3} for D_13.
    DivisorSubset(std::initializer_list<int> labels);

    constexpr unsigned bits() const noexcept { return bits_; }
    constexpr bool contains(int label) const noexcept { return (bits_ >> (label - 1)) & 1U; }
    int size() const noexcept;
    /// "D13" style name; "M^s" for the empty subset.
    std::string name() const;
    /// 1-based labels in ascending order.
    std::vector<int> labels() const;

    friend constexpr auto operator<=>(DivisorSubset, DivisorSubset) = default;

private:
    unsigned bits_ = 0;
};

using StrataTable = std::map<DivisorSubset, Poly>;

/// The six closed strata D1, D3, D12, D23, D13 and D123 (the last one is
/// already open since it is the deepest). D2 is only known as an open stratum.
StrataTable closed_strata_E(int n);

/// E(D_2^0) computed from a given Hilbert-scheme polynomial p.
Poly E_D2_open(const Poly& p, int n);
Poly E_D2_open(int n);

/// All seven nonempty open strata E(D_J^0).
StrataTable open_strata_E(int n);

/// Throws DomainError unless n >= 3.
void require_moduli_range(int n);

}  // namespace crepant

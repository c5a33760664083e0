#include "crepant/polyring.hpp"

#include "crepant/errors.hpp"

#include <algorithm>
#include <sstream>

namespace crepant {

Rational parse_rational(std::string_view text) {
    auto digits = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!digits(num, true) || !digits(den, false)) {
        throw DomainError("malformed rational '" + std::string(text) + "'");
    }
    if (num.front() == '+') num.remove_prefix(1);
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(Rational c) { return Poly(std::vector<Rational>{std::move(c)}); }

Poly Poly::monomial(Rational c, std::size_t exponent) {
    if (c == 0) return {};
    std::vector<Rational> v(exponent + 1);
    v[exponent] = std::move(c);
    return Poly(std::move(v));
}

Poly Poly::one_minus_power(std::size_t k) { return Poly{1} - monomial(1, k); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& Poly::leading() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

bool Poly::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

bool Poly::has_nonnegative_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) >= 0; });
}

bool Poly::is_palindromic() const {
    return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

Rational Poly::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::monic() const {
    if (is_zero() || leading() == 1) return *this;
    Rational inv = 1 / leading();
    return *this * inv;
}

Poly Poly::truncated(std::size_t len) const {
    if (len >= coeffs_.size()) return *this;
    return Poly(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(len)));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Poly operator-(Poly a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    Rational prod;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        const Rational& ai = a.coeffs_[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            prod = ai * b.coeffs_[j];
            out[i + j] += prod;
        }
    }
    return Poly(std::move(out));
}

Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }

DivMod poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};

    const auto bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const Rational inv_lead = 1 / bc[db];
    const bool unit_lead = inv_lead == 1;

    std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<Rational> quo(rem.size() - db);
    Rational q, prod;
    for (std::size_t k = quo.size(); k-- > 0;) {
        const Rational& top = rem[k + db];
        if (top == 0) continue;
        q = unit_lead ? top : Rational(top * inv_lead);
        for (std::size_t j = 0; j < db; ++j) {
            if (bc[j] == 0) continue;
            prod = q * bc[j];
            rem[k + j] -= prod;
        }
        rem[k + db] = 0;
        quo[k] = q;
    }
    rem.resize(db);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly poly_rem(const Poly& a, const Poly& b) { return poly_divmod(a, b).remainder; }

Poly exact_div(const Poly& a, const Poly& b, const char* stage) {
    auto [q, r] = poly_divmod(a, b);
    check_invariant(r.is_zero(), stage, "division by " + to_string(b) + " left remainder " + to_string(r));
    return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
    Poly x = a.monic();
    Poly y = b.monic();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        Poly r = poly_rem(x, y).monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

Poly substitute_power(const Poly& p, std::size_t k) {
    if (k == 0) throw DomainError("substitute_power requires k >= 1");
    if (p.is_zero() || k == 1) return p;
    std::vector<Rational> out((p.size() - 1) * k + 1);
    for (std::size_t i = 0; i < p.size(); ++i) out[i * k] = p.coeffs()[i];
    return Poly(std::move(out));
}

Poly geometric_sum(std::size_t k) {
    if (k == 0) throw DomainError("geometric_sum requires k >= 1");
    return Poly(std::vector<Rational>(k, Rational(1)));
}

Poly pow(const Poly& p, unsigned e) {
    Poly result{1};
    Poly base = p;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

bool associates(const Poly& a, const Poly& b) { return a.monic() == b.monic(); }

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        Rational c = p.coeffs()[i];
        if (c == 0) continue;
        if (!first) {
            os << (sgn(c) < 0 ? " - " : " + ");
            c = abs(c);
        }
        first = false;
        const bool unit = i > 0 && (c == 1 || c == -1);
        if (unit) {
            if (c == -1) os << '-';
        } else {
            os << to_string(c);
            if (i > 0) os << '*';
        }
        if (i == 1) os << 't';
        if (i > 1) os << "t^" << i;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// RationalFn

RationalFn::RationalFn(Poly p) : num_(std::move(p)), den_(Poly{1}) {}

RationalFn RationalFn::normalized(Poly num, Poly den) {
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    if (num.is_zero()) return RationalFn(Poly{}, Poly{1}, 0);
    Poly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = poly_divmod(num, g).quotient;
        den = poly_divmod(den, g).quotient;
    }
    Rational lead = den.leading();
    if (lead != 1) {
        Rational inv = 1 / lead;
        num *= inv;
        den *= inv;
    }
    return RationalFn(std::move(num), std::move(den), 0);
}

RationalFn RationalFn::unreduced(Poly num, Poly den) {
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    return RationalFn(std::move(num), std::move(den), 0);
}

RationalFn RationalFn::normalized() const { return normalized(num_, den_); }

bool RationalFn::is_normalized() const {
    if (den_.leading() != 1) return false;
    if (num_.is_zero()) return den_ == Poly{1};
    return poly_gcd(num_, den_).degree() == 0;
}

bool RationalFn::is_polynomial() const { return poly_rem(num_, den_).is_zero(); }

RationalFn ratfn_add(const RationalFn& a, const RationalFn& b) {
    if (a.den() == b.den()) return RationalFn::normalized(a.num() + b.num(), a.den());
    Poly g = poly_gcd(a.den(), b.den());
    Poly bq = poly_divmod(b.den(), g).quotient;
    Poly aq = poly_divmod(a.den(), g).quotient;
    return RationalFn::normalized(a.num() * bq + b.num() * aq, a.den() * bq);
}

RationalFn ratfn_mul(const RationalFn& a, const RationalFn& b) {
    return RationalFn::normalized(a.num() * b.num(), a.den() * b.den());
}

std::vector<Rational> series_expand(const Poly& num, const Poly& den, std::size_t len) {
    if (den[0] == 0) throw DomainError("series expansion needs a denominator with nonzero constant term");
    const Rational inv0 = 1 / den[0];
    std::vector<Rational> out(len);
    Rational acc, prod;
    for (std::size_t m = 0; m < len; ++m) {
        acc = num[m];
        const std::size_t top = std::min<std::size_t>(m, den.size() - 1);
        for (std::size_t j = 1; j <= top; ++j) {
            const Rational& dj = den.coeffs()[j];
            if (dj == 0) continue;
            prod = dj * out[m - j];
            acc -= prod;
        }
        out[m] = acc * inv0;
    }
    return out;
}

}  // namespace crepant

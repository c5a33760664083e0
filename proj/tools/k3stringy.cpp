// k3stringy: stringy E-functions of M(2,0,2n) on a K3 surface.
//
// Exit codes: 0 success (certify: every n is not_polynomial), 1 certify ran
// cleanly but some n came out polynomial, 2 usage or schema error, 3 domain
// error, 4 internal invariant violated.

#include "crepant/certifier.hpp"
#include "crepant/errors.hpp"
#include "crepant/json_io.hpp"
#include "crepant/k3moduli.hpp"
#include "crepant/stringy.hpp"

#include "CLI11.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace {

using namespace crepant;

constexpr int kExitOk = 0;
constexpr int kExitNotCertified = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitInvariant = 4;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct NRange {
    int lo = 0;
    int hi = 0;
};

NRange parse_range(const std::string& text) {
    NRange r;
    const auto dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
        } else {
            const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
            r.lo = std::stoi(a, &used);
            if (used != a.size()) throw std::invalid_argument(text);
            r.hi = std::stoi(b, &used);
            if (used != b.size()) throw std::invalid_argument(text);
        }
    } catch (const std::logic_error&) {
        throw UsageError("--n expects N or A..B, got '" + text + "'");
    }
    if (r.lo > r.hi) throw UsageError("empty range " + text);
    return r;
}

void require_n_at_least_3(int n) {
    if (n < 3) {
        throw UsageError("n = " + std::to_string(n) +
                         " is not supported: the stratum formulas for M(2,0,2n) require n >= 3");
    }
}

/// Writes to --out when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (path.empty()) return;
        file_.open(path);
        if (!file_) throw UsageError("cannot open '" + path + "' for writing");
    }
    std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

std::string join(const std::vector<Integer>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].get_str();
    return s;
}

// ---------------------------------------------------------------------------
// certify

struct Outcome {
    std::optional<Certificate> cert;
    double millis = 0;
    std::exception_ptr error;
};

std::vector<Outcome> certify_range(NRange r, unsigned jobs) {
    const auto count = static_cast<std::size_t>(r.hi - r.lo + 1);
    std::vector<Outcome> out(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            const auto t0 = std::chrono::steady_clock::now();
            try {
                out[i].cert = certify(r.lo + static_cast<int>(i));
            } catch (...) {
                out[i].error = std::current_exception();
            }
            out[i].millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        }
    };
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

void print_certificate_text(std::ostream& os, const Certificate& c, double millis) {
    os << "n = " << c.n << ": " << to_string(c.verdict) << " [" << to_string(c.case_tag) << "] ("
       << std::fixed;
    os.precision(1);
    os << millis << " ms)\n";
    os << "  c1..c4 = " << c.table_row.c1 << ", " << c.table_row.c2 << ", " << c.table_row.c3 << ", "
       << c.table_row.c4 << "\n";
    if (c.series) {
        const auto& s = *c.series;
        os << "  a polynomial S has degree <= " << 2 * s.degree_bound << " in z\n";
        os << "  coefficient of z^" << 2 * (s.degree_bound + 1) << " = " << s.first_coeff_past_bound << "\n";
        if (s.witness_exponent) {
            os << "  first nonzero coefficient past the bound: z^" << 2 * *s.witness_exponent << "\n";
        } else {
            os << "  no nonzero coefficient past the bound through z^" << 2 * s.scanned_through << "\n";
        }
        os << "  series head (z^0..z^" << 2 * (s.degree_bound + 1) << "): " << join(c.series_head) << "\n";
    }
    if (c.modular) {
        const auto& m = *c.modular;
        os << "  gcd(1 - t^" << 2 * c.n - 3 << ", s_bar) = " << to_string(c.gcd_witness) << "\n";
        os << "  p(X^[" << c.n << "]) " << (m.poincare.divisible ? "is" : "is not") << " divisible by "
           << to_string(m.poincare.divisor) << "\n";
        if (m.poincare.witness) {
            const auto& w = *m.poincare.witness;
            os << "  witness: " << w.lhs_label << " = " << w.lhs;
            if (w.rhs_label == "0") {
                os << ", must be 0\n";
            } else {
                os << " but " << w.rhs_label << " = " << w.rhs << "\n";
            }
        }
    }
    if (c.direct_remainder.is_zero()) {
        os << "  direct division remainder: 0\n";
    } else {
        os << "  direct division remainder: nonzero, degree " << c.direct_remainder.degree() << "\n";
    }
}

int run_certify(const std::string& range_text, const std::string& emit, const std::string& out_path,
                unsigned jobs) {
    const NRange r = parse_range(range_text);
    require_n_at_least_3(r.lo);
    const auto t0 = std::chrono::steady_clock::now();
    const auto outcomes = certify_range(r, jobs);
    const double total = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    // The first failure in ascending n decides the exit code.
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (!outcomes[i].error) continue;
        const int n = r.lo + static_cast<int>(i);
        try {
            std::rethrow_exception(outcomes[i].error);
        } catch (const InvariantViolation& e) {
            std::cerr << "error: n = " << n << ", stage " << e.stage() << ": " << e.what() << "\n";
            return kExitInvariant;
        } catch (const DomainError& e) {
            std::cerr << "error: n = " << n << ": " << e.what() << "\n";
            return kExitDomain;
        }
    }

    Sink sink(out_path);
    std::ostream& os = sink.os();
    bool all = true;
    for (const auto& o : outcomes) all = all && o.cert->verdict == Verdict::NotPolynomial;
    if (emit == "json") {
        Json certs = Json::array();
        for (const auto& o : outcomes) certs.push_back(certificate_to_json(*o.cert));
        os << Json{{"certificates", std::move(certs)}, {"all_not_polynomial", all}}.dump(2) << "\n";
    } else {
        int count = 0;
        for (const auto& o : outcomes) {
            print_certificate_text(os, *o.cert, o.millis);
            count += o.cert->verdict == Verdict::NotPolynomial;
        }
        os << "summary: " << count << " of " << outcomes.size() << " not_polynomial (" << std::fixed;
        os.precision(1);
        os << total << " ms)\n";
    }
    return all ? kExitOk : kExitNotCertified;
}

// ---------------------------------------------------------------------------
// table1, series, hilbert

int run_table1(int max_n, const std::string& emit) {
    if (max_n < 3) throw UsageError("--max-n must be at least 3");
    Json cols = Json::array();
    std::vector<std::pair<std::string, TableRow>> rows;
    for (int n = 3; n <= max_n; ++n) {
        // Beyond n = 8 every c_1..c_4 is stable, so the last column stands for all larger n.
        const std::string label = (n == max_n && n >= 8) ? "n>=" + std::to_string(n) : "n=" + std::to_string(n);
        rows.emplace_back(label, table_row(n));
    }
    if (emit == "json") {
        for (const auto& [label, row] : rows) {
            cols.push_back(Json{{"label", label},
                                {"c1", integer_to_json(row.c1)},
                                {"c2", integer_to_json(row.c2)},
                                {"c3", integer_to_json(row.c3)},
                                {"c4", integer_to_json(row.c4)}});
        }
        std::cout << Json{{"columns", std::move(cols)}}.dump(2) << "\n";
        return kExitOk;
    }
    auto line = [&](const std::string& head, auto cell) {
        std::ostringstream s;
        s.width(4);
        s << std::left << head;
        for (const auto& entry : rows) {
            s.width(8);
            s << std::right << cell(entry);
        }
        std::cout << s.str() << "\n";
    };
    line("", [](const auto& e) { return e.first; });
    line("c1", [](const auto& e) { return e.second.c1.get_str(); });
    line("c2", [](const auto& e) { return e.second.c2.get_str(); });
    line("c3", [](const auto& e) { return e.second.c3.get_str(); });
    line("c4", [](const auto& e) { return e.second.c4.get_str(); });
    return kExitOk;
}

void print_series(std::ostream& os, const std::vector<std::string>& coeffs, const std::string& emit, Json meta) {
    if (emit == "json") {
        meta["coefficients"] = coeffs;
        os << meta.dump(2) << "\n";
        return;
    }
    os << "coefficients of z^0..z^" << 2 * (coeffs.size() - 1) << " (t^0..t^" << coeffs.size() - 1 << "):\n";
    for (std::size_t m = 0; m < coeffs.size(); ++m) os << "  z^" << 2 * m << "  " << coeffs[m] << "\n";
}

int run_series(int n, long order, const std::string& emit) {
    require_n_at_least_3(n);
    if (order < 0) throw UsageError("--order must be >= 0");
    const SeriesWindow w = S_series(n, static_cast<std::size_t>(order));
    std::vector<std::string> coeffs;
    for (const auto& c : w.coeffs) coeffs.push_back(c.get_str());
    print_series(std::cout, coeffs, emit, Json{{"n", n}, {"order", order}});
    return kExitOk;
}

int run_hilbert(int n, const std::string& emit) {
    if (n < 0) throw UsageError("--n must be >= 0");
    const Poly p = hilb_poincare(n);
    const Integer chi = euler_char_hilb(n);
    if (emit == "json") {
        std::cout << Json{{"n", n}, {"poincare", poly_to_json(p)}, {"euler_characteristic", chi.get_str()}}.dump(2)
                  << "\n";
    } else {
        std::cout << "P(X^[" << n << "]; t) = " << to_string(p) << "\n";
        std::cout << "Euler characteristic: " << chi << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// eval-spec, moduli-spec

int run_eval_spec(const std::string& path, long order, const std::string& emit) {
    if (order < -1) throw UsageError("--order must be >= 0");
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw SchemaError("", std::string("invalid JSON: ") + e.what());
    }
    const RationalFn e = stringy_E(spec_from_json(doc));
    const bool poly = e.is_polynomial();
    std::vector<std::string> coeffs;
    if (order >= 0) {
        for (const auto& c : series_expand(e.num(), e.den(), static_cast<std::size_t>(order) + 1)) {
            coeffs.push_back(to_string(c));
        }
    }
    if (emit == "json") {
        Json out{{"numerator", poly_to_json(e.num())},
                 {"denominator", poly_to_json(e.den())},
                 {"verdict", poly ? "polynomial" : "not_polynomial"}};
        if (order >= 0) out["coefficients"] = coeffs;
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "numerator:   " << to_string(e.num()) << "\n";
    std::cout << "denominator: " << to_string(e.den()) << "\n";
    std::cout << "verdict: " << (poly ? "polynomial" : "not_polynomial") << "\n";
    if (order >= 0) print_series(std::cout, coeffs, "text", {});
    return kExitOk;
}

int run_moduli_spec(int n) {
    require_n_at_least_3(n);
    std::cout << spec_to_json(build_moduli_spec(n)).dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stringy E-functions of M(2,0,2n) on a K3 surface, with non-polynomiality certificates"};
    app.require_subcommand(1);

    std::string emit = "text";
    auto add_emit = [&](CLI::App* cmd) {
        cmd->add_option("--emit", emit, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    std::string range = "3..20", out_path;
    unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
    auto* certify_cmd = app.add_subcommand("certify", "Certify that S is not a polynomial for a range of n");
    certify_cmd->add_option("--n", range, "n or inclusive range A..B (default 3..20)");
    certify_cmd->add_option("--out", out_path, "Write the report to this file");
    certify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    add_emit(certify_cmd);

    int max_n = 8;
    auto* table_cmd = app.add_subcommand("table1", "Coefficients c1..c4 of P(X^[n]) for n = 3..max");
    table_cmd->add_option("--max-n", max_n, "Largest n (default 8)");
    add_emit(table_cmd);

    int n = 0;
    long order = 0;
    auto* series_cmd = app.add_subcommand("series", "Power series of S in z");
    series_cmd->add_option("--n", n, "n >= 3")->required();
    series_cmd->add_option("--order", order, "Last t-exponent (z^(2*order))")->required();
    add_emit(series_cmd);

    auto* hilbert_cmd = app.add_subcommand("hilbert", "Poincare polynomial of X^[n]");
    hilbert_cmd->add_option("--n", n, "n >= 0")->required();
    add_emit(hilbert_cmd);

    std::string spec_path;
    long spec_order = -1;
    auto* eval_cmd = app.add_subcommand("eval-spec", "Stringy E-function of a stratification spec (JSON)");
    eval_cmd->add_option("path", spec_path, "Spec file")->required();
    eval_cmd->add_option("--order", spec_order, "Also print the series through t^order");
    add_emit(eval_cmd);

    auto* moduli_cmd = app.add_subcommand("moduli-spec", "Print the stratification spec of M(2,0,2n) as JSON");
    moduli_cmd->add_option("--n", n, "n >= 3")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*certify_cmd) return run_certify(range, emit, out_path, jobs);
        if (*table_cmd) return run_table1(max_n, emit);
        if (*series_cmd) return run_series(n, order, emit);
        if (*hilbert_cmd) return run_hilbert(n, emit);
        if (*eval_cmd) return run_eval_spec(spec_path, spec_order, emit);
        if (*moduli_cmd) return run_moduli_spec(n);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SchemaError& e) {
        std::cerr << "schema error at '" << e.pointer() << "': " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal error in " << e.stage() << ": " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitUsage;
}

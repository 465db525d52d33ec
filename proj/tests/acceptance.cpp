// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout. Criterion 7 drives the CLI binary, whose path is argv[1].

#include "bernsym/bernsym.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace bernsym;

namespace {

std::string g_cli;

struct Criterion {
    int id;
    std::string description;
    long long budget_ms;
    std::function<bool(std::string&)> check;
};

const std::vector<std::array<long, 3>>& weights123() {
    static const std::vector<std::array<long, 3>> g = [] {
        std::vector<std::array<long, 3>> v;
        for (long a = 1; a <= 3; ++a)
            for (long b = 1; b <= 3; ++b)
                for (long c = 1; c <= 3; ++c)
                    v.push_back({a, b, c});
        return v;
    }();
    return g;
}

bool criterion_bernoulli_oracle(std::string& msg) {
    TruncSeries g = gen_bernoulli(24);
    for (unsigned n = 0; n <= 24; ++n) {
        Rational series_val = g.coeff(n) * Rational(factorial(n));
        if (bernoulli_number(n) != series_val) {
            msg = "recurrence and series disagree at n=" + std::to_string(n);
            return false;
        }
    }
    if (g.coeff(1) * Rational(factorial(1)) != Rational(-1, 2)) {
        msg = "series oracle does not produce B_1 = -1/2";
        return false;
    }
    if (g.coeff(12) * Rational(factorial(12)) != Rational(-691, 2730)) {
        msg = "series oracle does not produce B_12 = -691/2730";
        return false;
    }
    return true;
}

bool criterion_power_sum_triple(std::string& msg) {
    for (unsigned k = 0; k <= 20; ++k)
        for (unsigned n = 0; n <= 50; ++n) {
            Rational direct = power_sum(k, n);
            if (direct != power_sum_oracle(k, n)) {
                msg = "direct sum vs closed form at k=" + std::to_string(k) +
                      " n=" + std::to_string(n);
                return false;
            }
            if (!direct.is_integer() || direct.sign() < 0) {
                msg = "value not a nonnegative integer at k=" + std::to_string(k);
                return false;
            }
        }
    for (long w = 1; w <= 6; ++w) {
        TruncSeries s = gen_power_sum(w, 20);
        for (unsigned k = 0; k <= 20; ++k)
            if (s.coeff(k) * Rational(factorial(k)) != power_sum(k, static_cast<unsigned>(w - 1))) {
                msg = "series route differs at w=" + std::to_string(w) +
                      " k=" + std::to_string(k);
                return false;
            }
    }
    return true;
}

bool criterion_identity_grid(std::string& msg) {
    for (FamilyId f : theorem_families())
        for (unsigned n = 0; n <= 10; ++n)
            for (const auto& w : weights123()) {
                auto rep = verify_family(f, n, w);
                if (!rep.pass) {
                    msg = family_name(f) + " failed at n=" + std::to_string(n);
                    return false;
                }
            }
    for (const auto& w : std::vector<std::array<long, 3>>{{2, 3, 5}, {4, 5, 6}})
        for (FamilyId f : theorem_families()) {
            auto rep = verify_family(f, 12, w);
            if (!rep.pass) {
                msg = family_name(f) + " failed spot check at n=12";
                return false;
            }
        }
    return true;
}

bool criterion_corollaries(std::string& msg) {
    for (const auto& pair : specialization_pairs()) {
        int arity = registry::family_spec(pair.target).weight_arity;
        for (unsigned n = 0; n <= 10; ++n)
            for (long a = 1; a <= 3; ++a)
                for (long b = 1; b <= (arity > 1 ? 3 : 1); ++b) {
                    auto r = corollary_specialization_check(pair.source, pair.target, n,
                                                            {a, b, 1});
                    if (!r.pass) {
                        msg = family_name(pair.source) + ">" + family_name(pair.target) +
                              " failed: " + r.detail;
                        return false;
                    }
                }
    }
    for (unsigned n = 0; n <= 10; ++n)
        for (long a = 1; a <= 4; ++a)
            for (long b = 1; b <= 4; ++b)
                if (!verify_intro_chain(n, a, b).pass) {
                    msg = "intro chain failed at n=" + std::to_string(n);
                    return false;
                }
    return true;
}

bool criterion_series_derivations(std::string& msg) {
    const std::vector<Rational> levels{Rational(0), Rational(1, 2)};
    const std::vector<std::string> labels{"24", "27", "28", "30", "32", "33", "34", "35", "36"};
    for (const auto& level : levels) {
        std::vector<Rational> ys(3, level);
        for (const auto& w : weights123()) {
            for (const auto& label : labels)
                if (!coefficient_formula_check(label, w, ys, 16).pass) {
                    msg = "coefficient formula " + label + " failed";
                    return false;
                }
            for (int i = 0; i <= 3; ++i) {
                if (!s3_invariance_check(LambdaFamily::L23, i, w, ys, 16).pass ||
                    !s3_invariance_check(LambdaFamily::L13, i, w, ys, 16).pass) {
                    msg = "S3 invariance failed at i=" + std::to_string(i);
                    return false;
                }
            }
            for (int i = 0; i <= 1; ++i)
                if (!s3_invariance_check(LambdaFamily::L12, i, w, ys, 16).pass) {
                    msg = "S3 invariance failed for L12^" + std::to_string(i);
                    return false;
                }
            if (!lambda13_substitution_check(w, ys, 16).pass) {
                msg = "substitution check failed";
                return false;
            }
        }
    }
    return true;
}

bool criterion_permutation_collapse(std::string& msg) {
    for (unsigned n = 0; n <= 8; ++n)
        for (const auto& w : weights123())
            if (!permutation_collapse_check(n, w).pass) {
                msg = "collapse failed at n=" + std::to_string(n);
                return false;
            }
    return true;
}

int run_cli(const std::string& args, std::string& output) {
    std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return -1;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        output.append(buf, got);
    int status = pclose(pipe);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool criterion_negative_controls(std::string& msg) {
    if (g_cli.empty()) {
        msg = "CLI path not provided";
        return false;
    }
    std::string out;
    int code = run_cli("verify --corrupt T8:1 --format plain", out);
    if (code != 1) {
        msg = "corrupted run exited " + std::to_string(code) + ", want 1";
        return false;
    }
    if (out.find("monomial=") == std::string::npos) {
        msg = "corrupted run did not name a witness monomial";
        return false;
    }
    out.clear();
    code = run_cli("verify", out);
    if (code != 0) {
        msg = "default grid exited " + std::to_string(code) + ", want 0";
        return false;
    }
    return true;
}

bool criterion_t14_variant(std::string& msg) {
    bool literal_ok = true;
    bool pattern_ok = true;
    auto sweep = [&](T14Variant variant) {
        for (unsigned n = 0; n <= 10; ++n)
            for (const auto& w : weights123())
                if (!verify_family(FamilyId::T14, n, w, variant).pass)
                    return false;
        for (const auto& w : std::vector<std::array<long, 3>>{{2, 3, 5}, {4, 5, 6}})
            if (!verify_family(FamilyId::T14, 12, w, variant).pass)
                return false;
        return true;
    };
    literal_ok = sweep(T14Variant::kLiteral);
    pattern_ok = sweep(T14Variant::kPattern);
    if (literal_ok == pattern_ok) {
        msg = "expected exactly one variant to satisfy the grid (literal=" +
              std::to_string(literal_ok) + ", pattern=" + std::to_string(pattern_ok) + ")";
        return false;
    }
    if (!pattern_ok) {
        msg = "shipped variant (pattern) does not satisfy the grid";
        return false;
    }
    // the registry default must be the satisfying variant
    if (!verify_family(FamilyId::T14, 2, {2, 1, 3}).pass) {
        msg = "registry default is not the satisfying variant";
        return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1)
        g_cli = argv[1];

    std::vector<Criterion> criteria{
        {1, "Bernoulli recurrence agrees with the series oracle for n <= 24", 1000,
         criterion_bernoulli_oracle},
        {2, "power_sum, closed form, and series route agree (k <= 20, w <= 6, n <= 50)", 5000,
         criterion_power_sum_triple},
        {3, "identity grid: 8 families, n <= 10, weights {1,2,3}^3, spots at n = 12", 120000,
         criterion_identity_grid},
        {4, "corollary specializations and the 8-way intro chain (n <= 10)", 30000,
         criterion_corollaries},
        {5, "series derivations: nine labels, S3 invariance, substitution (order 16)", 60000,
         criterion_series_derivations},
        {6, "permutation collapse of the raw displays (n <= 8)", 120000,
         criterion_permutation_collapse},
        {7, "negative controls: --corrupt exits 1 with witness, clean grid exits 0", 120000,
         criterion_negative_controls},
        {8, "double-shift third expression: exactly one variant satisfies the grid", 120000,
         criterion_t14_variant},
    };

    int failures = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string msg;
        bool ok = false;
        try {
            ok = c.check(msg);
        } catch (const std::exception& e) {
            msg = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        if (ok && ms > c.budget_ms) {
            ok = false;
            msg = "exceeded runtime budget of " + std::to_string(c.budget_ms) + " ms";
        }
        std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << " (" << ms
                  << " ms) " << c.description;
        if (!ok)
            std::cout << " -- " << msg;
        std::cout << "\n";
        if (!ok)
            ++failures;
    }
    return failures;
}

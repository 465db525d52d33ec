// Command-line front end: exact Bernoulli values, power sums, and the
// identity/series verification grids with machine-readable reports.

#include "bernsym/bernsym.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using bernsym::FamilyId;
using bernsym::Rational;
using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitOperationalError = 2;

struct Row {
    std::string family;
    unsigned n = 0;
    std::array<long, 3> weights{1, 1, 1};
    bool pass = true;
    std::vector<std::pair<std::string, std::string>> witness; // empty when passing
    long long millis = 0;
};

struct OutputOptions {
    std::string format = "plain"; // plain | json | csv
    std::string out_path;         // empty -> stdout
};

std::string monomial_str(const bernsym::MultiPoly::Exponents& e) {
    return std::to_string(e[0]) + ":" + std::to_string(e[1]) + ":" + std::to_string(e[2]);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string serialize(const std::vector<Row>& rows, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            json row;
            row["family"] = r.family;
            row["n"] = r.n;
            row["weights"] = {r.weights[0], r.weights[1], r.weights[2]};
            row["status"] = r.pass ? "pass" : "fail";
            if (r.witness.empty()) {
                row["witness"] = nullptr;
            } else {
                json w;
                for (const auto& [k, v] : r.witness)
                    w[k] = v;
                row["witness"] = w;
            }
            row["millis"] = r.millis;
            arr.push_back(std::move(row));
        }
        os << arr.dump(2) << "\n";
    } else if (format == "csv") {
        os << "family,n,w1,w2,w3,status,witness,millis\n";
        for (const auto& r : rows) {
            std::string w;
            for (const auto& [k, v] : r.witness) {
                if (!w.empty())
                    w += ";";
                w += k + "=" + v;
            }
            os << csv_escape(r.family) << "," << r.n << "," << r.weights[0] << ","
               << r.weights[1] << "," << r.weights[2] << "," << (r.pass ? "pass" : "fail") << ","
               << csv_escape(w) << "," << r.millis << "\n";
        }
    } else {
        size_t failed = 0;
        for (const auto& r : rows) {
            os << r.family << " n=" << r.n << " w=(" << r.weights[0] << "," << r.weights[1]
               << "," << r.weights[2] << ") " << (r.pass ? "pass" : "FAIL");
            for (const auto& [k, v] : r.witness)
                os << " " << k << "=" << v;
            os << "\n";
            if (!r.pass)
                ++failed;
        }
        os << "# " << rows.size() << " checks, " << failed << " failed\n";
    }
    return os.str();
}

int emit(const std::vector<Row>& rows, const OutputOptions& opts) {
    std::string text = serialize(rows, opts.format);
    if (opts.out_path.empty()) {
        std::cout << text;
        if (!std::cout.good())
            return kExitOperationalError;
    } else {
        std::ofstream f(opts.out_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open " << opts.out_path << " for writing\n";
            return kExitOperationalError;
        }
        f << text;
        f.flush();
        if (!f.good()) {
            std::cerr << "error: failed writing " << opts.out_path << "\n";
            return kExitOperationalError;
        }
    }
    for (const auto& r : rows)
        if (!r.pass)
            return kExitVerificationFailed;
    return kExitPass;
}

// Runs tasks on `jobs` workers; results land by task index so the merged
// output is independent of scheduling.
std::vector<Row> run_tasks(const std::vector<std::function<Row()>>& tasks, unsigned jobs) {
    std::vector<Row> results(tasks.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i)
            results[i] = tasks[i]();
        return results;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size())
                return;
            results[i] = tasks[i]();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    return results;
}

Row row_from_report(const bernsym::IdentityReport& rep) {
    Row row;
    row.family = bernsym::family_name(rep.family);
    row.n = rep.n;
    row.weights = rep.weights;
    row.pass = rep.pass;
    row.millis = rep.millis;
    if (rep.witness) {
        row.witness.emplace_back("sides", std::to_string(rep.witness->side_a) + "|" +
                                              std::to_string(rep.witness->side_b));
        row.witness.emplace_back("monomial", monomial_str(rep.witness->monomial));
        row.witness.emplace_back("lhs", rep.witness->lhs.str());
        row.witness.emplace_back("rhs", rep.witness->rhs.str());
    }
    return row;
}

struct CorruptSpec {
    FamilyId family;
    int side;
};

std::optional<CorruptSpec> parse_corrupt(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        return std::nullopt;
    auto family = bernsym::family_from_name(text.substr(0, colon));
    if (!family)
        return std::nullopt;
    try {
        return CorruptSpec{*family, std::stoi(text.substr(colon + 1))};
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::vector<std::array<long, 3>> weight_grid(int arity, long range) {
    std::vector<std::array<long, 3>> out;
    if (arity == 1) {
        for (long a = 1; a <= range; ++a)
            out.push_back({a, 1, 1});
    } else if (arity == 2) {
        for (long a = 1; a <= range; ++a)
            for (long b = 1; b <= range; ++b)
                out.push_back({a, b, 1});
    } else {
        for (long a = 1; a <= range; ++a)
            for (long b = 1; b <= range; ++b)
                for (long c = 1; c <= range; ++c)
                    out.push_back({a, b, c});
    }
    return out;
}

int cmd_verify(const std::vector<std::string>& family_names, unsigned max_n, long range,
               unsigned jobs, const OutputOptions& opts, const std::string& corrupt_text) {
    std::vector<FamilyId> selected;
    for (const auto& name : family_names) {
        if (name == "all") {
            selected = bernsym::all_families();
            break;
        }
        auto f = bernsym::family_from_name(name);
        if (!f) {
            std::cerr << "error: unknown family '" << name << "'\n";
            return kExitOperationalError;
        }
        selected.push_back(*f);
    }

    std::optional<CorruptSpec> corrupt;
    if (!corrupt_text.empty()) {
        corrupt = parse_corrupt(corrupt_text);
        if (!corrupt) {
            std::cerr << "error: --corrupt expects FAMILY:SIDE\n";
            return kExitOperationalError;
        }
    }

    auto selected_has = [&](FamilyId f) {
        for (FamilyId s : selected)
            if (s == f)
                return true;
        return false;
    };

    std::vector<std::function<Row()>> tasks;
    for (FamilyId f : selected) {
        int arity = bernsym::registry::family_spec(f).weight_arity;
        for (unsigned n = 0; n <= max_n; ++n)
            for (const auto& w : weight_grid(arity, range)) {
                int corrupt_side = corrupt && corrupt->family == f ? corrupt->side : -1;
                tasks.push_back([f, n, w, corrupt_side] {
                    return row_from_report(bernsym::verify_family(
                        f, n, w, bernsym::T14Variant::kPattern, corrupt_side));
                });
            }
    }

    // stated theorem->corollary specializations, when both ends are selected
    for (const auto& pair : bernsym::specialization_pairs()) {
        if (!selected_has(pair.source) || !selected_has(pair.target))
            continue;
        int arity = bernsym::registry::family_spec(pair.target).weight_arity;
        std::string label =
            bernsym::family_name(pair.source) + ">" + bernsym::family_name(pair.target);
        for (unsigned n = 0; n <= max_n; ++n)
            for (const auto& w : weight_grid(arity, range)) {
                tasks.push_back([pair, n, w, label] {
                    auto t0 = std::chrono::steady_clock::now();
                    auto res =
                        bernsym::corollary_specialization_check(pair.source, pair.target, n, w);
                    Row row;
                    row.family = label;
                    row.n = n;
                    row.weights = w;
                    row.pass = res.pass;
                    if (!res.pass)
                        row.witness.emplace_back("detail", res.detail);
                    row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                                     std::chrono::steady_clock::now() - t0)
                                     .count();
                    return row;
                });
            }
    }

    // raw-display collapse checks accompany T8 and T17
    if (selected_has(FamilyId::T8) && selected_has(FamilyId::T17)) {
        for (unsigned n = 0; n <= max_n; ++n)
            for (const auto& w : weight_grid(3, range)) {
                tasks.push_back([n, w] {
                    auto t0 = std::chrono::steady_clock::now();
                    auto res = bernsym::permutation_collapse_check(n, w);
                    Row row;
                    row.family = "collapse";
                    row.n = n;
                    row.weights = w;
                    row.pass = res.pass;
                    if (!res.pass)
                        row.witness.emplace_back("detail", res.detail);
                    row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                                     std::chrono::steady_clock::now() - t0)
                                     .count();
                    return row;
                });
            }
    }

    return emit(run_tasks(tasks, jobs), opts);
}

int cmd_series_check(unsigned order, long range, unsigned jobs, const OutputOptions& opts,
                     std::optional<unsigned> corrupt_order) {
    using bernsym::LambdaFamily;
    const std::vector<Rational> ys_levels{Rational(0), Rational(1, 2)};
    const std::vector<std::string> level_names{"0", "1/2"};
    const std::vector<std::string> labels{"24", "27", "28", "30", "32", "33", "34", "35", "36"};

    std::vector<std::function<Row()>> tasks;
    auto add_task = [&](std::string family, unsigned n, std::array<long, 3> w,
                        std::function<bernsym::SeriesCheck()> check) {
        tasks.push_back([family = std::move(family), n, w, check = std::move(check)] {
            auto t0 = std::chrono::steady_clock::now();
            auto res = check();
            Row row;
            row.family = family;
            row.n = n;
            row.weights = w;
            row.pass = res.pass;
            if (!res.pass && res.witness) {
                row.witness.emplace_back("order", std::to_string(res.witness->index));
                row.witness.emplace_back("lhs", res.witness->lhs.str());
                row.witness.emplace_back("rhs", res.witness->rhs.str());
                row.witness.emplace_back("context", res.witness->context);
            }
            row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
            return row;
        });
    };

    auto grid = weight_grid(3, range);
    struct Combo {
        LambdaFamily family;
        int i;
    };
    std::vector<Combo> combos;
    for (int i = 0; i <= 3; ++i)
        combos.push_back({LambdaFamily::L23, i});
    for (int i = 0; i <= 3; ++i)
        combos.push_back({LambdaFamily::L13, i});
    for (int i = 0; i <= 1; ++i)
        combos.push_back({LambdaFamily::L12, i});

    for (const auto& combo : combos)
        for (size_t lev = 0; lev < ys_levels.size(); ++lev)
            for (const auto& w : grid) {
                std::string fam = std::string("s3:") + bernsym::lambda_family_name(combo.family) +
                                  "^" + std::to_string(combo.i) + ":y=" + level_names[lev];
                std::vector<Rational> ys(3, ys_levels[lev]);
                add_task(fam, order, w, [combo, w, ys, order, corrupt_order] {
                    return bernsym::s3_invariance_check(combo.family, combo.i, w, ys, order,
                                                        corrupt_order);
                });
            }

    for (const auto& label : labels)
        for (size_t lev = 0; lev < ys_levels.size(); ++lev)
            for (const auto& w : grid) {
                std::vector<Rational> ys(3, ys_levels[lev]);
                add_task("cf:" + label + ":y=" + level_names[lev], order, w,
                         [label, w, ys, order, corrupt_order] {
                             return bernsym::coefficient_formula_check(label, w, ys, order,
                                                                       corrupt_order);
                         });
            }

    for (size_t lev = 0; lev < ys_levels.size(); ++lev)
        for (const auto& w : grid) {
            std::vector<Rational> ys(3, ys_levels[lev]);
            add_task("sub:L13:y=" + level_names[lev], order, w, [w, ys, order, corrupt_order] {
                return bernsym::lambda13_substitution_check(w, ys, order, corrupt_order);
            });
        }

    return emit(run_tasks(tasks, jobs), opts);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Bernoulli numbers, power sums, and symmetry-identity verification"};
    app.require_subcommand(1);

    unsigned arg_n = 0, arg_k = 0;
    auto* cmd_bern = app.add_subcommand("bernoulli", "Print B_n and B_n(x) exactly");
    cmd_bern->add_option("n", arg_n, "index n >= 0")->required();

    auto* cmd_pow = app.add_subcommand("powersum", "Print S_k(n) = 0^k + 1^k + ... + n^k");
    cmd_pow->add_option("k", arg_k, "exponent k >= 0")->required();
    cmd_pow->add_option("n", arg_n, "upper limit n >= 0")->required();

    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::string> families{"all"};
    unsigned max_n = 8;
    long weights = 3;
    unsigned order = 16;
    OutputOptions out;
    std::string corrupt_text;
    unsigned corrupt_order_value = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", out.format, "plain, json, or csv")
            ->check(CLI::IsMember({"plain", "json", "csv"}))
            ->capture_default_str();
        cmd->add_option("--out", out.out_path, "write the report to a file instead of stdout");
        cmd->add_option("--jobs", jobs, "worker count")
            ->envname("BERNSYM_JOBS")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    auto* cmd_ver = app.add_subcommand("verify", "Verify identity families over a grid");
    cmd_ver->add_option("--families", families, "comma-separated family ids, or 'all'")
        ->delimiter(',')
        ->capture_default_str();
    cmd_ver->add_option("--max-n", max_n, "largest degree n")->capture_default_str();
    cmd_ver->add_option("--weights", weights, "weights range 1..W")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_ver->add_option("--corrupt", corrupt_text, "FAMILY:SIDE perturbation (negative control)")
        ->group("");
    add_common(cmd_ver);

    auto* cmd_ser = app.add_subcommand("series-check", "Verify series-level derivations");
    cmd_ser->add_option("--order", order, "truncation order")->capture_default_str();
    cmd_ser->add_option("--weights", weights, "weights range 1..W")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    auto* copt = cmd_ser
                     ->add_option("--corrupt", corrupt_order_value,
                                  "perturb one coefficient at this order (negative control)")
                     ->group("");
    add_common(cmd_ser);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitOperationalError;
    }

    try {
        if (cmd_bern->parsed()) {
            std::cout << bernsym::bernoulli_number(arg_n).str() << "\n"
                      << bernsym::bernoulli_polynomial(arg_n).str() << "\n";
            return kExitPass;
        }
        if (cmd_pow->parsed()) {
            std::cout << bernsym::power_sum(arg_k, arg_n).str() << "\n";
            return kExitPass;
        }
        if (cmd_ver->parsed())
            return cmd_verify(families, max_n, weights, jobs, out, corrupt_text);
        std::optional<unsigned> corrupt_order;
        if (copt->count() > 0)
            corrupt_order = corrupt_order_value;
        return cmd_series_check(order, weights, jobs, out, corrupt_order);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOperationalError;
    }
}

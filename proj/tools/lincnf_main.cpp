// lincnf: structural analysis, instance generation and exact-satisfiability
// checking for linear CNF formulas.
//
// Subcommands: analyze, solve, generate, bench, verify. Machine-readable
// output (JSON, CSV, DIMACS) goes to stdout; diagnostics go to stderr.
// Exit codes: 0 success, 2 file/parse error, 3 identity violation (an
// implementation bug, never a property of valid input), 4 bad parameters
// or unmet preconditions, 5 generator search found no instance.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lincnf/classify.hpp"
#include "lincnf/dimacs.hpp"
#include "lincnf/error.hpp"
#include "lincnf/generate.hpp"
#include "lincnf/identities.hpp"
#include "lincnf/json_report.hpp"
#include "lincnf/solve.hpp"

namespace {

using lincnf::Errc;
using lincnf::Formula;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitIdentity = 3;
constexpr int kExitPrecondition = 4;
constexpr int kExitNotFound = 5;

std::uint64_t default_budget() {
    if (const char* env = std::getenv("LINCNF_BUDGET")) {
        char* end = nullptr;
        unsigned long long value = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && value > 0) return value;
        std::cerr << "warning: ignoring malformed LINCNF_BUDGET='" << env << "'\n";
    }
    return 0;  // library default caps apply
}

int exit_code_for(const lincnf::Error& e) {
    switch (e.code()) {
        case Errc::malformed_header:
        case Errc::clause_count_mismatch:
        case Errc::variable_out_of_declared_range:
        case Errc::zero_literal:
        case Errc::duplicate_variable:
            return kExitParse;
        case Errc::budget_exhausted:
            return kExitNotFound;
        default:
            return kExitPrecondition;
    }
}

Formula load_formula(const std::string& path, std::vector<std::string>* warnings = nullptr) {
    lincnf::DimacsDocument doc = lincnf::parse_dimacs_file(path);
    if (warnings) *warnings = doc.warnings;
    for (const std::string& w : doc.warnings) std::cerr << "warning: " << w << "\n";
    return doc.formula;
}

void emit(const json& value, bool pretty) {
    if (pretty) {
        std::cout << value.dump(2) << "\n";
    } else {
        std::cout << value.dump() << "\n";
    }
}

double wall_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

// ---------------------------------------------------------------- analyze

int cmd_analyze(const std::string& path, std::optional<std::int64_t> max_d,
                std::optional<std::string> max_mean_d, bool pretty) {
    lincnf::AnalyzeOptions options;
    options.max_disjointedness = max_d;
    if (max_mean_d) options.max_mean_disjointedness = lincnf::parse_fraction(*max_mean_d);
    Formula f = load_formula(path);
    json report = lincnf::analysis_report(f, options);
    emit(report, pretty);
    return lincnf::report_has_identity_violation(report) ? kExitIdentity : kExitOk;
}

// ------------------------------------------------------------------ solve

int cmd_solve(const std::string& path, const std::string& method, std::uint64_t budget,
              bool pretty) {
    Formula f = load_formula(path);
    json out;
    std::optional<lincnf::XsatResult> oracle, restricted;
    if (method == "oracle" || method == "both") {
        oracle = lincnf::brute_force_xsat(f, budget);
        out["oracle"] = to_json(*oracle, f);
    }
    if (method == "restricted" || method == "both") {
        restricted = lincnf::weight_restricted_xsat(f, budget);
        out["restricted"] = to_json(*restricted, f);
    }
    if (oracle && restricted) {
        bool agree = oracle->status == restricted->status &&
                     oracle->model_count == restricted->model_count &&
                     oracle->first_model == restricted->first_model;
        out["agree"] = agree;
    }
    emit(out, pretty);
    for (const auto& result : {oracle, restricted}) {
        if (result && result->first_model) {
            std::cout << lincnf::model_v_line(f, *result->first_model) << "\n";
            break;
        }
    }
    return kExitOk;
}

// --------------------------------------------------------------- generate

int cmd_generate(const lincnf::GeneratorSpec& spec, const std::string& out_path) {
    lincnf::GeneratedInstance instance = lincnf::run_generator(spec);
    std::string dimacs = lincnf::write_dimacs(instance.formula, std::nullopt, instance.comments);
    if (out_path.empty() || out_path == "-") {
        std::cout << dimacs;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitParse;
        }
        out << dimacs;
    }
    return kExitOk;
}

// ------------------------------------------------------------------ bench

struct BenchRow {
    std::string id;
    Formula formula;
};

void bench_row(std::ostream& out, const BenchRow& row, int solve_max_n, std::uint64_t budget) {
    const Formula& f = row.formula;
    lincnf::ClassReport report = lincnf::classify(f);
    std::int64_t m = f.clause_count();
    std::int64_t n = f.variable_count();

    out << row.id << "," << n << "," << m << ",";
    if (report.uniform.k) out << *report.uniform.k;
    out << ",";
    if (report.regular.l) out << *report.regular.l;
    out << ",";
    if (report.common_disjointedness) out << *report.common_disjointedness;
    out << ",";
    if (report.mean_disjointedness) out << lincnf::to_fraction_string(*report.mean_disjointedness);
    out << ",";

    std::optional<std::int64_t> l = report.regular.l
                                        ? std::optional<std::int64_t>(*report.regular.l)
                                        : std::nullopt;
    if (l) out << lincnf::to_fraction_string(lincnf::Rational(m, *l));
    out << ",";

    bool prescreen_applicable = report.monotone.holds && l.has_value();
    bool prescreen_pass = false;
    if (prescreen_applicable) {
        auto ps = lincnf::xsat_prescreen(f);
        prescreen_pass = ps.pass;
        out << (ps.pass ? "pass" : "fail(" + std::to_string(ps.remainder) + ")");
    }
    out << ",";

    bool counted = prescreen_applicable && prescreen_pass;
    if (counted) {
        lincnf::BigInt candidates = lincnf::candidate_count(f);
        out << candidates.str() << "," << lincnf::ln_binomial(n, m / *l) << ",";
    } else {
        out << ",,";
    }
    out << std::sqrt(static_cast<double>(n)) * std::log(static_cast<double>(n)) << ",";

    if (l && *l >= 2) {
        out << lincnf::ml_bracket_lower(n, *l);
        out << ",";
        if (report.common_disjointedness) {
            out << lincnf::ml_upper_bound(n, *l, *report.common_disjointedness);
        }
    } else {
        out << ",";
    }
    out << ",";
    if (l && report.uniform.k && report.common_disjointedness) {
        out << (lincnf::ml_quadratic_check(m, n, *l, *report.common_disjointedness) ? "yes"
                                                                                    : "no");
    }
    out << ",";

    // Solver columns; timing values are wall-clock and land in the two
    // clearly marked trailing columns so everything before them is
    // deterministic.
    std::optional<lincnf::XsatResult> oracle, restricted;
    double oracle_ms = 0.0, restricted_ms = 0.0;
    if (n <= solve_max_n) {
        auto start = std::chrono::steady_clock::now();
        oracle = lincnf::brute_force_xsat(f);
        oracle_ms = wall_ms(start);
        if (report.monotone.holds && l) {
            start = std::chrono::steady_clock::now();
            restricted = lincnf::weight_restricted_xsat(f, budget);
            restricted_ms = wall_ms(start);
        }
    }
    if (oracle) out << to_string(oracle->status) << "," << oracle->model_count.str();
    else out << ",";
    out << ",";
    if (restricted) out << to_string(restricted->status) << "," << restricted->model_count.str();
    else out << ",";
    out << ",";
    if (oracle && restricted && restricted->complete) {
        bool agree = oracle->status == restricted->status &&
                     oracle->model_count == restricted->model_count &&
                     oracle->first_model == restricted->first_model;
        out << (agree ? "yes" : "no");
    }
    out << ",";
    if (oracle) out << oracle_ms;
    out << ",";
    if (restricted) out << restricted_ms;
    out << "\n";
}

int cmd_bench(const std::string& family, const std::vector<int>& q_list, int t_min, int t_max,
              int m_max, int k_blocks, int l, int d, int k_min, int k_max, std::uint64_t budget,
              std::uint64_t seed, int solve_max_n, const std::string& out_path) {
    std::vector<BenchRow> rows;
    if (family == "projective") {
        for (int q : q_list) {
            rows.push_back({"projective-q" + std::to_string(q), lincnf::gen_projective_plane(q)});
        }
    } else if (family == "cycle") {
        for (int t = t_min; t <= t_max; ++t) {
            rows.push_back({"cycle-t" + std::to_string(t), lincnf::gen_cycle(t)});
        }
    } else if (family == "blocks") {
        for (int m = 1; m <= m_max; ++m) {
            rows.push_back({"blocks-m" + std::to_string(m) + "-k" + std::to_string(k_blocks),
                            lincnf::gen_disjoint_blocks(m, k_blocks)});
        }
    } else if (family == "search") {
        for (int k = k_min; k <= k_max; ++k) {
            lincnf::SearchResult result;
            try {
                result = lincnf::gen_dlcnf_search(k, l, d, budget, seed);
            } catch (const lincnf::Error& e) {
                std::cerr << "note: k=" << k << " skipped: " << e.what() << "\n";
                continue;
            }
            if (!result.formula) {
                std::cerr << "note: k=" << k << " "
                          << (result.exhausted ? "has no instance" : "exceeded the budget")
                          << "\n";
                continue;
            }
            rows.push_back({"search-k" + std::to_string(k) + "-l" + std::to_string(l) + "-d" +
                                std::to_string(d),
                            std::move(*result.formula)});
        }
    } else {
        std::cerr << "error: unknown family '" << family << "'\n";
        return kExitPrecondition;
    }

    std::ostringstream csv;
    csv << "id,n,m,k,l,d,mean_d,m_over_l,prescreen,candidates,ln_candidates,ln_n_sqrt_n,"
           "ml_lower,ml_upper,quadratic_exact,oracle_status,oracle_models,restricted_status,"
           "restricted_models,agree,oracle_wall_ms,restricted_wall_ms\n";
    for (const BenchRow& row : rows) bench_row(csv, row, solve_max_n, budget);

    if (out_path.empty() || out_path == "-") {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitParse;
        }
        out << csv.str();
    }
    return kExitOk;
}

// ----------------------------------------------------------------- verify

bool verify_one(const Formula& f, const std::string& label) {
    bool all_hold = true;
    auto check = [&](const lincnf::IdentityReport& report) {
        if (!report.holds) {
            all_hold = false;
            std::cerr << "identity violation in " << label << ": " << report.name << " ("
                      << report.failures.size() << " failures)\n";
        }
    };
    check(lincnf::verify_clause_size_identity(f));
    check(lincnf::verify_variable_size_identity(f));
    if (f.clause_count() > 0) check(lincnf::verify_mean_identities(f));
    if (f.variable_count() > 0 && lincnf::regularity(f).l) {
        check(lincnf::verify_regular_corollaries(f));
    }
    return all_hold;
}

int cmd_verify(const std::string& path, int fuzz, std::uint64_t seed) {
    if (!path.empty()) {
        Formula f = load_formula(path);
        if (!lincnf::is_linear(f).holds) {
            std::cerr << "warning: formula is not linear; identity checks skipped (NotLinear)\n";
            std::cout << "verified 0 formulas (skipped: NotLinear)\n";
            return kExitOk;
        }
        bool ok = verify_one(f, path);
        std::cout << (ok ? "all identities hold\n" : "identity violations found\n");
        return ok ? kExitOk : kExitIdentity;
    }
    auto corpus = lincnf::seeded_linear_corpus(fuzz, seed);
    int checked = 0;
    bool ok = true;
    for (const Formula& f : corpus) {
        ok = verify_one(f, "fuzz#" + std::to_string(checked)) && ok;
        ++checked;
    }
    std::cout << (ok ? "all identities hold" : "identity violations found") << " on " << checked
              << " random linear formulas\n";
    return ok ? kExitOk : kExitIdentity;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structural analysis and exact satisfiability for linear CNF formulas"};
    app.require_subcommand(1);

    std::uint64_t budget = default_budget();
    bool pretty = false;

    // analyze
    std::string analyze_path;
    std::optional<std::int64_t> max_d;
    std::optional<std::string> max_mean_d;
    CLI::App* analyze = app.add_subcommand("analyze", "classify a DIMACS file and check identities");
    analyze->add_option("path", analyze_path, "DIMACS CNF file")->required();
    analyze->add_option("--max-d", max_d, "also report membership for disjointedness <= bound");
    analyze->add_option("--max-mean-d", max_mean_d,
                        "also report membership for mean disjointedness <= bound (integer or p/q)");
    analyze->add_flag("--pretty", pretty, "indent JSON output");

    // solve
    std::string solve_path, method = "both";
    CLI::App* solve = app.add_subcommand("solve", "decide and count XSAT models");
    solve->add_option("path", solve_path, "DIMACS CNF file")->required();
    solve->add_option("--method", method, "oracle | restricted | both")
        ->check(CLI::IsMember({"oracle", "restricted", "both"}));
    solve->add_option("--budget", budget, "enumeration budget (default LINCNF_BUDGET or 2^30)");
    solve->add_flag("--pretty", pretty, "indent JSON output");

    // generate
    lincnf::GeneratorSpec spec;
    std::string kind, gen_out;
    CLI::App* generate = app.add_subcommand("generate", "emit a certified instance as DIMACS");
    generate->add_option("--kind", kind, "projective | cycle | blocks | search | random")
        ->required()
        ->check(CLI::IsMember({"projective", "cycle", "blocks", "search", "random"}));
    generate->add_option("--q", spec.q, "projective plane order (prime)");
    generate->add_option("--t", spec.t, "half cycle length (cycle has 2t edges)");
    generate->add_option("--m", spec.m, "block count");
    generate->add_option("--k", spec.k, "clause size");
    generate->add_option("--l", spec.l, "occurrence count");
    generate->add_option("--d", spec.d, "disjointedness");
    generate->add_option("--target-n", spec.target_n, "random: variable budget");
    generate->add_option("--k-min", spec.k_min, "random: smallest clause size");
    generate->add_option("--k-max", spec.k_max, "random: largest clause size");
    generate->add_option("--seed", spec.seed, "generator seed");
    generate->add_option("--budget", spec.budget, "search node budget");
    generate->add_option("--out", gen_out, "output file (default stdout)");

    // bench
    std::string family, bench_out;
    std::vector<int> q_list{2, 3};
    int t_min = 2, t_max = 8, m_max = 6, k_blocks = 2, l_param = 2, d_param = 1;
    int k_min = 2, k_max = 8, solve_max_n = 20;
    std::uint64_t bench_seed = 0;
    CLI::App* bench = app.add_subcommand("bench", "sweep a generator family into a CSV");
    bench->add_option("--family", family, "projective | cycle | blocks | search")
        ->required()
        ->check(CLI::IsMember({"projective", "cycle", "blocks", "search"}));
    bench->add_option("--q-list", q_list, "projective: plane orders");
    bench->add_option("--t-min", t_min, "cycle: smallest t");
    bench->add_option("--t-max", t_max, "cycle: largest t");
    bench->add_option("--m-max", m_max, "blocks: largest block count");
    bench->add_option("--k", k_blocks, "blocks: clause size");
    bench->add_option("--l", l_param, "search: occurrence count");
    bench->add_option("--d", d_param, "search: disjointedness");
    bench->add_option("--k-min", k_min, "search: smallest clause size");
    bench->add_option("--k-max", k_max, "search: largest clause size");
    bench->add_option("--seed", bench_seed, "search seed (metadata only)");
    bench->add_option("--budget", budget, "search/solver budget");
    bench->add_option("--solve-max-n", solve_max_n, "run both solvers when n is at most this");
    bench->add_option("--out", bench_out, "output CSV (default stdout)");

    // verify
    std::string verify_path;
    int fuzz = 0;
    std::uint64_t verify_seed = 42;
    CLI::App* verify = app.add_subcommand("verify", "run the identity suite");
    verify->add_option("path", verify_path, "DIMACS CNF file");
    verify->add_option("--fuzz", fuzz, "verify this many random linear formulas instead");
    verify->add_option("--seed", verify_seed, "fuzz seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return cmd_analyze(analyze_path, max_d, max_mean_d, pretty);
        if (*solve) return cmd_solve(solve_path, method, budget, pretty);
        if (*generate) {
            if (kind == "projective") spec.kind = lincnf::GeneratorSpec::Kind::projective_plane;
            if (kind == "cycle") spec.kind = lincnf::GeneratorSpec::Kind::cycle;
            if (kind == "blocks") spec.kind = lincnf::GeneratorSpec::Kind::disjoint_blocks;
            if (kind == "search") spec.kind = lincnf::GeneratorSpec::Kind::dlcnf_search;
            if (kind == "random") spec.kind = lincnf::GeneratorSpec::Kind::random_linear;
            return cmd_generate(spec, gen_out);
        }
        if (*bench) {
            return cmd_bench(family, q_list, t_min, t_max, m_max, k_blocks, l_param, d_param,
                             k_min, k_max, budget, bench_seed, solve_max_n, bench_out);
        }
        if (*verify) {
            if (verify_path.empty() && fuzz <= 0) {
                std::cerr << "error: verify needs a path or --fuzz=N\n";
                return kExitPrecondition;
            }
            return cmd_verify(verify_path, fuzz, verify_seed);
        }
    } catch (const lincnf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}

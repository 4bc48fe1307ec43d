#include "lincnf/classify.hpp"

#include <string>

#include "lincnf/error.hpp"

namespace lincnf {

LinearityVerdict is_linear(const Formula& f) {
    for (int i = 0; i < f.clause_count(); ++i) {
        for (int j = i + 1; j < f.clause_count(); ++j) {
            auto shared = shared_variables(f.clause(i), f.clause(j));
            if (shared.size() > 1) {
                return {false, PairWitness{i, j, std::move(shared)}};
            }
        }
    }
    return {true, std::nullopt};
}

LinearityVerdict is_exact_linear(const Formula& f) {
    for (int i = 0; i < f.clause_count(); ++i) {
        for (int j = i + 1; j < f.clause_count(); ++j) {
            auto shared = shared_variables(f.clause(i), f.clause(j));
            if (shared.size() != 1) {
                return {false, PairWitness{i, j, std::move(shared)}};
            }
        }
    }
    return {true, std::nullopt};
}

MonotonicityVerdict is_monotone(const Formula& f) {
    for (int i = 0; i < f.clause_count(); ++i) {
        for (const Literal& lit : f.clause(i).literals()) {
            if (lit.negative) return {false, PolarityWitness{i, lit}};
        }
    }
    return {true, std::nullopt};
}

RegularityVerdict regularity(const Formula& f) {
    if (f.variable_count() == 0) raise(Errc::empty_formula, "regularity needs variables");
    auto vars = f.variables();
    Var first = vars[0];
    int l = f.occurrence(first);
    for (Var x : vars) {
        int lx = f.occurrence(x);
        if (lx != l) {
            return {std::nullopt, OccurrenceWitness{first, x, l, lx}};
        }
    }
    return {l, std::nullopt};
}

UniformityVerdict uniformity(const Formula& f) {
    if (f.clause_count() == 0) raise(Errc::empty_formula, "uniformity needs clauses");
    int k = f.clause(0).size();
    for (int i = 1; i < f.clause_count(); ++i) {
        if (f.clause(i).size() != k) {
            return {std::nullopt, SizeWitness{0, i, k, f.clause(i).size()}};
        }
    }
    return {k, std::nullopt};
}

std::int64_t clause_disjointedness(const Formula& f, int clause_index) {
    const Clause& c = f.clause(clause_index);  // validates the index
    std::int64_t d = 0;
    for (int j = 0; j < f.clause_count(); ++j) {
        if (j == clause_index) continue;
        if (shared_variables(c, f.clause(j)).empty()) ++d;
    }
    return d;
}

std::vector<std::int64_t> disjointedness_profile(const Formula& f) {
    std::vector<std::int64_t> profile(static_cast<std::size_t>(f.clause_count()), 0);
    for (int i = 0; i < f.clause_count(); ++i) {
        for (int j = i + 1; j < f.clause_count(); ++j) {
            if (shared_variables(f.clause(i), f.clause(j)).empty()) {
                ++profile[static_cast<std::size_t>(i)];
                ++profile[static_cast<std::size_t>(j)];
            }
        }
    }
    return profile;
}

Rational mean_disjointedness(const Formula& f) {
    if (f.clause_count() == 0) raise(Errc::empty_formula, "mean disjointedness needs clauses");
    BigInt sum = 0;
    for (std::int64_t d : disjointedness_profile(f)) sum += d;
    return Rational(sum, f.clause_count());
}

std::int64_t variable_independence(const Formula& f, Var x) {
    if (!f.contains_variable(x)) {
        raise(Errc::unknown_variable, "variable " + std::to_string(x) + " not in V(F)");
    }
    // v_x = n - |V(F_x)| where F_x collects the clauses containing x.
    std::vector<char> seen(static_cast<std::size_t>(f.variable_count()), 0);
    std::int64_t covered = 0;
    for (int ci = 0; ci < f.clause_count(); ++ci) {
        if (!f.clause(ci).contains_variable(x)) continue;
        for (const Literal& lit : f.clause(ci).literals()) {
            auto idx = *f.variable_index(lit.variable);
            if (!seen[static_cast<std::size_t>(idx)]) {
                seen[static_cast<std::size_t>(idx)] = 1;
                ++covered;
            }
        }
    }
    return f.variable_count() - covered;
}

std::vector<std::int64_t> independence_profile(const Formula& f) {
    std::vector<std::int64_t> profile;
    profile.reserve(static_cast<std::size_t>(f.variable_count()));
    for (Var x : f.variables()) profile.push_back(variable_independence(f, x));
    return profile;
}

Rational mean_independence(const Formula& f) {
    if (f.variable_count() == 0) raise(Errc::empty_formula, "mean independence needs variables");
    BigInt sum = 0;
    for (std::int64_t v : independence_profile(f)) sum += v;
    return Rational(sum, f.variable_count());
}

ClassReport classify(const Formula& f,
                     std::optional<std::int64_t> max_disjointedness,
                     std::optional<Rational> max_mean_disjointedness) {
    ClassReport report;
    report.clause_count = f.clause_count();
    report.variable_count = f.variable_count();
    report.linear = is_linear(f);
    report.exact_linear = is_exact_linear(f);
    report.monotone = is_monotone(f);
    if (f.variable_count() > 0) report.regular = regularity(f);
    if (f.clause_count() > 0) report.uniform = uniformity(f);

    report.disjointedness = disjointedness_profile(f);
    if (!report.disjointedness.empty()) {
        std::int64_t d0 = report.disjointedness.front();
        bool all_equal = true;
        for (std::int64_t d : report.disjointedness) {
            if (d != d0) {
                all_equal = false;
                break;
            }
        }
        if (all_equal) report.common_disjointedness = d0;
        BigInt sum = 0;
        for (std::int64_t d : report.disjointedness) sum += d;
        report.mean_disjointedness = Rational(sum, f.clause_count());
    }

    report.independence = independence_profile(f);
    if (!report.independence.empty()) {
        BigInt sum = 0;
        for (std::int64_t v : report.independence) sum += v;
        report.mean_independence = Rational(sum, f.variable_count());
    }

    bool regular_linear = report.linear.holds && report.regular.l.has_value();
    if (max_disjointedness) {
        report.disjointedness_bound = *max_disjointedness;
        report.in_bounded_disjointedness_class =
            regular_linear && report.common_disjointedness.has_value() &&
            *report.common_disjointedness <= *max_disjointedness;
    }
    if (max_mean_disjointedness) {
        report.mean_disjointedness_bound = *max_mean_disjointedness;
        bool within = report.mean_disjointedness.has_value() &&
                      *report.mean_disjointedness <= *max_mean_disjointedness;
        report.mean_within_bound = within;
        report.in_bounded_mean_class = regular_linear && within;
    }
    return report;
}

}  // namespace lincnf

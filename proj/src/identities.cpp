#include "lincnf/identities.hpp"

#include <cmath>
#include <string>

#include "lincnf/classify.hpp"
#include "lincnf/error.hpp"

namespace lincnf {

namespace {

void require_linear(const Formula& f) {
    auto verdict = is_linear(f);
    if (!verdict.holds) {
        raise(Errc::not_linear,
              "clauses " + std::to_string(verdict.witness->first_clause) + " and " +
                  std::to_string(verdict.witness->second_clause) + " share " +
                  std::to_string(verdict.witness->shared.size()) + " variables");
    }
}

void record(IdentityReport& report, const std::string& item, const Rational& lhs,
            const Rational& rhs) {
    ++report.items_checked;
    if (lhs != rhs) {
        report.holds = false;
        report.failures.push_back({item, lhs, rhs});
    }
}

}  // namespace

IdentityReport verify_clause_size_identity(const Formula& f) {
    require_linear(f);
    IdentityReport report{"clause_count_identity"};
    for (int ci = 0; ci < f.clause_count(); ++ci) {
        std::int64_t occ_sum = 0;
        for (const Literal& lit : f.clause(ci).literals()) occ_sum += f.occurrence(lit.variable);
        Rational rhs = Rational(1 + occ_sum - f.clause(ci).size() + clause_disjointedness(f, ci));
        record(report, "clause " + std::to_string(ci), Rational(f.clause_count()), rhs);
    }
    return report;
}

IdentityReport verify_variable_size_identity(const Formula& f) {
    require_linear(f);
    IdentityReport report{"variable_count_identity"};
    for (Var x : f.variables()) {
        std::int64_t size_sum = 0;
        for (const Clause& c : f.clauses()) {
            if (c.contains_variable(x)) size_sum += c.size();
        }
        Rational rhs = Rational(1 - f.occurrence(x) + size_sum + variable_independence(f, x));
        record(report, "variable " + std::to_string(x), Rational(f.variable_count()), rhs);
    }
    return report;
}

IdentityReport verify_mean_identities(const Formula& f) {
    require_linear(f);
    if (f.clause_count() == 0) raise(Errc::empty_formula, "mean identities need clauses");
    IdentityReport report{"mean_count_identities"};
    FormulaStats s = stats(f);
    Rational k_mean = s.mean_clause_length;
    Rational l_mean = s.mean_occurrence;
    Rational clause_side =
        1 + (k_mean / l_mean) * (s.mean_squared_occurrence - l_mean) + mean_disjointedness(f);
    record(report, "clause_side", Rational(f.clause_count()), clause_side);
    Rational variable_side =
        1 + (l_mean / k_mean) * (s.mean_squared_clause_length - k_mean) + mean_independence(f);
    record(report, "variable_side", Rational(f.variable_count()), variable_side);
    return report;
}

IdentityReport verify_regular_corollaries(const Formula& f) {
    require_linear(f);
    auto reg = regularity(f);
    if (!reg.l) {
        raise(Errc::not_regular,
              "variables " + std::to_string(reg.witness->first_variable) + " and " +
                  std::to_string(reg.witness->second_variable) + " occur " +
                  std::to_string(reg.witness->first_occurrence) + " and " +
                  std::to_string(reg.witness->second_occurrence) + " times");
    }
    std::int64_t l = *reg.l;
    IdentityReport report{"regular_count_identities"};
    for (int ci = 0; ci < f.clause_count(); ++ci) {
        Rational rhs =
            Rational(1 + static_cast<std::int64_t>(f.clause(ci).size()) * (l - 1) +
                     clause_disjointedness(f, ci));
        record(report, "clause " + std::to_string(ci), Rational(f.clause_count()), rhs);
    }
    FormulaStats s = stats(f);
    Rational clause_side = 1 + s.mean_clause_length * (l - 1) + mean_disjointedness(f);
    record(report, "mean_clause_side", Rational(f.clause_count()), clause_side);
    Rational variable_side =
        1 + l * (s.mean_squared_clause_length / s.mean_clause_length - 1) + mean_independence(f);
    record(report, "mean_variable_side", Rational(f.variable_count()), variable_side);
    return report;
}

SizeParameters parameters_to_size(std::int64_t k, std::int64_t l, std::int64_t d) {
    if (k < 1 || l < 1 || d < 0) {
        raise(Errc::inconsistent_parameters,
              "need k >= 1, l >= 1, d >= 0; got k=" + std::to_string(k) +
                  " l=" + std::to_string(l) + " d=" + std::to_string(d));
    }
    SizeParameters p;
    p.uniformity = k;
    p.regularity = l;
    p.disjointedness = d;
    p.clause_count = 1 + k * (l - 1) + d;
    if ((k * p.clause_count) % l != 0) {
        raise(Errc::non_integral_size,
              "l=" + std::to_string(l) + " does not divide k*m=" +
                  std::to_string(k * p.clause_count));
    }
    p.variable_count = k * p.clause_count / l;
    p.congruence_holds = ((k % l) == ((1 + d) % l));
    return p;
}

bool ml_quadratic_check(std::int64_t m, std::int64_t n, std::int64_t l, std::int64_t d) {
    BigInt residual = BigInt(m) * m - BigInt(1 + d) * m - BigInt(n) * l * (l - 1);
    return residual == 0;
}

double ml_upper_bound(std::int64_t n, std::int64_t l, std::int64_t d_bound) {
    double dd = static_cast<double>(1 + d_bound);
    double inner = 1.0 + 4.0 * static_cast<double>(n) * static_cast<double>(l) *
                             static_cast<double>(l - 1) / (dd * dd);
    return dd / (2.0 * static_cast<double>(l)) * (1.0 + std::sqrt(inner));
}

double ml_bracket_lower(std::int64_t n, std::int64_t l) {
    if (l < 2) raise(Errc::degenerate_regularity, "bracket needs l >= 2");
    return std::sqrt(static_cast<double>(n) * static_cast<double>(l - 1) /
                     static_cast<double>(l));
}

bool bracket_holds(std::int64_t m, std::int64_t n, std::int64_t l, double epsilon) {
    double lower = ml_bracket_lower(n, l);
    double ratio = static_cast<double>(m) / static_cast<double>(l);
    return ratio >= lower - kBoundSlack && ratio <= (1.0 + epsilon) * lower + kBoundSlack;
}

double implied_epsilon(std::int64_t m, std::int64_t n, std::int64_t l) {
    double lower = ml_bracket_lower(n, l);
    return static_cast<double>(m) / (static_cast<double>(l) * lower) - 1.0;
}

std::int64_t uniform_disjointedness(std::int64_t n, std::int64_t k, std::int64_t l) {
    if (k < 1 || l < 1 || n < 1) {
        raise(Errc::inconsistent_parameters, "need n, k, l >= 1");
    }
    if ((n * l) % k != 0) {
        raise(Errc::non_integral_size,
              "k=" + std::to_string(k) + " does not divide n*l=" + std::to_string(n * l));
    }
    std::int64_t d = n * l / k - k * (l - 1) - 1;
    if (d < 0) {
        raise(Errc::negative_disjointedness,
              "parameters give d=" + std::to_string(d) + ", no such formula");
    }
    return d;
}

PrescreenResult xsat_prescreen(const Formula& f) {
    auto mono = is_monotone(f);
    if (!mono.holds) {
        raise(Errc::not_monotone,
              "clause " + std::to_string(mono.witness->clause_index) + " contains literal " +
                  std::to_string(mono.witness->literal.signed_value()));
    }
    auto reg = regularity(f);
    if (!reg.l) {
        raise(Errc::not_regular,
              "variables " + std::to_string(reg.witness->first_variable) + " and " +
                  std::to_string(reg.witness->second_variable) + " occur " +
                  std::to_string(reg.witness->first_occurrence) + " and " +
                  std::to_string(reg.witness->second_occurrence) + " times");
    }
    PrescreenResult result;
    result.regularity = *reg.l;
    result.remainder = f.clause_count() % *reg.l;
    result.pass = result.remainder == 0;
    return result;
}

}  // namespace lincnf

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lincnf/formula.hpp"
#include "lincnf/numeric.hpp"

namespace lincnf {

struct Residual {
    std::string item;
    Rational lhs;
    Rational rhs;
};

struct IdentityReport {
    std::string name;
    bool holds = true;
    int items_checked = 0;
    std::vector<Residual> failures;
};

// m = 1 + sum over x in V(C) of l(x) - |C| + d_C, checked per clause with
// d_C taken from the pair scan, so occurrence sums and disjointedness are
// computed on independent routes. Errc::not_linear.
IdentityReport verify_clause_size_identity(const Formula& f);

// n = 1 - l(x) + sum over clauses containing x of |C| + v_x, per variable.
// Errc::not_linear.
IdentityReport verify_variable_size_identity(const Formula& f);

// The exact-rational mean forms of the two identities above.
// Errc::not_linear, Errc::empty_formula.
IdentityReport verify_mean_identities(const Formula& f);

// Regular specializations: m = 1 + |C|(l-1) + d_C per clause plus the two
// mean forms with l fixed. Errc::not_linear, Errc::not_regular.
IdentityReport verify_regular_corollaries(const Formula& f);

// Size of a d-disjointed l-regular k-uniform linear formula, plus the
// congruence k = (1+d) mod l that is necessary for x-satisfiability.
struct SizeParameters {
    std::int64_t uniformity = 0;      // k
    std::int64_t regularity = 0;      // l
    std::int64_t disjointedness = 0;  // d
    std::int64_t clause_count = 0;    // m = 1 + k(l-1) + d
    std::int64_t variable_count = 0;  // n = km/l
    bool congruence_holds = false;
};

// Errc::inconsistent_parameters for k < 1, l < 1 or d < 0;
// Errc::non_integral_size when l does not divide km.
SizeParameters parameters_to_size(std::int64_t k, std::int64_t l, std::int64_t d);

// Integer form of the size relation solved for m: true iff
// m^2 - (1+d)m - n*l*(l-1) == 0. Exact, no square roots.
bool ml_quadratic_check(std::int64_t m, std::int64_t n, std::int64_t l, std::int64_t d);

// (1+d')/(2l) * (1 + sqrt(1 + 4nl(l-1)/(1+d')^2)); an upper bound on m/l,
// nondecreasing in both n and d_bound.
double ml_upper_bound(std::int64_t n, std::int64_t l, std::int64_t d_bound);

// sqrt(n(l-1)/l), a lower bound on m/l. Errc::degenerate_regularity for
// l < 2 (the bound is vacuous there).
double ml_bracket_lower(std::int64_t n, std::int64_t l);

// lower <= m/l <= (1+epsilon)*lower, compared with the reporting slack.
bool bracket_holds(std::int64_t m, std::int64_t n, std::int64_t l, double epsilon);

// The epsilon that makes the bracket tight: m/(l*lower) - 1.
double implied_epsilon(std::int64_t m, std::int64_t n, std::int64_t l);

// Comparison slack for the real-valued bound checks above. Identity checks
// never use it.
inline constexpr double kBoundSlack = 1e-9;

// d = nl/k - k(l-1) - 1 for k-uniform l-regular linear formulas.
// Errc::non_integral_size when k does not divide nl;
// Errc::negative_disjointedness when the result is negative.
std::int64_t uniform_disjointedness(std::int64_t n, std::int64_t k, std::int64_t l);

// m mod l test for monotone regular formulas. A nonzero remainder
// certifies x-unsatisfiability without search.
struct PrescreenResult {
    bool pass = false;
    std::int64_t regularity = 0;
    std::int64_t remainder = 0;
};

// Errc::not_monotone, Errc::not_regular.
PrescreenResult xsat_prescreen(const Formula& f);

}  // namespace lincnf

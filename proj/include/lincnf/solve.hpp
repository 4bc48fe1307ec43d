#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lincnf/formula.hpp"
#include "lincnf/numeric.hpp"

namespace lincnf {

enum class XsatStatus { satisfiable, unsatisfiable, budget_exhausted };
enum class XsatMethod { oracle, weight_restricted, prescreen };

const char* to_string(XsatStatus status);
const char* to_string(XsatMethod method);

struct XsatResult {
    XsatStatus status = XsatStatus::unsatisfiable;
    // Lexicographically least model, when one exists (or, on truncated
    // runs, the least found so far).
    std::optional<Assignment> first_model;
    BigInt model_count;                       // exact on complete runs
    std::uint64_t candidates_examined = 0;
    BigInt candidates_total;                  // 2^n or C(n, m/l)
    XsatMethod method = XsatMethod::oracle;
    bool complete = true;
};

// True iff the assignment makes exactly one literal true in every clause.
// A positive literal is true iff its variable is in the true set, a
// negative literal iff it is not. Errc::foreign_variable when the true set
// reaches outside V(F).
bool check_xsat(const Formula& f, const Assignment& a);

// Exhaustive scan of all 2^n assignments; exact count, lexicographically
// least model. Runs above 2^30 assignments (or n > 62) must be enabled by
// an explicit budget, otherwise Errc::too_large. Always runs to
// completion. The empty formula is satisfiable with the empty model.
XsatResult brute_force_xsat(const Formula& f, std::uint64_t budget = 0);

// The weight-restricted procedure for monotone l-regular formulas: if
// m mod l is nonzero the formula is x-unsatisfiable (method=prescreen);
// otherwise exactly the C(n, m/l) variable subsets of size m/l are tested
// in lexicographic order. A budget (default 2^30) truncates the
// enumeration with status=budget_exhausted and partial counts.
// Errc::not_monotone, Errc::not_regular.
XsatResult weight_restricted_xsat(const Formula& f, std::uint64_t budget = 0);

// C(n, m/l) for monotone l-regular formulas with m divisible by l.
// Errc::not_monotone, Errc::not_regular, Errc::prescreen_fail.
BigInt candidate_count(const Formula& f);

// All models in lexicographic order, via the brute-force scan (test and
// inspection aid; same caps as brute_force_xsat).
std::vector<Assignment> enumerate_models(const Formula& f,
                                         std::uint64_t budget = 0,
                                         std::size_t max_models = 1u << 20);

}  // namespace lincnf

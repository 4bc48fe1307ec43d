#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lincnf/formula.hpp"
#include "lincnf/numeric.hpp"

namespace lincnf {

// First clause pair violating a pairwise condition, with the shared set.
struct PairWitness {
    int first_clause = 0;
    int second_clause = 0;
    std::vector<Var> shared;
};

struct OccurrenceWitness {
    Var first_variable = 0;
    Var second_variable = 0;
    int first_occurrence = 0;
    int second_occurrence = 0;
};

struct SizeWitness {
    int first_clause = 0;
    int second_clause = 0;
    int first_size = 0;
    int second_size = 0;
};

struct PolarityWitness {
    int clause_index = 0;
    Literal literal;
};

struct LinearityVerdict {
    bool holds = true;
    std::optional<PairWitness> witness;  // present iff !holds
};

// Every clause pair shares at most one variable.
LinearityVerdict is_linear(const Formula& f);
// Every clause pair shares exactly one variable (vacuous for m <= 1).
LinearityVerdict is_exact_linear(const Formula& f);

struct MonotonicityVerdict {
    bool holds = true;
    std::optional<PolarityWitness> witness;
};

MonotonicityVerdict is_monotone(const Formula& f);

struct RegularityVerdict {
    std::optional<int> l;
    std::optional<OccurrenceWitness> witness;
};

// Common occurrence count, when all variables agree. Errc::empty_formula.
RegularityVerdict regularity(const Formula& f);

struct UniformityVerdict {
    std::optional<int> k;
    std::optional<SizeWitness> witness;
};

// Common clause size, when all clauses agree. Errc::empty_formula.
UniformityVerdict uniformity(const Formula& f);

// d_C: clauses other than C itself sharing no variable with C, counted by
// clause index so duplicate clauses are handled. Errc::index_out_of_range.
std::int64_t clause_disjointedness(const Formula& f, int clause_index);
std::vector<std::int64_t> disjointedness_profile(const Formula& f);
// Errc::empty_formula.
Rational mean_disjointedness(const Formula& f);

// v_x: variables of V(F) sharing no clause with x. Errc::unknown_variable.
std::int64_t variable_independence(const Formula& f, Var x);
std::vector<std::int64_t> independence_profile(const Formula& f);
// Errc::empty_formula when n = 0.
Rational mean_independence(const Formula& f);

// Full membership report. Means are absent for the empty formula. The two
// bounded-class verdicts are filled only when the corresponding bound is
// requested; both require linearity and regularity.
struct ClassReport {
    int clause_count = 0;
    int variable_count = 0;

    LinearityVerdict linear;
    LinearityVerdict exact_linear;
    MonotonicityVerdict monotone;
    RegularityVerdict regular;
    UniformityVerdict uniform;

    std::vector<std::int64_t> disjointedness;  // per clause
    std::optional<std::int64_t> common_disjointedness;
    std::optional<Rational> mean_disjointedness;

    std::vector<std::int64_t> independence;  // per universe variable
    std::optional<Rational> mean_independence;

    std::optional<std::int64_t> disjointedness_bound;
    std::optional<bool> in_bounded_disjointedness_class;

    std::optional<Rational> mean_disjointedness_bound;
    std::optional<bool> mean_within_bound;
    std::optional<bool> in_bounded_mean_class;
};

ClassReport classify(const Formula& f,
                     std::optional<std::int64_t> max_disjointedness = {},
                     std::optional<Rational> max_mean_disjointedness = {});

}  // namespace lincnf

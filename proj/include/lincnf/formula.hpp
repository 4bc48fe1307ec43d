#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lincnf/numeric.hpp"

namespace lincnf {

using Var = std::int32_t;

// One occurrence of a variable, possibly negated. Variables are 1-based.
struct Literal {
    Var variable = 0;
    bool negative = false;

    int signed_value() const noexcept { return negative ? -variable : variable; }

    friend auto operator<=>(const Literal&, const Literal&) = default;
};

// Throws on value 0 (reserved as the DIMACS terminator).
Literal literal_from_signed(int value);

// A duplicate-free set of literals, kept sorted by variable. The empty
// clause is representable; it makes any formula x-unsatisfiable.
class Clause {
public:
    Clause() = default;
    explicit Clause(std::vector<Literal> literals);

    int size() const noexcept { return static_cast<int>(literals_.size()); }
    bool empty() const noexcept { return literals_.empty(); }
    const std::vector<Literal>& literals() const noexcept { return literals_; }

    bool contains_variable(Var x) const;
    std::optional<Literal> literal_for(Var x) const;

    friend bool operator==(const Clause&, const Clause&) = default;

private:
    std::vector<Literal> literals_;
};

// V(C) ∩ V(C'), sorted.
std::vector<Var> shared_variables(const Clause& a, const Clause& b);

// Immutable clause collection. Clause order is preserved from input;
// the variable universe is the sorted set of occurring variables.
class Formula {
public:
    Formula() = default;
    explicit Formula(std::vector<Clause> clauses);

    int clause_count() const noexcept { return static_cast<int>(clauses_.size()); }
    int variable_count() const noexcept { return static_cast<int>(universe_.size()); }

    const std::vector<Clause>& clauses() const noexcept { return clauses_; }
    const Clause& clause(int index) const;  // Errc::index_out_of_range

    std::span<const Var> variables() const noexcept { return universe_; }

    // l(x); 0 for variables not in V(F).
    int occurrence(Var x) const;
    bool contains_variable(Var x) const;
    // Position of x in the sorted universe, if present.
    std::optional<int> variable_index(Var x) const;

    bool has_empty_clause() const noexcept { return has_empty_clause_; }

    // Signed-integer clauses, e.g. {{1,-2},{2,3}}.
    std::vector<std::vector<int>> to_raw() const;

private:
    std::vector<Clause> clauses_;
    std::vector<Var> universe_;
    std::vector<int> occurrences_;
    bool has_empty_clause_ = false;
};

// Validated construction from signed-integer clauses.
// Errc::zero_literal, Errc::duplicate_variable.
Formula build_formula(const std::vector<std::vector<int>>& raw_clauses);

int occurrence(const Formula& f, Var x);

// The four exact means over clause sizes and variable occurrences.
struct FormulaStats {
    int clause_count = 0;
    int variable_count = 0;
    Rational mean_clause_length;
    Rational mean_squared_clause_length;
    Rational mean_occurrence;
    Rational mean_squared_occurrence;
};

// Errc::empty_formula when m = 0. Maintains mean_clause_length * m ==
// mean_occurrence * n (both sides count total literal occurrences).
FormulaStats stats(const Formula& f);

// A truth assignment: the set of variables evaluated true, all other
// variables of V(F) false.
struct Assignment {
    std::vector<Var> true_variables;  // sorted, duplicate-free

    bool is_true(Var x) const;

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

Assignment make_assignment(std::vector<Var> true_variables);

// Clause-by-variable incidence: membership predicate, per-variable clause
// lists and per-clause connected-clause lists.
class IncidenceView {
public:
    explicit IncidenceView(const Formula& f);

    bool contains(int clause_index, Var x) const;
    // Indices of the clauses containing x. Errc::unknown_variable.
    const std::vector<int>& clauses_containing(Var x) const;
    // Indices of the clauses sharing at least one variable with the clause.
    const std::vector<int>& connected_clauses(int clause_index) const;

private:
    const Formula* formula_;
    std::vector<std::vector<int>> by_variable_;
    std::vector<std::vector<int>> connected_;
};

}  // namespace lincnf

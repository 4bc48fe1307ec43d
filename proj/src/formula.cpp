#include "lincnf/formula.hpp"

#include <algorithm>
#include <string>

#include "lincnf/error.hpp"

namespace lincnf {

Literal literal_from_signed(int value) {
    if (value == 0) raise(Errc::zero_literal, "literal value 0 is reserved");
    return Literal{static_cast<Var>(value < 0 ? -value : value), value < 0};
}

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
    std::sort(literals_.begin(), literals_.end(),
              [](const Literal& a, const Literal& b) { return a.variable < b.variable; });
    for (const Literal& lit : literals_) {
        if (lit.variable < 1) raise(Errc::zero_literal, "variables are 1-based");
    }
    for (std::size_t i = 1; i < literals_.size(); ++i) {
        if (literals_[i].variable == literals_[i - 1].variable) {
            raise(Errc::duplicate_variable,
                  "variable " + std::to_string(literals_[i].variable) + " occurs twice");
        }
    }
}

bool Clause::contains_variable(Var x) const {
    auto it = std::lower_bound(literals_.begin(), literals_.end(), x,
                               [](const Literal& lit, Var v) { return lit.variable < v; });
    return it != literals_.end() && it->variable == x;
}

std::optional<Literal> Clause::literal_for(Var x) const {
    auto it = std::lower_bound(literals_.begin(), literals_.end(), x,
                               [](const Literal& lit, Var v) { return lit.variable < v; });
    if (it != literals_.end() && it->variable == x) return *it;
    return std::nullopt;
}

std::vector<Var> shared_variables(const Clause& a, const Clause& b) {
    std::vector<Var> shared;
    auto ia = a.literals().begin();
    auto ib = b.literals().begin();
    while (ia != a.literals().end() && ib != b.literals().end()) {
        if (ia->variable < ib->variable) {
            ++ia;
        } else if (ib->variable < ia->variable) {
            ++ib;
        } else {
            shared.push_back(ia->variable);
            ++ia;
            ++ib;
        }
    }
    return shared;
}

Formula::Formula(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
    for (const Clause& c : clauses_) {
        if (c.empty()) has_empty_clause_ = true;
        for (const Literal& lit : c.literals()) universe_.push_back(lit.variable);
    }
    std::sort(universe_.begin(), universe_.end());
    universe_.erase(std::unique(universe_.begin(), universe_.end()), universe_.end());
    occurrences_.assign(universe_.size(), 0);
    for (const Clause& c : clauses_) {
        for (const Literal& lit : c.literals()) {
            auto idx = variable_index(lit.variable);
            ++occurrences_[static_cast<std::size_t>(*idx)];
        }
    }
}

const Clause& Formula::clause(int index) const {
    if (index < 0 || index >= clause_count()) {
        raise(Errc::index_out_of_range,
              "clause index " + std::to_string(index) + " of " + std::to_string(clause_count()));
    }
    return clauses_[static_cast<std::size_t>(index)];
}

int Formula::occurrence(Var x) const {
    auto idx = variable_index(x);
    return idx ? occurrences_[static_cast<std::size_t>(*idx)] : 0;
}

bool Formula::contains_variable(Var x) const { return variable_index(x).has_value(); }

std::optional<int> Formula::variable_index(Var x) const {
    auto it = std::lower_bound(universe_.begin(), universe_.end(), x);
    if (it != universe_.end() && *it == x) {
        return static_cast<int>(it - universe_.begin());
    }
    return std::nullopt;
}

std::vector<std::vector<int>> Formula::to_raw() const {
    std::vector<std::vector<int>> raw;
    raw.reserve(clauses_.size());
    for (const Clause& c : clauses_) {
        std::vector<int> entry;
        entry.reserve(static_cast<std::size_t>(c.size()));
        for (const Literal& lit : c.literals()) entry.push_back(lit.signed_value());
        raw.push_back(std::move(entry));
    }
    return raw;
}

Formula build_formula(const std::vector<std::vector<int>>& raw_clauses) {
    std::vector<Clause> clauses;
    clauses.reserve(raw_clauses.size());
    for (std::size_t ci = 0; ci < raw_clauses.size(); ++ci) {
        std::vector<Literal> literals;
        literals.reserve(raw_clauses[ci].size());
        for (int value : raw_clauses[ci]) {
            if (value == 0) {
                raise(Errc::zero_literal, "clause " + std::to_string(ci) + " contains 0");
            }
            literals.push_back(literal_from_signed(value));
        }
        std::sort(literals.begin(), literals.end(),
                  [](const Literal& a, const Literal& b) { return a.variable < b.variable; });
        for (std::size_t i = 1; i < literals.size(); ++i) {
            if (literals[i].variable == literals[i - 1].variable) {
                raise(Errc::duplicate_variable,
                      "clause " + std::to_string(ci) + " repeats variable " +
                          std::to_string(literals[i].variable));
            }
        }
        clauses.emplace_back(std::move(literals));
    }
    return Formula(std::move(clauses));
}

int occurrence(const Formula& f, Var x) { return f.occurrence(x); }

FormulaStats stats(const Formula& f) {
    if (f.clause_count() == 0) raise(Errc::empty_formula, "stats need at least one clause");
    FormulaStats s;
    s.clause_count = f.clause_count();
    s.variable_count = f.variable_count();
    BigInt size_sum = 0, size_sq_sum = 0;
    for (const Clause& c : f.clauses()) {
        size_sum += c.size();
        size_sq_sum += BigInt(c.size()) * c.size();
    }
    BigInt occ_sum = 0, occ_sq_sum = 0;
    for (Var x : f.variables()) {
        int l = f.occurrence(x);
        occ_sum += l;
        occ_sq_sum += BigInt(l) * l;
    }
    s.mean_clause_length = Rational(size_sum, f.clause_count());
    s.mean_squared_clause_length = Rational(size_sq_sum, f.clause_count());
    if (f.variable_count() > 0) {
        s.mean_occurrence = Rational(occ_sum, f.variable_count());
        s.mean_squared_occurrence = Rational(occ_sq_sum, f.variable_count());
    }
    return s;
}

bool Assignment::is_true(Var x) const {
    return std::binary_search(true_variables.begin(), true_variables.end(), x);
}

Assignment make_assignment(std::vector<Var> true_variables) {
    std::sort(true_variables.begin(), true_variables.end());
    true_variables.erase(std::unique(true_variables.begin(), true_variables.end()),
                         true_variables.end());
    return Assignment{std::move(true_variables)};
}

IncidenceView::IncidenceView(const Formula& f) : formula_(&f) {
    by_variable_.resize(static_cast<std::size_t>(f.variable_count()));
    for (int ci = 0; ci < f.clause_count(); ++ci) {
        for (const Literal& lit : f.clause(ci).literals()) {
            by_variable_[static_cast<std::size_t>(*f.variable_index(lit.variable))].push_back(ci);
        }
    }
    connected_.resize(static_cast<std::size_t>(f.clause_count()));
    for (int ci = 0; ci < f.clause_count(); ++ci) {
        std::vector<int>& conn = connected_[static_cast<std::size_t>(ci)];
        for (const Literal& lit : f.clause(ci).literals()) {
            for (int other : by_variable_[static_cast<std::size_t>(*f.variable_index(lit.variable))]) {
                if (other != ci) conn.push_back(other);
            }
        }
        std::sort(conn.begin(), conn.end());
        conn.erase(std::unique(conn.begin(), conn.end()), conn.end());
    }
}

bool IncidenceView::contains(int clause_index, Var x) const {
    return formula_->clause(clause_index).contains_variable(x);
}

const std::vector<int>& IncidenceView::clauses_containing(Var x) const {
    auto idx = formula_->variable_index(x);
    if (!idx) raise(Errc::unknown_variable, "variable " + std::to_string(x) + " not in V(F)");
    return by_variable_[static_cast<std::size_t>(*idx)];
}

const std::vector<int>& IncidenceView::connected_clauses(int clause_index) const {
    if (clause_index < 0 || clause_index >= formula_->clause_count()) {
        raise(Errc::index_out_of_range, "clause index " + std::to_string(clause_index));
    }
    return connected_[static_cast<std::size_t>(clause_index)];
}

}  // namespace lincnf

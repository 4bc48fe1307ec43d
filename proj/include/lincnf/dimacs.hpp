#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lincnf/formula.hpp"

namespace lincnf {

// A parsed DIMACS CNF file. The declared variable count is carried
// separately from |V(F)|: analysis always uses occurring variables.
struct DimacsDocument {
    int declared_variable_count = 0;
    int declared_clause_count = 0;
    std::vector<std::string> comments;  // without the leading "c "
    std::vector<std::string> warnings;  // e.g. declared-but-unused variables
    Formula formula;
};

// Errc::malformed_header, Errc::clause_count_mismatch,
// Errc::variable_out_of_declared_range, Errc::zero_literal,
// Errc::duplicate_variable. Messages carry 1-based line numbers.
DimacsDocument parse_dimacs(const std::string& text);
DimacsDocument parse_dimacs_file(const std::string& path);  // + file errors

// Header "p cnf <N> <m>" with N the maximum variable id unless declared_n
// is given; comments first, one clause per line, 0-terminated.
// parse(write(F)) reproduces the clause sets and polarities exactly.
std::string write_dimacs(const Formula& f,
                         std::optional<int> declared_n = {},
                         const std::vector<std::string>& comments = {});

}  // namespace lincnf

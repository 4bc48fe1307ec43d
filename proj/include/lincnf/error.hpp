#pragma once

#include <stdexcept>
#include <string>

namespace lincnf {

// Every failure mode the library reports. Names follow the condition they
// signal; the CLI prints them verbatim.
enum class Errc {
    zero_literal,
    duplicate_variable,
    empty_formula,
    index_out_of_range,
    unknown_variable,
    foreign_variable,
    not_linear,
    not_regular,
    not_monotone,
    not_prime,
    non_integral_size,
    negative_disjointedness,
    inconsistent_parameters,
    degenerate_regularity,
    prescreen_fail,
    too_large,
    budget_exhausted,
    malformed_header,
    clause_count_mismatch,
    variable_out_of_declared_range,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& message);

}  // namespace lincnf

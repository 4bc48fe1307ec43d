#include "lincnf/error.hpp"

namespace lincnf {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::zero_literal: return "ZeroLiteral";
        case Errc::duplicate_variable: return "DuplicateVariableInClause";
        case Errc::empty_formula: return "EmptyFormula";
        case Errc::index_out_of_range: return "IndexOutOfRange";
        case Errc::unknown_variable: return "UnknownVariable";
        case Errc::foreign_variable: return "ForeignVariable";
        case Errc::not_linear: return "NotLinear";
        case Errc::not_regular: return "NotRegular";
        case Errc::not_monotone: return "NotMonotone";
        case Errc::not_prime: return "NotPrime";
        case Errc::non_integral_size: return "NonIntegralSize";
        case Errc::negative_disjointedness: return "NegativeDisjointedness";
        case Errc::inconsistent_parameters: return "InconsistentParameters";
        case Errc::degenerate_regularity: return "DegenerateRegularity";
        case Errc::prescreen_fail: return "PrescreenFail";
        case Errc::too_large: return "TooLarge";
        case Errc::budget_exhausted: return "BudgetExhausted";
        case Errc::malformed_header: return "MalformedHeader";
        case Errc::clause_count_mismatch: return "ClauseCountMismatch";
        case Errc::variable_out_of_declared_range: return "VariableOutOfDeclaredRange";
    }
    return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void raise(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace lincnf

#include <doctest.h>

#include "fixtures.hpp"
#include "lincnf/classify.hpp"
#include "lincnf/error.hpp"

using namespace lincnf;

TEST_CASE("linearity with first-violation witness") {
    CHECK(is_linear(fixtures::chain_pair()).holds);
    CHECK(is_linear(fixtures::fano()).holds);

    auto verdict = is_linear(build_formula({{1, 2, 3}, {1, 2, 4}}));
    REQUIRE(!verdict.holds);
    CHECK(verdict.witness->first_clause == 0);
    CHECK(verdict.witness->second_clause == 1);
    CHECK(verdict.witness->shared == std::vector<Var>{1, 2});
}

TEST_CASE("exact linearity") {
    CHECK(is_exact_linear(fixtures::fano()).holds);
    CHECK(is_exact_linear(build_formula({{1, 2, 3}})).holds);  // vacuous

    auto verdict = is_exact_linear(fixtures::four_cycle());
    REQUIRE(!verdict.holds);
    CHECK(verdict.witness->first_clause == 0);
    CHECK(verdict.witness->second_clause == 1);
    CHECK(verdict.witness->shared.empty());
}

TEST_CASE("monotonicity") {
    CHECK(is_monotone(build_formula({{1, 2}, {2, 3}})).holds);
    CHECK(is_monotone(Formula{}).holds);  // vacuous

    auto verdict = is_monotone(build_formula({{1, -2}}));
    REQUIRE(!verdict.holds);
    CHECK(verdict.witness->clause_index == 0);
    CHECK(verdict.witness->literal.signed_value() == -2);
}

TEST_CASE("regularity verdicts") {
    CHECK(regularity(fixtures::fano()).l == 3);
    CHECK(regularity(fixtures::four_cycle()).l == 2);

    auto verdict = regularity(fixtures::chain_pair());
    REQUIRE(!verdict.l.has_value());
    CHECK(verdict.witness->first_variable == 1);
    CHECK(verdict.witness->second_variable == 2);
    CHECK(verdict.witness->first_occurrence == 1);
    CHECK(verdict.witness->second_occurrence == 2);

    CHECK_THROWS_AS(regularity(Formula{}), Error);
}

TEST_CASE("uniformity verdicts") {
    CHECK(uniformity(fixtures::fano()).k == 3);
    CHECK(uniformity(fixtures::four_cycle()).k == 2);
    CHECK(!uniformity(build_formula({{1, 2}, {1, 3, 4}})).k.has_value());
    CHECK_THROWS_AS(uniformity(Formula{}), Error);
}

TEST_CASE("clause disjointedness by pair scan") {
    Formula f = fixtures::chain_pair();
    CHECK(clause_disjointedness(f, 0) == 1);
    CHECK(clause_disjointedness(f, 1) == 1);
    CHECK(clause_disjointedness(f, 2) == 2);
    for (int i = 0; i < 7; ++i) CHECK(clause_disjointedness(fixtures::fano(), i) == 0);
    CHECK(clause_disjointedness(fixtures::four_cycle(), 0) == 1);
    CHECK_THROWS_AS(clause_disjointedness(f, 5), Error);
}

TEST_CASE("mean disjointedness") {
    CHECK(mean_disjointedness(fixtures::chain_pair()) == Rational(4, 3));
    CHECK(mean_disjointedness(fixtures::fano()) == Rational(0));
    CHECK(mean_disjointedness(build_formula({{1, 2}, {3, 4}})) == Rational(1));
    CHECK_THROWS_AS(mean_disjointedness(Formula{}), Error);
}

TEST_CASE("variable independence") {
    Formula f = fixtures::chain_pair();
    CHECK(variable_independence(f, 1) == 3);
    CHECK(variable_independence(f, 2) == 2);
    CHECK(variable_independence(build_formula({{1, 2, 3}}), 1) == 0);
    CHECK_THROWS_AS(variable_independence(f, 9), Error);
}

TEST_CASE("mean independence") {
    CHECK(mean_independence(fixtures::chain_pair()) == Rational(14, 5));
    CHECK(mean_independence(fixtures::fano()) == Rational(0));
    CHECK(mean_independence(build_formula({{1, 2, 3}})) == Rational(0));
}

TEST_CASE("classify the Fano plane") {
    ClassReport report = classify(fixtures::fano(), 0, Rational(0));
    CHECK(report.linear.holds);
    CHECK(report.exact_linear.holds);
    CHECK(report.monotone.holds);
    CHECK(report.regular.l == 3);
    CHECK(report.uniform.k == 3);
    CHECK(report.common_disjointedness == 0);
    CHECK(report.mean_disjointedness == Rational(0));
    CHECK(report.in_bounded_disjointedness_class == true);
    CHECK(report.in_bounded_mean_class == true);
}

TEST_CASE("classify the 4-cycle: member of (<=1) but not (<=0)") {
    Formula f = fixtures::four_cycle();
    ClassReport at_one = classify(f, 1, {});
    CHECK(at_one.linear.holds);
    CHECK(!at_one.exact_linear.holds);
    CHECK(at_one.regular.l == 2);
    CHECK(at_one.uniform.k == 2);
    CHECK(at_one.common_disjointedness == 1);
    CHECK(at_one.in_bounded_disjointedness_class == true);

    ClassReport at_zero = classify(f, 0, {});
    CHECK(at_zero.in_bounded_disjointedness_class == false);
}

TEST_CASE("classify an irregular formula: mean bound without membership") {
    ClassReport report = classify(fixtures::chain_pair(), {}, Rational(2));
    CHECK(report.linear.holds);
    CHECK(!report.regular.l.has_value());
    CHECK(report.uniform.k == 2);  // sizes are 2,2,2; only regularity fails
    CHECK(report.mean_disjointedness == Rational(4, 3));
    CHECK(report.mean_within_bound == true);
    // Not a member of the regular bounded-mean class: regularity is absent.
    CHECK(report.in_bounded_mean_class == false);
}

TEST_CASE("duplicate clauses break linearity only from size 2 upward") {
    auto dup2 = classify(build_formula({{1, 2}, {1, 2}}));
    CHECK(!dup2.linear.holds);

    auto dup1 = classify(build_formula({{1}, {1}}));
    CHECK(dup1.linear.holds);
    CHECK(dup1.exact_linear.holds);
    CHECK(dup1.regular.l == 2);
    CHECK(dup1.common_disjointedness == 0);
}

TEST_CASE("empty formula classifies vacuously") {
    ClassReport report = classify(Formula{});
    CHECK(report.linear.holds);
    CHECK(report.exact_linear.holds);
    CHECK(report.monotone.holds);
    CHECK(!report.regular.l.has_value());
    CHECK(!report.mean_disjointedness.has_value());
}

TEST_CASE("classification is deterministic") {
    Formula f = fixtures::four_cycle();
    ClassReport a = classify(f, 1, Rational(1));
    ClassReport b = classify(f, 1, Rational(1));
    CHECK(a.disjointedness == b.disjointedness);
    CHECK(a.independence == b.independence);
    CHECK(a.common_disjointedness == b.common_disjointedness);
    CHECK(a.in_bounded_disjointedness_class == b.in_bounded_disjointedness_class);
}

#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "lincnf/error.hpp"
#include "lincnf/identities.hpp"

using namespace lincnf;

TEST_CASE("clause count identity per clause") {
    // chain_pair, clause {1,2}: 3 = 1 + (1+2) - 2 + 1.
    auto report = verify_clause_size_identity(fixtures::chain_pair());
    CHECK(report.holds);
    CHECK(report.items_checked == 3);
    CHECK(verify_clause_size_identity(fixtures::fano()).holds);       // 7 = 1+9-3+0
    CHECK(verify_clause_size_identity(build_formula({{1, 2, 3}})).holds);  // 1 = 1+k-k+0
    CHECK_THROWS_AS(verify_clause_size_identity(build_formula({{1, 2, 3}, {1, 2, 4}})), Error);
}

TEST_CASE("variable count identity per variable") {
    // chain_pair, x=1: 5 = 1-1+2+3; x=2: 5 = 1-2+4+2.
    auto report = verify_variable_size_identity(fixtures::chain_pair());
    CHECK(report.holds);
    CHECK(report.items_checked == 5);
    CHECK(verify_variable_size_identity(fixtures::fano()).holds);  // 7 = 1-3+9+0
}

TEST_CASE("mean identities as exact rationals") {
    // chain_pair: 3 = 1 + (5/3)(2/5) + 4/3 and 5 = 1 + (3/5)*2 + 14/5.
    CHECK(verify_mean_identities(fixtures::chain_pair()).holds);
    // Fano: 7 = 1 + 1*6 + 0 and 7 = 1 + 3*2 + 0.
    CHECK(verify_mean_identities(fixtures::fano()).holds);
    // 1-regular pair: 2 = 1 + 1*0 + 1.
    CHECK(verify_mean_identities(build_formula({{1, 2}, {3, 4}})).holds);
    CHECK_THROWS_AS(verify_mean_identities(Formula{}), Error);
}

TEST_CASE("regular corollaries") {
    CHECK(verify_regular_corollaries(fixtures::fano()).holds);        // 7 = 1+3*2+0
    CHECK(verify_regular_corollaries(fixtures::four_cycle()).holds);  // 4 = 1+2*1+1
    CHECK(verify_regular_corollaries(fixtures::blocks_3x2()).holds);  // 3 = 1+2*0+2
    CHECK_THROWS_AS(verify_regular_corollaries(fixtures::chain_pair()), Error);
}

TEST_CASE("parameters_to_size") {
    SizeParameters fano = parameters_to_size(3, 3, 0);
    CHECK(fano.clause_count == 7);
    CHECK(fano.variable_count == 7);
    CHECK(!fano.congruence_holds);  // 7 mod 3 != 0: the plane is x-unsatisfiable

    SizeParameters cycle = parameters_to_size(2, 2, 1);
    CHECK(cycle.clause_count == 4);
    CHECK(cycle.variable_count == 4);
    CHECK(cycle.congruence_holds);

    SizeParameters triangle = parameters_to_size(2, 2, 0);
    CHECK(triangle.clause_count == 3);
    CHECK(triangle.variable_count == 3);

    CHECK_THROWS_AS(parameters_to_size(2, 3, 0), Error);  // n = 10/3
    CHECK_THROWS_AS(parameters_to_size(0, 1, 0), Error);
}

TEST_CASE("quadratic form of the size relation") {
    CHECK(ml_quadratic_check(7, 7, 3, 0));   // 49-7-42 = 0
    CHECK(ml_quadratic_check(4, 4, 2, 1));   // 16-8-8 = 0
    CHECK(!ml_quadratic_check(5, 4, 2, 1));  // 25-10-8 = 7
}

TEST_CASE("upper bound on m/l") {
    CHECK(ml_upper_bound(4, 2, 1) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(ml_upper_bound(7, 3, 0) == doctest::Approx(7.0 / 3.0).epsilon(1e-12));
    // (1 + sqrt(33))/4: 4nl(l-1) = 32 at n=4, l=2, d'=0.
    CHECK(ml_upper_bound(4, 2, 0) ==
          doctest::Approx((1.0 + std::sqrt(33.0)) / 4.0).epsilon(1e-12));

    // Monotone nondecreasing in the disjointedness bound and in n.
    for (int d = 0; d < 10; ++d) {
        CHECK(ml_upper_bound(12, 3, d) <= ml_upper_bound(12, 3, d + 1) + 1e-12);
        CHECK(ml_upper_bound(12 + d, 3, 2) <= ml_upper_bound(13 + d, 3, 2) + 1e-12);
    }
}

TEST_CASE("lower bracket bound") {
    CHECK(ml_bracket_lower(4, 2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(ml_bracket_lower(7, 3) == doctest::Approx(std::sqrt(14.0 / 3.0)).epsilon(1e-12));
    CHECK(ml_bracket_lower(1, 2) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK_THROWS_AS(ml_bracket_lower(4, 1), Error);
}

TEST_CASE("bracket convenience check and implied epsilon") {
    // 4-cycle: m/l = 2, lower = sqrt(2).
    double eps = implied_epsilon(4, 4, 2);
    CHECK(bracket_holds(4, 4, 2, eps));
    CHECK(!bracket_holds(4, 4, 2, eps - 0.01));
    CHECK(bracket_holds(4, 4, 2, 1.0));
}

TEST_CASE("uniform obstruction value") {
    CHECK(uniform_disjointedness(7, 3, 3) == 0);
    CHECK(uniform_disjointedness(4, 2, 2) == 1);
    CHECK(uniform_disjointedness(3, 2, 2) == 0);
    CHECK_THROWS_AS(uniform_disjointedness(7, 3, 2), Error);  // 14/3
    CHECK_THROWS_AS(uniform_disjointedness(1, 2, 3), Error);  // d < 0
}

TEST_CASE("prescreen") {
    auto fano = xsat_prescreen(fixtures::fano());
    CHECK(!fano.pass);
    CHECK(fano.remainder == 1);
    CHECK(fano.regularity == 3);

    CHECK(xsat_prescreen(fixtures::four_cycle()).pass);
    CHECK(xsat_prescreen(fixtures::blocks_3x2()).pass);  // l=1: everything is 0 mod 1

    CHECK_THROWS_AS(xsat_prescreen(build_formula({{1, -2}, {1, 2}})), Error);
    CHECK_THROWS_AS(xsat_prescreen(fixtures::chain_pair()), Error);
}

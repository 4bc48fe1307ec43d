#include <doctest.h>

#include <array>

#include "fixtures.hpp"
#include "lincnf/classify.hpp"
#include "lincnf/dimacs.hpp"
#include "lincnf/error.hpp"
#include "lincnf/generate.hpp"
#include "lincnf/identities.hpp"

using namespace lincnf;

namespace {

void check_class(const Formula& f, int k, int l, std::int64_t d, bool exact) {
    ClassReport report = classify(f);
    CHECK(report.linear.holds);
    CHECK(report.monotone.holds);
    CHECK(report.uniform.k == k);
    CHECK(report.regular.l == l);
    CHECK(report.common_disjointedness == d);
    CHECK(report.exact_linear.holds == exact);
}

}  // namespace

TEST_CASE("projective planes over prime fields") {
    Formula fano = gen_projective_plane(2);
    CHECK(fano.clause_count() == 7);
    CHECK(fano.variable_count() == 7);
    check_class(fano, 3, 3, 0, true);

    Formula pg3 = gen_projective_plane(3);
    CHECK(pg3.clause_count() == 13);
    CHECK(pg3.variable_count() == 13);
    check_class(pg3, 4, 4, 0, true);
    // m = 1 + k(l-1) with d = 0.
    CHECK(pg3.clause_count() == 1 + 4 * (4 - 1));

    CHECK_THROWS_AS(gen_projective_plane(4), Error);
    CHECK_THROWS_AS(gen_projective_plane(1), Error);
    CHECK_THROWS_AS(gen_projective_plane(-7), Error);
}

TEST_CASE("even cycles") {
    Formula c4 = gen_cycle(2);
    CHECK(c4.clause_count() == 4);
    check_class(c4, 2, 2, 1, false);

    Formula c6 = gen_cycle(3);
    CHECK(c6.clause_count() == 6);
    check_class(c6, 2, 2, 3, false);
    CHECK(verify_regular_corollaries(c6).holds);  // 6 = 1 + 2*1 + 3

    CHECK_THROWS_AS(gen_cycle(1), Error);
}

TEST_CASE("disjoint blocks") {
    Formula b32 = gen_disjoint_blocks(3, 2);
    CHECK(b32.to_raw() == std::vector<std::vector<int>>{{1, 2}, {3, 4}, {5, 6}});
    check_class(b32, 2, 1, 2, false);

    Formula b13 = gen_disjoint_blocks(1, 3);
    CHECK(b13.clause_count() == 1);
    CHECK(b13.variable_count() == 3);

    Formula b21 = gen_disjoint_blocks(2, 1);
    CHECK(b21.to_raw() == std::vector<std::vector<int>>{{1}, {2}});
}

TEST_CASE("search finds the canonical 4-cycle and Fano") {
    SearchResult c4 = gen_dlcnf_search(2, 2, 1);
    REQUIRE(c4.formula.has_value());
    check_class(*c4.formula, 2, 2, 1, false);
    CHECK(c4.formula->clause_count() == 4);

    SearchResult fano = gen_dlcnf_search(3, 3, 0);
    REQUIRE(fano.formula.has_value());
    check_class(*fano.formula, 3, 3, 0, true);
    CHECK(fano.formula->clause_count() == 7);
    // Canonical labeling: first clause is {1,2,3}.
    CHECK(fano.formula->to_raw()[0] == std::vector<int>{1, 2, 3});
}

TEST_CASE("search rejects non-integral parameters") {
    try {
        gen_dlcnf_search(2, 3, 0);  // m=5, n=10/3
        FAIL("expected InconsistentParameters");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::inconsistent_parameters);
    }
}

TEST_CASE("search proves nonexistence by exhaustion") {
    // k=2, l=4, d=1: m=8, n=4, but only 6 distinct pairs over 4 variables
    // and duplicates are non-linear, so no instance exists.
    SearchResult result = gen_dlcnf_search(2, 4, 1);
    CHECK(!result.formula.has_value());
    CHECK(result.exhausted);
}

TEST_CASE("search distinguishes budget exhaustion") {
    SearchResult result = gen_dlcnf_search(3, 3, 0, /*budget=*/5);
    CHECK(!result.formula.has_value());
    CHECK(!result.exhausted);
    CHECK(result.nodes_visited >= 5);
}

TEST_CASE("search results recover the requested size parameters exactly") {
    for (auto [k, l, d] : std::vector<std::array<int, 3>>{
             {2, 2, 1}, {3, 3, 0}, {2, 2, 0}, {2, 2, 3}, {4, 2, 0}, {1, 3, 0}}) {
        SizeParameters params = parameters_to_size(k, l, d);
        SearchResult result = gen_dlcnf_search(k, l, d);
        REQUIRE(result.formula.has_value());
        const Formula& f = *result.formula;
        CHECK(f.clause_count() == params.clause_count);
        CHECK(f.variable_count() == params.variable_count);
        CHECK(ml_quadratic_check(f.clause_count(), f.variable_count(), l, d));
        check_class(f, k, l, d, d == 0 && f.clause_count() >= 2);
    }
}

TEST_CASE("random linear formulas are linear and respect the stop rules") {
    Formula tiny = gen_random_linear(1, 1, 1, 0);
    CHECK(tiny.to_raw() == std::vector<std::vector<int>>{{1}});

    Formula f = gen_random_linear(12, 2, 4, 7);
    CHECK(is_linear(f).holds);
    CHECK(f.variable_count() <= 12);
    CHECK(verify_clause_size_identity(f).holds);
    CHECK(verify_variable_size_identity(f).holds);

    CHECK_THROWS_AS(gen_random_linear(3, 2, 4, 1), Error);  // k_max > target_n
}

TEST_CASE("determinism: identical specs give byte-identical DIMACS") {
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::random_linear;
    spec.target_n = 10;
    spec.k_min = 2;
    spec.k_max = 3;
    spec.seed = 123;
    GeneratedInstance a = run_generator(spec);
    GeneratedInstance b = run_generator(spec);
    CHECK(write_dimacs(a.formula, {}, a.comments) == write_dimacs(b.formula, {}, b.comments));

    spec.kind = GeneratorSpec::Kind::dlcnf_search;
    spec.k = 2;
    spec.l = 2;
    spec.d = 1;
    GeneratedInstance c = run_generator(spec);
    GeneratedInstance d = run_generator(spec);
    CHECK(write_dimacs(c.formula, {}, c.comments) == write_dimacs(d.formula, {}, d.comments));
}

TEST_CASE("generator metadata comments carry the class parameters") {
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::cycle;
    spec.t = 2;
    spec.seed = 9;
    GeneratedInstance instance = run_generator(spec);
    REQUIRE(!instance.comments.empty());
    CHECK(instance.comments[0] == "class kind=cycle t=2 k=2 l=2 d=1 seed=9");
}

TEST_CASE("run_generator raises when the search finds nothing") {
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::dlcnf_search;
    spec.k = 2;
    spec.l = 4;
    spec.d = 1;
    try {
        run_generator(spec);
        FAIL("expected BudgetExhausted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::budget_exhausted);
        CHECK(std::string(e.what()).find("no instance") != std::string::npos);
    }
}

TEST_CASE("seeded corpus is reproducible and obeys the clause cap") {
    auto a = seeded_linear_corpus(20, 42, 40);
    auto b = seeded_linear_corpus(20, 42, 40);
    REQUIRE(a.size() == 20);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].to_raw() == b[i].to_raw());
        CHECK(a[i].clause_count() <= 40);
        CHECK(is_linear(a[i]).holds);
    }
}

#include <doctest.h>

#include "fixtures.hpp"
#include "lincnf/dimacs.hpp"
#include "lincnf/error.hpp"

using namespace lincnf;

TEST_CASE("parse a plain file") {
    DimacsDocument doc = parse_dimacs("p cnf 5 3\n1 2 0\n2 3 0\n4 5 0\n");
    CHECK(doc.formula.clause_count() == 3);
    CHECK(doc.formula.variable_count() == 5);
    CHECK(doc.declared_variable_count == 5);
    CHECK(doc.declared_clause_count == 3);
    CHECK(doc.warnings.empty());
}

TEST_CASE("parse the Fano fixture") {
    std::string text = write_dimacs(fixtures::fano());
    DimacsDocument doc = parse_dimacs(text);
    CHECK(doc.formula.clause_count() == 7);
    CHECK(doc.formula.variable_count() == 7);
}

TEST_CASE("duplicate variable inside a clause is a parse error") {
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 1 0\n"), Error);
    try {
        parse_dimacs("p cnf 2 1\n1 1 0\n");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::duplicate_variable);
    }
}

TEST_CASE("header errors carry line numbers") {
    try {
        parse_dimacs("p dnf 2 1\n1 2 0\n");
        FAIL("expected MalformedHeader");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::malformed_header);
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_dimacs("1 2 0\n"), Error);
    CHECK_THROWS_AS(parse_dimacs(""), Error);
}

TEST_CASE("declared counts are validated") {
    try {
        parse_dimacs("p cnf 5 2\n1 2 0\n");
        FAIL("expected ClauseCountMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::clause_count_mismatch);
    }
    try {
        parse_dimacs("p cnf 2 1\n1 3 0\n");
        FAIL("expected VariableOutOfDeclaredRange");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::variable_out_of_declared_range);
    }
}

TEST_CASE("declared-but-unused variables warn instead of failing") {
    DimacsDocument doc = parse_dimacs("p cnf 9 1\n1 2 0\n");
    CHECK(doc.formula.variable_count() == 2);
    CHECK(doc.declared_variable_count == 9);
    REQUIRE(!doc.warnings.empty());
    CHECK(doc.warnings[0].find("never occur") != std::string::npos);
}

TEST_CASE("comments are preserved and re-emitted before the header") {
    DimacsDocument doc = parse_dimacs("c hello\nc class k=2\np cnf 2 1\n1 2 0\n");
    CHECK(doc.comments == std::vector<std::string>{"hello", "class k=2"});
    std::string out = write_dimacs(doc.formula, doc.declared_variable_count, doc.comments);
    CHECK(out == "c hello\nc class k=2\np cnf 2 1\n1 2 0\n");
}

TEST_CASE("write_dimacs exact bytes") {
    CHECK(write_dimacs(build_formula({{1, 2}})) == "p cnf 2 1\n1 2 0\n");
    CHECK(write_dimacs(Formula{}) == "p cnf 0 0\n");
    CHECK(write_dimacs(build_formula({{1, -2}})) == "p cnf 2 1\n1 -2 0\n");
}

TEST_CASE("round-trip preserves clause sets and polarities") {
    for (const auto& raw : std::vector<std::vector<std::vector<int>>>{
             {{1, 2}, {2, 3}, {4, 5}},
             {{1, -2}, {-3, 4, 5}},
             {{7}},
         }) {
        Formula f = build_formula(raw);
        Formula back = parse_dimacs(write_dimacs(f)).formula;
        CHECK(back.to_raw() == f.to_raw());
    }
}

TEST_CASE("unterminated final clause is tolerated with a warning") {
    DimacsDocument doc = parse_dimacs("p cnf 3 2\n1 2 0\n2 3\n");
    CHECK(doc.formula.clause_count() == 2);
    REQUIRE(!doc.warnings.empty());
    CHECK(doc.warnings[0].find("not 0-terminated") != std::string::npos);
}

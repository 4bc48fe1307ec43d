// Python bindings for the lincnf core. Reports cross the boundary as plain
// dicts through the same JSON schema the CLI prints, so both front ends
// stay in lockstep.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "lincnf/classify.hpp"
#include "lincnf/dimacs.hpp"
#include "lincnf/error.hpp"
#include "lincnf/generate.hpp"
#include "lincnf/identities.hpp"
#include "lincnf/json_report.hpp"
#include "lincnf/solve.hpp"

namespace py = pybind11;
using namespace lincnf;

namespace {

py::object json_to_py(const nlohmann::json& value) {
    switch (value.type()) {
        case nlohmann::json::value_t::null:
            return py::none();
        case nlohmann::json::value_t::boolean:
            return py::bool_(value.get<bool>());
        case nlohmann::json::value_t::number_integer:
            return py::int_(value.get<std::int64_t>());
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(value.get<std::uint64_t>());
        case nlohmann::json::value_t::number_float:
            return py::float_(value.get<double>());
        case nlohmann::json::value_t::string:
            return py::str(value.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& item : value) out.append(json_to_py(item));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (const auto& [key, item] : value.items()) {
                out[py::str(key)] = json_to_py(item);
            }
            return out;
        }
        default:
            return py::none();
    }
}

py::int_ bigint_to_py(const BigInt& value) {
    return py::module_::import("builtins").attr("int")(value.str());
}

py::dict xsat_result_to_py(const XsatResult& result, const Formula& f) {
    py::dict out = json_to_py(to_json(result, f));
    out["model_count"] = bigint_to_py(result.model_count);
    out["candidates_total"] = bigint_to_py(result.candidates_total);
    return out;
}

}  // namespace

PYBIND11_MODULE(_lincnf, m) {
    m.doc() = "structural analysis and exact satisfiability of linear CNF formulas";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<Formula>(m, "Formula")
        .def(py::init<>())
        .def_property_readonly("m", &Formula::clause_count)
        .def_property_readonly("n", &Formula::variable_count)
        .def("clauses", &Formula::to_raw, "clauses as lists of signed integers")
        .def("variables",
             [](const Formula& f) {
                 return std::vector<Var>(f.variables().begin(), f.variables().end());
             })
        .def(
            "occurrence", [](const Formula& f, Var x) { return f.occurrence(x); }, py::arg("x"))
        .def("has_empty_clause", &Formula::has_empty_clause)
        .def("__len__", &Formula::clause_count)
        .def("__repr__", [](const Formula& f) {
            return "<Formula m=" + std::to_string(f.clause_count()) +
                   " n=" + std::to_string(f.variable_count()) + ">";
        });

    m.def("build_formula", &build_formula, py::arg("clauses"),
          "validated formula from clauses of signed integers");

    m.def("parse_dimacs", [](const std::string& text) {
        DimacsDocument doc = parse_dimacs(text);
        py::dict out;
        out["formula"] = doc.formula;
        out["declared_variables"] = doc.declared_variable_count;
        out["declared_clauses"] = doc.declared_clause_count;
        out["comments"] = doc.comments;
        out["warnings"] = doc.warnings;
        return out;
    });
    m.def(
        "write_dimacs",
        [](const Formula& f, std::optional<int> declared_n,
           const std::vector<std::string>& comments) {
            return write_dimacs(f, declared_n, comments);
        },
        py::arg("formula"), py::arg("declared_n") = std::nullopt,
        py::arg("comments") = std::vector<std::string>{});

    m.def("stats", [](const Formula& f) { return json_to_py(to_json(stats(f))); });
    m.def(
        "classify",
        [](const Formula& f, std::optional<std::int64_t> max_d,
           std::optional<std::string> max_mean_d) {
            std::optional<Rational> mean_bound;
            if (max_mean_d) mean_bound = parse_fraction(*max_mean_d);
            return json_to_py(to_json(classify(f, max_d, mean_bound)));
        },
        py::arg("formula"), py::arg("max_d") = std::nullopt,
        py::arg("max_mean_d") = std::nullopt);
    m.def("analysis_report",
          [](const Formula& f) { return json_to_py(analysis_report(f)); });

    m.def("verify_clause_size_identity",
          [](const Formula& f) { return json_to_py(to_json(verify_clause_size_identity(f))); });
    m.def("verify_variable_size_identity",
          [](const Formula& f) { return json_to_py(to_json(verify_variable_size_identity(f))); });
    m.def("verify_mean_identities",
          [](const Formula& f) { return json_to_py(to_json(verify_mean_identities(f))); });
    m.def("verify_regular_corollaries",
          [](const Formula& f) { return json_to_py(to_json(verify_regular_corollaries(f))); });

    m.def("parameters_to_size", [](std::int64_t k, std::int64_t l, std::int64_t d) {
        return json_to_py(to_json(parameters_to_size(k, l, d)));
    });
    m.def("ml_quadratic_check", &ml_quadratic_check, py::arg("m"), py::arg("n"), py::arg("l"),
          py::arg("d"));
    m.def("ml_upper_bound", &ml_upper_bound, py::arg("n"), py::arg("l"), py::arg("d_bound"));
    m.def("ml_bracket_lower", &ml_bracket_lower, py::arg("n"), py::arg("l"));
    m.def("bracket_holds", &bracket_holds, py::arg("m"), py::arg("n"), py::arg("l"),
          py::arg("epsilon"));
    m.def("implied_epsilon", &implied_epsilon, py::arg("m"), py::arg("n"), py::arg("l"));
    m.def("uniform_disjointedness", &uniform_disjointedness, py::arg("n"), py::arg("k"),
          py::arg("l"));
    m.def("xsat_prescreen",
          [](const Formula& f) { return json_to_py(to_json(xsat_prescreen(f))); });

    m.def(
        "check_xsat",
        [](const Formula& f, const std::vector<Var>& trues) {
            return check_xsat(f, make_assignment(trues));
        },
        py::arg("formula"), py::arg("true_variables"));
    m.def(
        "brute_force_xsat",
        [](const Formula& f, std::uint64_t budget) {
            return xsat_result_to_py(brute_force_xsat(f, budget), f);
        },
        py::arg("formula"), py::arg("budget") = 0);
    m.def(
        "weight_restricted_xsat",
        [](const Formula& f, std::uint64_t budget) {
            return xsat_result_to_py(weight_restricted_xsat(f, budget), f);
        },
        py::arg("formula"), py::arg("budget") = 0);
    m.def("candidate_count", [](const Formula& f) { return bigint_to_py(candidate_count(f)); });
    m.def(
        "enumerate_models",
        [](const Formula& f, std::uint64_t budget) {
            std::vector<std::vector<Var>> out;
            for (const Assignment& a : enumerate_models(f, budget)) {
                out.push_back(a.true_variables);
            }
            return out;
        },
        py::arg("formula"), py::arg("budget") = 0);

    m.def("gen_projective_plane", &gen_projective_plane, py::arg("q"));
    m.def("gen_cycle", &gen_cycle, py::arg("t"));
    m.def("gen_disjoint_blocks", &gen_disjoint_blocks, py::arg("m"), py::arg("k"));
    m.def(
        "gen_dlcnf_search",
        [](int k, int l, int d, std::uint64_t budget, std::uint64_t seed) {
            SearchResult result = gen_dlcnf_search(k, l, d, budget, seed);
            py::dict out;
            out["formula"] = result.formula ? py::cast(*result.formula) : py::none();
            out["exhausted"] = result.exhausted;
            out["nodes_visited"] = result.nodes_visited;
            return out;
        },
        py::arg("k"), py::arg("l"), py::arg("d"), py::arg("budget") = 0, py::arg("seed") = 0);
    m.def("gen_random_linear", &gen_random_linear, py::arg("target_n"), py::arg("k_min"),
          py::arg("k_max"), py::arg("seed"));

    m.attr("__version__") = "0.1.0";
}

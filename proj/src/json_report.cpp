#include "lincnf/json_report.hpp"

#include <sstream>

#include "lincnf/error.hpp"

namespace lincnf {

namespace {

using nlohmann::json;

json fraction(const Rational& r) { return to_fraction_string(r); }

json fraction_or_null(const std::optional<Rational>& r) {
    return r ? json(to_fraction_string(*r)) : json(nullptr);
}

json pair_witness(const std::optional<PairWitness>& w) {
    if (!w) return nullptr;
    return json{{"first_clause", w->first_clause},
                {"second_clause", w->second_clause},
                {"shared", w->shared}};
}

}  // namespace

json to_json(const FormulaStats& s) {
    return json{{"m", s.clause_count},
                {"n", s.variable_count},
                {"mean_clause_length", fraction(s.mean_clause_length)},
                {"mean_squared_clause_length", fraction(s.mean_squared_clause_length)},
                {"mean_occurrence", fraction(s.mean_occurrence)},
                {"mean_squared_occurrence", fraction(s.mean_squared_occurrence)}};
}

json to_json(const ClassReport& r) {
    json classes{{"linear", r.linear.holds},
                 {"exact_linear", r.exact_linear.holds},
                 {"monotone", r.monotone.holds},
                 {"regularity", r.regular.l ? json(*r.regular.l) : json(nullptr)},
                 {"uniformity", r.uniform.k ? json(*r.uniform.k) : json(nullptr)},
                 {"common_disjointedness",
                  r.common_disjointedness ? json(*r.common_disjointedness) : json(nullptr)},
                 {"mean_disjointedness", fraction_or_null(r.mean_disjointedness)},
                 {"mean_independence", fraction_or_null(r.mean_independence)},
                 {"disjointedness_profile", r.disjointedness},
                 {"independence_profile", r.independence}};

    json witnesses = json::object();
    if (!r.linear.holds) witnesses["linear"] = pair_witness(r.linear.witness);
    if (!r.exact_linear.holds) witnesses["exact_linear"] = pair_witness(r.exact_linear.witness);
    if (!r.monotone.holds && r.monotone.witness) {
        witnesses["monotone"] = json{{"clause", r.monotone.witness->clause_index},
                                     {"literal", r.monotone.witness->literal.signed_value()}};
    }
    if (!r.regular.l && r.regular.witness) {
        witnesses["regularity"] = json{{"first_variable", r.regular.witness->first_variable},
                                       {"second_variable", r.regular.witness->second_variable},
                                       {"first_occurrence", r.regular.witness->first_occurrence},
                                       {"second_occurrence", r.regular.witness->second_occurrence}};
    }
    if (!r.uniform.k && r.uniform.witness) {
        witnesses["uniformity"] = json{{"first_clause", r.uniform.witness->first_clause},
                                       {"second_clause", r.uniform.witness->second_clause},
                                       {"first_size", r.uniform.witness->first_size},
                                       {"second_size", r.uniform.witness->second_size}};
    }
    if (!witnesses.empty()) classes["witnesses"] = witnesses;

    if (r.disjointedness_bound) {
        classes["bounded_disjointedness"] =
            json{{"bound", *r.disjointedness_bound},
                 {"member", r.in_bounded_disjointedness_class.value_or(false)}};
    }
    if (r.mean_disjointedness_bound) {
        classes["bounded_mean_disjointedness"] =
            json{{"bound", fraction(*r.mean_disjointedness_bound)},
                 {"mean_within_bound", r.mean_within_bound.value_or(false)},
                 {"member", r.in_bounded_mean_class.value_or(false)}};
    }
    return classes;
}

json to_json(const IdentityReport& r) {
    json failures = json::array();
    for (const Residual& res : r.failures) {
        failures.push_back(json{{"item", res.item},
                                {"lhs", to_fraction_string(res.lhs)},
                                {"rhs", to_fraction_string(res.rhs)}});
    }
    return json{{"name", r.name},
                {"holds", r.holds},
                {"items_checked", r.items_checked},
                {"failures", failures}};
}

json to_json(const PrescreenResult& r) {
    return json{{"pass", r.pass}, {"regularity", r.regularity}, {"remainder", r.remainder}};
}

json to_json(const SizeParameters& p) {
    return json{{"k", p.uniformity},
                {"l", p.regularity},
                {"d", p.disjointedness},
                {"m", p.clause_count},
                {"n", p.variable_count},
                {"congruence_holds", p.congruence_holds}};
}

json to_json(const XsatResult& r, const Formula& f) {
    json out{{"status", to_string(r.status)},
             {"method", to_string(r.method)},
             {"model_count", r.model_count.str()},
             {"candidates_examined", r.candidates_examined},
             {"candidates_total", r.candidates_total.str()},
             {"complete", r.complete}};
    if (r.first_model) {
        out["first_model"] = r.first_model->true_variables;
        out["model_line"] = model_v_line(f, *r.first_model);
    } else {
        out["first_model"] = nullptr;
    }
    return out;
}

nlohmann::json analysis_report(const Formula& f, const AnalyzeOptions& options) {
    json report;
    report["m"] = f.clause_count();
    report["n"] = f.variable_count();

    ClassReport classes =
        classify(f, options.max_disjointedness, options.max_mean_disjointedness);
    report["classes"] = to_json(classes);
    report["stats"] = f.clause_count() > 0 ? to_json(stats(f)) : json(nullptr);

    json identities;
    if (!classes.linear.holds) {
        identities = json{{"applicable", false}, {"reason", "NotLinear"}};
    } else if (f.clause_count() == 0) {
        identities = json{{"applicable", false}, {"reason", "EmptyFormula"}};
    } else {
        json reports = json::array();
        bool all_hold = true;
        for (const IdentityReport& r :
             {verify_clause_size_identity(f), verify_variable_size_identity(f),
              verify_mean_identities(f)}) {
            all_hold = all_hold && r.holds;
            reports.push_back(to_json(r));
        }
        if (classes.regular.l) {
            IdentityReport r = verify_regular_corollaries(f);
            all_hold = all_hold && r.holds;
            reports.push_back(to_json(r));
        }
        identities = json{{"applicable", true}, {"all_hold", all_hold}, {"reports", reports}};
    }
    report["identities"] = identities;

    if (classes.monotone.holds && classes.regular.l) {
        report["prescreen"] = to_json(xsat_prescreen(f));
    } else {
        report["prescreen"] =
            json{{"applicable", false},
                 {"reason", classes.monotone.holds ? "NotRegular" : "NotMonotone"}};
    }

    json bounds;
    if (classes.linear.holds && classes.regular.l && f.clause_count() > 0) {
        std::int64_t l = *classes.regular.l;
        std::int64_t m = f.clause_count();
        std::int64_t n = f.variable_count();
        bounds["m_over_l"] = to_fraction_string(Rational(m, l));
        if (classes.uniform.k && classes.common_disjointedness) {
            bounds["quadratic_exact"] =
                ml_quadratic_check(m, n, l, *classes.common_disjointedness);
        }
        if (l >= 2) {
            bounds["ml_lower"] = ml_bracket_lower(n, l);
            bounds["implied_epsilon"] = implied_epsilon(m, n, l);
            if (classes.common_disjointedness) {
                bounds["ml_upper"] = ml_upper_bound(n, l, *classes.common_disjointedness);
            }
        }
        bounds["applicable"] = true;
    } else {
        bounds = json{{"applicable", false}};
    }
    report["bounds"] = bounds;
    return report;
}

bool report_has_identity_violation(const nlohmann::json& report) {
    if (!report.contains("identities")) return false;
    const auto& identities = report["identities"];
    if (!identities.value("applicable", false)) return false;
    return !identities.value("all_hold", true);
}

std::string model_v_line(const Formula& f, const Assignment& a) {
    std::ostringstream out;
    out << "v";
    for (Var x : f.variables()) {
        out << " " << (a.is_true(x) ? static_cast<int>(x) : -static_cast<int>(x));
    }
    out << " 0";
    return out.str();
}

}  // namespace lincnf

#include "lincnf/solve.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "lincnf/classify.hpp"
#include "lincnf/error.hpp"

namespace lincnf {

namespace {

constexpr std::uint64_t kDefaultEnumerationCap = 1u << 30;
constexpr int kMaxMaskBits = 62;

struct ClauseMasks {
    std::uint64_t positive = 0;
    std::uint64_t negative = 0;
};

std::vector<ClauseMasks> clause_masks(const Formula& f) {
    std::vector<ClauseMasks> masks;
    masks.reserve(static_cast<std::size_t>(f.clause_count()));
    for (const Clause& c : f.clauses()) {
        ClauseMasks cm;
        for (const Literal& lit : c.literals()) {
            std::uint64_t bit = std::uint64_t{1} << *f.variable_index(lit.variable);
            if (lit.negative) {
                cm.negative |= bit;
            } else {
                cm.positive |= bit;
            }
        }
        masks.push_back(cm);
    }
    return masks;
}

Assignment assignment_from_mask(const Formula& f, std::uint64_t mask) {
    std::vector<Var> trues;
    auto vars = f.variables();
    for (int i = 0; i < f.variable_count(); ++i) {
        if (mask >> i & 1) trues.push_back(vars[static_cast<std::size_t>(i)]);
    }
    return Assignment{std::move(trues)};
}

bool lexicographically_less(const std::vector<Var>& a, const std::vector<Var>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void require_monotone_regular(const Formula& f, std::int64_t& l_out) {
    auto mono = is_monotone(f);
    if (!mono.holds) {
        raise(Errc::not_monotone,
              "clause " + std::to_string(mono.witness->clause_index) + " contains literal " +
                  std::to_string(mono.witness->literal.signed_value()));
    }
    auto reg = regularity(f);
    if (!reg.l) {
        raise(Errc::not_regular,
              "variables " + std::to_string(reg.witness->first_variable) + " and " +
                  std::to_string(reg.witness->second_variable) + " occur " +
                  std::to_string(reg.witness->first_occurrence) + " and " +
                  std::to_string(reg.witness->second_occurrence) + " times");
    }
    l_out = *reg.l;
}

}  // namespace

const char* to_string(XsatStatus status) {
    switch (status) {
        case XsatStatus::satisfiable: return "satisfiable";
        case XsatStatus::unsatisfiable: return "unsatisfiable";
        case XsatStatus::budget_exhausted: return "budget_exhausted";
    }
    return "?";
}

const char* to_string(XsatMethod method) {
    switch (method) {
        case XsatMethod::oracle: return "oracle";
        case XsatMethod::weight_restricted: return "weight_restricted";
        case XsatMethod::prescreen: return "prescreen";
    }
    return "?";
}

bool check_xsat(const Formula& f, const Assignment& a) {
    for (Var x : a.true_variables) {
        if (!f.contains_variable(x)) {
            raise(Errc::foreign_variable,
                  "assignment sets variable " + std::to_string(x) + " outside V(F)");
        }
    }
    for (const Clause& c : f.clauses()) {
        int trues = 0;
        for (const Literal& lit : c.literals()) {
            bool value = a.is_true(lit.variable);
            if (lit.negative) value = !value;
            if (value && ++trues > 1) break;
        }
        if (trues != 1) return false;
    }
    return true;
}

XsatResult brute_force_xsat(const Formula& f, std::uint64_t budget) {
    int n = f.variable_count();
    std::uint64_t cap = budget == 0 ? kDefaultEnumerationCap : budget;
    if (n > kMaxMaskBits) {
        raise(Errc::too_large, "brute force supports at most " + std::to_string(kMaxMaskBits) +
                                   " variables, formula has " + std::to_string(n));
    }
    std::uint64_t total = std::uint64_t{1} << n;
    if (total > cap) {
        raise(Errc::too_large, "2^" + std::to_string(n) +
                                   " assignments exceed the budget of " + std::to_string(cap));
    }

    auto masks = clause_masks(f);
    XsatResult result;
    result.method = XsatMethod::oracle;
    result.candidates_total = total;
    std::optional<std::uint64_t> best_mask;
    std::vector<Var> best_trues;
    BigInt count = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        bool ok = true;
        for (const ClauseMasks& cm : masks) {
            std::uint64_t trues = (mask & cm.positive) | (~mask & cm.negative);
            if (std::popcount(trues) != 1) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        ++count;
        Assignment candidate = assignment_from_mask(f, mask);
        if (!best_mask || lexicographically_less(candidate.true_variables, best_trues)) {
            best_mask = mask;
            best_trues = candidate.true_variables;
        }
    }
    result.candidates_examined = total;
    result.model_count = count;
    result.complete = true;
    if (count > 0) {
        result.status = XsatStatus::satisfiable;
        result.first_model = Assignment{best_trues};
    } else {
        result.status = XsatStatus::unsatisfiable;
    }
    return result;
}

XsatResult weight_restricted_xsat(const Formula& f, std::uint64_t budget) {
    XsatResult result;
    result.method = XsatMethod::weight_restricted;

    if (f.clause_count() == 0) {
        // The empty conjunction is true; the unique weight-0 candidate is
        // the empty assignment.
        result.status = XsatStatus::satisfiable;
        result.first_model = Assignment{};
        result.model_count = 1;
        result.candidates_total = 1;
        result.candidates_examined = 1;
        return result;
    }
    if (f.has_empty_clause()) {
        result.status = XsatStatus::unsatisfiable;
        result.model_count = 0;
        result.candidates_total = 0;
        return result;
    }

    std::int64_t l = 0;
    require_monotone_regular(f, l);

    if (f.clause_count() % l != 0) {
        result.method = XsatMethod::prescreen;
        result.status = XsatStatus::unsatisfiable;
        result.model_count = 0;
        result.candidates_total = 0;
        result.candidates_examined = 0;
        return result;
    }

    std::int64_t weight = f.clause_count() / l;
    int n = f.variable_count();
    result.candidates_total = binomial(n, weight);
    if (weight > n) {
        result.status = XsatStatus::unsatisfiable;
        result.model_count = 0;
        return result;
    }

    std::uint64_t cap = budget == 0 ? kDefaultEnumerationCap : budget;
    bool truncated = result.candidates_total > cap;

    // Lexicographic enumeration of all weight-subsets of the sorted
    // universe; the first model found is the lexicographically least.
    auto vars = f.variables();
    int w = static_cast<int>(weight);
    std::vector<int> subset(static_cast<std::size_t>(w));
    for (int i = 0; i < w; ++i) subset[static_cast<std::size_t>(i)] = i;

    const bool use_masks = n <= 62;
    std::vector<std::uint64_t> positive_masks;
    IncidenceView incidence(f);
    if (use_masks) {
        for (const Clause& c : f.clauses()) {
            std::uint64_t mask = 0;
            for (const Literal& lit : c.literals()) {
                mask |= std::uint64_t{1} << *f.variable_index(lit.variable);
            }
            positive_masks.push_back(mask);
        }
    }
    std::vector<int> hits(static_cast<std::size_t>(f.clause_count()), 0);

    BigInt count = 0;
    std::uint64_t examined = 0;
    bool done = w > n;  // C(n, w) = 0: nothing to enumerate
    while (!done && examined < cap) {
        ++examined;
        bool ok = true;
        if (use_masks) {
            std::uint64_t mask = 0;
            for (int idx : subset) mask |= std::uint64_t{1} << idx;
            for (std::uint64_t cm : positive_masks) {
                if (std::popcount(mask & cm) != 1) {
                    ok = false;
                    break;
                }
            }
        } else {
            std::fill(hits.begin(), hits.end(), 0);
            for (int idx : subset) {
                for (int ci : incidence.clauses_containing(vars[static_cast<std::size_t>(idx)])) {
                    ++hits[static_cast<std::size_t>(ci)];
                }
            }
            for (int h : hits) {
                if (h != 1) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            ++count;
            if (!result.first_model) {
                std::vector<Var> trues;
                trues.reserve(static_cast<std::size_t>(w));
                for (int idx : subset) trues.push_back(vars[static_cast<std::size_t>(idx)]);
                result.first_model = Assignment{std::move(trues)};
            }
        }
        // Advance to the next combination in lexicographic order.
        int i = w - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - w + i) --i;
        if (i < 0) {
            done = true;
        } else {
            ++subset[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < w; ++j) {
                subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }

    result.candidates_examined = examined;
    result.model_count = count;
    result.complete = done;
    if (!done && truncated) {
        result.status = XsatStatus::budget_exhausted;
    } else if (count > 0) {
        result.status = XsatStatus::satisfiable;
    } else {
        result.status = XsatStatus::unsatisfiable;
    }
    return result;
}

BigInt candidate_count(const Formula& f) {
    std::int64_t l = 0;
    require_monotone_regular(f, l);
    if (f.clause_count() % l != 0) {
        raise(Errc::prescreen_fail, "m=" + std::to_string(f.clause_count()) + " is not 0 mod l=" +
                                        std::to_string(l) + "; the formula is x-unsatisfiable");
    }
    return binomial(f.variable_count(), f.clause_count() / l);
}

std::vector<Assignment> enumerate_models(const Formula& f, std::uint64_t budget,
                                         std::size_t max_models) {
    int n = f.variable_count();
    std::uint64_t cap = budget == 0 ? kDefaultEnumerationCap : budget;
    if (n > kMaxMaskBits || (std::uint64_t{1} << n) > cap) {
        raise(Errc::too_large, "model enumeration needs 2^n within budget");
    }
    auto masks = clause_masks(f);
    std::vector<Assignment> models;
    std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total && models.size() < max_models; ++mask) {
        bool ok = true;
        for (const ClauseMasks& cm : masks) {
            std::uint64_t trues = (mask & cm.positive) | (~mask & cm.negative);
            if (std::popcount(trues) != 1) {
                ok = false;
                break;
            }
        }
        if (ok) models.push_back(assignment_from_mask(f, mask));
    }
    std::sort(models.begin(), models.end(), [](const Assignment& a, const Assignment& b) {
        return lexicographically_less(a.true_variables, b.true_variables);
    });
    return models;
}

}  // namespace lincnf

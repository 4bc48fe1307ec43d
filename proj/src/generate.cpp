#include "lincnf/generate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lincnf/classify.hpp"
#include "lincnf/error.hpp"
#include "lincnf/identities.hpp"

namespace lincnf {

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int p = 2; p * p <= q; ++p) {
        if (q % p == 0) return false;
    }
    return true;
}

// Certification helper: generated instances must classify exactly as
// advertised; anything else is a generator bug.
void certify(const Formula& f, const char* kind, std::optional<int> k, std::optional<int> l,
             std::optional<std::int64_t> d, bool exact) {
    ClassReport report = classify(f);
    bool ok = report.linear.holds && report.monotone.holds;
    if (exact) ok = ok && report.exact_linear.holds;
    if (k) ok = ok && report.uniform.k == *k;
    if (l) ok = ok && report.regular.l == *l;
    if (d) ok = ok && report.common_disjointedness == *d;
    if (!ok) {
        throw std::logic_error(std::string("generator '") + kind +
                               "' produced an instance outside its class");
    }
}

}  // namespace

std::uint64_t SeededRng::below(std::uint64_t bound) {
    // Rejection sampling keeps the draw exactly uniform and reproducible.
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t value;
    do {
        value = engine_();
    } while (value >= limit);
    return value % bound;
}

Formula gen_projective_plane(int q) {
    if (!is_prime(q)) {
        raise(Errc::not_prime, "projective planes are built over prime fields; q=" +
                                   std::to_string(q));
    }
    // Points and lines are the normalized triples over GF(q):
    // (1,a,b), (0,1,a), (0,0,1). A point lies on a line when the dot
    // product vanishes mod q.
    struct Triple {
        int x0, x1, x2;
    };
    std::vector<Triple> reps;
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) reps.push_back({1, a, b});
    }
    for (int a = 0; a < q; ++a) reps.push_back({0, 1, a});
    reps.push_back({0, 0, 1});

    std::vector<std::vector<int>> clauses;
    clauses.reserve(reps.size());
    for (const Triple& line : reps) {
        std::vector<int> clause;
        for (std::size_t p = 0; p < reps.size(); ++p) {
            int dot = line.x0 * reps[p].x0 + line.x1 * reps[p].x1 + line.x2 * reps[p].x2;
            if (dot % q == 0) clause.push_back(static_cast<int>(p) + 1);
        }
        clauses.push_back(std::move(clause));
    }
    Formula f = build_formula(clauses);
    certify(f, "projective_plane", q + 1, q + 1, 0, true);
    return f;
}

Formula gen_cycle(int t) {
    if (t < 2) raise(Errc::inconsistent_parameters, "cycle generator needs t >= 2");
    std::vector<std::vector<int>> clauses;
    int vertices = 2 * t;
    for (int i = 1; i < vertices; ++i) clauses.push_back({i, i + 1});
    clauses.push_back({1, vertices});
    Formula f = build_formula(clauses);
    certify(f, "cycle", 2, 2, 2 * t - 3, false);
    return f;
}

Formula gen_disjoint_blocks(int m, int k) {
    if (m < 1 || k < 1) raise(Errc::inconsistent_parameters, "blocks need m >= 1, k >= 1");
    std::vector<std::vector<int>> clauses;
    for (int i = 0; i < m; ++i) {
        std::vector<int> clause;
        for (int j = 1; j <= k; ++j) clause.push_back(i * k + j);
        clauses.push_back(std::move(clause));
    }
    Formula f = build_formula(clauses);
    certify(f, "disjoint_blocks", k, 1, m - 1, false);
    return f;
}

namespace {

// Backtracking over 0/1 incidence matrices: m rows of weight k, n columns
// of weight l, pairwise row intersection at most 1, and every row disjoint
// from exactly d others once the matrix is complete. Canonical form only:
// the first row is {1..k}, rows never decrease lexicographically (equal
// rows are possible only for k = 1), and a row may use a fresh variable
// only if it is the next unused id. Every instance is isomorphic to a
// canonical one, so a fully exhausted search proves nonexistence.
class DlcnfSearch {
public:
    DlcnfSearch(int k, int l, int d, int m, int n, std::uint64_t budget)
        : k_(k), l_(l), d_(d), m_(m), n_(n), budget_(budget) {
        col_weight_.assign(static_cast<std::size_t>(n_) + 1, 0);
        rows_.reserve(static_cast<std::size_t>(m_));
        disjoint_count_.assign(static_cast<std::size_t>(m_), 0);
    }

    SearchResult run() {
        SearchResult result;
        if (k_ > n_) {
            result.exhausted = true;  // a row cannot even be filled
            return result;
        }
        bool found = place_row(0);
        result.nodes_visited = nodes_;
        result.exhausted = !found && !out_of_budget_;
        if (found) {
            std::vector<std::vector<int>> clauses;
            clauses.reserve(rows_.size());
            for (const auto& r : rows_) clauses.emplace_back(r.begin(), r.end());
            result.formula = build_formula(clauses);
        }
        return result;
    }

private:
    bool place_row(int index) {
        if (index == m_) return verify_complete();
        current_.clear();
        return extend_row(index, 0, index > 0);
    }

    // Extends the row under construction by one variable at a time.
    // `tight` means the prefix built so far equals the previous row's
    // prefix, so the next element is still bounded below by it. A fully
    // tight row duplicates its predecessor; the intersection bound rejects
    // that for k >= 2, and for k = 1 duplicates are legitimate.
    bool extend_row(int index, int pos, bool tight) {
        if (out_of_budget_) return false;
        if (pos == k_) return commit_row(index);
        const std::vector<int>* prev =
            index > 0 ? &rows_[static_cast<std::size_t>(index) - 1] : nullptr;
        int low = pos == 0 ? 1 : current_[static_cast<std::size_t>(pos) - 1] + 1;
        if (tight) low = std::max(low, (*prev)[static_cast<std::size_t>(pos)]);
        // A fresh variable must be the next unused id; ids beyond that are
        // symmetric copies.
        int high = std::min(n_, max_used_ + 1);
        if (pos == 0) {
            // First elements never decrease, and later elements of a row
            // exceed its first, so a row starting above the smallest
            // unsaturated column leaves it unfillable forever. Columns
            // below that are full and skipped anyway: the row's first
            // element is forced.
            int v_star = 1;
            while (v_star <= n_ && col_weight_[static_cast<std::size_t>(v_star)] >= l_) {
                ++v_star;
            }
            high = std::min(high, v_star);
        }
        for (int v = low; v <= high; ++v) {
            if (++nodes_ > budget_) {
                out_of_budget_ = true;
                return false;
            }
            if (col_weight_[static_cast<std::size_t>(v)] >= l_) continue;
            current_.push_back(v);
            int prev_max = max_used_;
            max_used_ = std::max(max_used_, v);
            if (row_prefix_ok(index)) {
                bool still_tight = tight && v == (*prev)[static_cast<std::size_t>(pos)];
                if (extend_row(index, pos + 1, still_tight)) return true;
            }
            max_used_ = prev_max;
            current_.pop_back();
            if (out_of_budget_) return false;
        }
        return false;
    }

    // Intersection bound against all placed rows, checked on the prefix so
    // dead branches are cut early.
    bool row_prefix_ok(int index) {
        int v = current_.back();
        for (int j = 0; j < index; ++j) {
            const auto& other = rows_[static_cast<std::size_t>(j)];
            if (!std::binary_search(other.begin(), other.end(), v)) continue;
            int inter = 0;
            for (int u : current_) {
                if (std::binary_search(other.begin(), other.end(), u)) ++inter;
            }
            if (inter > 1) return false;
        }
        return true;
    }

    bool commit_row(int index) {
        std::vector<int> disjoint_with;
        for (int j = 0; j < index; ++j) {
            const auto& other = rows_[static_cast<std::size_t>(j)];
            bool disjoint = true;
            for (int u : current_) {
                if (std::binary_search(other.begin(), other.end(), u)) {
                    disjoint = false;
                    break;
                }
            }
            if (disjoint) disjoint_with.push_back(j);
        }
        int own = static_cast<int>(disjoint_with.size());
        int remaining = m_ - index - 1;
        if (own > d_ || own + remaining < d_) return false;

        for (int j : disjoint_with) ++disjoint_count_[static_cast<std::size_t>(j)];
        bool feasible = true;
        for (int j = 0; j < index && feasible; ++j) {
            int c = disjoint_count_[static_cast<std::size_t>(j)];
            if (c > d_ || c + remaining < d_) feasible = false;
        }
        if (feasible) {
            rows_.push_back(current_);
            for (int u : current_) ++col_weight_[static_cast<std::size_t>(u)];
            disjoint_count_[static_cast<std::size_t>(index)] = own;
            // Column reachability: rows never decrease lexicographically,
            // so every future element is >= this row's first element, and
            // a column can gain at most one occurrence per future row.
            int first = current_.front();
            for (int v = 1; v <= max_used_ && feasible; ++v) {
                int deficit = l_ - col_weight_[static_cast<std::size_t>(v)];
                if (deficit > 0 && (v < first || deficit > remaining)) feasible = false;
            }
            // Connection capacity: a future row shares at most one variable
            // with row j, through a spare slot of one of j's variables, so
            // j's connectivity can grow by at most min(spare, remaining).
            // It must end at exactly m-1-d.
            for (int j = 0; j <= index && feasible; ++j) {
                int spare = 0;
                for (int u : rows_[static_cast<std::size_t>(j)]) {
                    spare += l_ - col_weight_[static_cast<std::size_t>(u)];
                }
                int connected = index - disjoint_count_[static_cast<std::size_t>(j)];
                if (connected + std::min(spare, remaining) < m_ - 1 - d_) feasible = false;
            }
            if (feasible && place_row(index + 1)) return true;
            disjoint_count_[static_cast<std::size_t>(index)] = 0;
            for (int u : rows_.back()) --col_weight_[static_cast<std::size_t>(u)];
            current_ = rows_.back();  // deeper rows reuse the working buffer
            rows_.pop_back();
        }
        for (int j : disjoint_with) --disjoint_count_[static_cast<std::size_t>(j)];
        return false;
    }

    bool verify_complete() {
        if (max_used_ != n_) return false;
        for (int v = 1; v <= n_; ++v) {
            if (col_weight_[static_cast<std::size_t>(v)] != l_) return false;
        }
        for (int j = 0; j < m_; ++j) {
            if (disjoint_count_[static_cast<std::size_t>(j)] != d_) return false;
        }
        return true;
    }

    int k_, l_, d_, m_, n_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool out_of_budget_ = false;
    int max_used_ = 0;
    std::vector<int> current_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> col_weight_;
    std::vector<int> disjoint_count_;
};

constexpr std::uint64_t kDefaultSearchBudget = 1u << 22;

}  // namespace

SearchResult gen_dlcnf_search(int k, int l, int d, std::uint64_t budget, std::uint64_t seed) {
    (void)seed;  // the search is deterministic; the seed only tags metadata
    SizeParameters params;
    try {
        params = parameters_to_size(k, l, d);
    } catch (const Error& e) {
        std::string message = e.what();
        auto pos = message.find(": ");
        raise(Errc::inconsistent_parameters,
              pos == std::string::npos ? message : message.substr(pos + 2));
    }
    if (budget == 0) budget = kDefaultSearchBudget;
    DlcnfSearch search(k, l, d, static_cast<int>(params.clause_count),
                       static_cast<int>(params.variable_count), budget);
    SearchResult result = search.run();
    if (result.formula) {
        certify(*result.formula, "dlcnf_search", k, l, d, false);
    }
    return result;
}

Formula gen_random_linear(int target_n, int k_min, int k_max, std::uint64_t seed) {
    if (k_min < 1 || k_min > k_max || k_max > target_n) {
        raise(Errc::inconsistent_parameters, "need 1 <= k_min <= k_max <= target_n");
    }
    SeededRng rng(seed);
    std::vector<Clause> accepted;
    std::vector<char> used(static_cast<std::size_t>(target_n) + 1, 0);
    int used_count = 0;
    int consecutive_failures = 0;
    std::vector<int> pool(static_cast<std::size_t>(target_n));
    std::iota(pool.begin(), pool.end(), 1);

    while (used_count < target_n && consecutive_failures < 100) {
        int k = k_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(k_max - k_min + 1)));
        // Partial Fisher-Yates draw of k distinct variables.
        for (int i = 0; i < k; ++i) {
            std::size_t j = static_cast<std::size_t>(i) +
                            static_cast<std::size_t>(rng.below(
                                static_cast<std::uint64_t>(target_n - i)));
            std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
        }
        std::vector<Literal> literals;
        for (int i = 0; i < k; ++i) {
            literals.push_back(Literal{pool[static_cast<std::size_t>(i)], false});
        }
        Clause candidate(std::move(literals));
        bool ok = true;
        for (const Clause& existing : accepted) {
            if (shared_variables(candidate, existing).size() > 1) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            ++consecutive_failures;
            continue;
        }
        consecutive_failures = 0;
        for (const Literal& lit : candidate.literals()) {
            if (!used[static_cast<std::size_t>(lit.variable)]) {
                used[static_cast<std::size_t>(lit.variable)] = 1;
                ++used_count;
            }
        }
        accepted.push_back(candidate);
    }
    Formula f = Formula(std::move(accepted));
    if (!is_linear(f).holds) {
        throw std::logic_error("random linear generator produced a non-linear formula");
    }
    return f;
}

GeneratedInstance run_generator(const GeneratorSpec& spec) {
    using Kind = GeneratorSpec::Kind;
    GeneratedInstance out;
    switch (spec.kind) {
        case Kind::projective_plane: {
            out.formula = gen_projective_plane(spec.q);
            out.comments.push_back("class kind=projective q=" + std::to_string(spec.q) +
                                   " k=" + std::to_string(spec.q + 1) +
                                   " l=" + std::to_string(spec.q + 1) + " d=0 seed=" +
                                   std::to_string(spec.seed));
            break;
        }
        case Kind::cycle: {
            out.formula = gen_cycle(spec.t);
            out.comments.push_back("class kind=cycle t=" + std::to_string(spec.t) +
                                   " k=2 l=2 d=" + std::to_string(2 * spec.t - 3) +
                                   " seed=" + std::to_string(spec.seed));
            break;
        }
        case Kind::disjoint_blocks: {
            out.formula = gen_disjoint_blocks(spec.m, spec.k);
            out.comments.push_back("class kind=blocks m=" + std::to_string(spec.m) +
                                   " k=" + std::to_string(spec.k) + " l=1 d=" +
                                   std::to_string(spec.m - 1) + " seed=" +
                                   std::to_string(spec.seed));
            break;
        }
        case Kind::dlcnf_search: {
            SearchResult result = gen_dlcnf_search(spec.k, spec.l, spec.d, spec.budget, spec.seed);
            if (!result.formula) {
                if (result.exhausted) {
                    raise(Errc::budget_exhausted,
                          "search space exhausted: no instance with k=" + std::to_string(spec.k) +
                              " l=" + std::to_string(spec.l) + " d=" + std::to_string(spec.d) +
                              " exists");
                }
                raise(Errc::budget_exhausted,
                      "node budget exhausted after " + std::to_string(result.nodes_visited) +
                          " steps without finding an instance");
            }
            out.formula = std::move(*result.formula);
            out.comments.push_back("class kind=search k=" + std::to_string(spec.k) +
                                   " l=" + std::to_string(spec.l) + " d=" +
                                   std::to_string(spec.d) + " seed=" + std::to_string(spec.seed));
            out.comments.push_back("search nodes=" + std::to_string(result.nodes_visited));
            break;
        }
        case Kind::random_linear: {
            out.formula = gen_random_linear(spec.target_n, spec.k_min, spec.k_max, spec.seed);
            out.comments.push_back("class kind=random target_n=" + std::to_string(spec.target_n) +
                                   " kmin=" + std::to_string(spec.k_min) + " kmax=" +
                                   std::to_string(spec.k_max) + " seed=" +
                                   std::to_string(spec.seed));
            break;
        }
    }
    return out;
}

std::vector<Formula> seeded_linear_corpus(int count, std::uint64_t seed, int max_clauses) {
    std::vector<Formula> corpus;
    corpus.reserve(static_cast<std::size_t>(count));
    SeededRng rng(seed);
    for (int i = 0; i < count; ++i) {
        int target_n = 3 + static_cast<int>(rng.below(16));  // 3..18
        int k_min = 1 + static_cast<int>(rng.below(2));      // 1..2
        int span = static_cast<int>(rng.below(3));           // 0..2
        int k_max = std::min(target_n, k_min + span);
        std::uint64_t sub_seed = rng.next();
        Formula f = gen_random_linear(target_n, k_min, k_max, sub_seed);
        if (f.clause_count() > max_clauses) {
            auto raw = f.to_raw();
            raw.resize(static_cast<std::size_t>(max_clauses));
            f = build_formula(raw);  // prefixes of linear formulas stay linear
        }
        corpus.push_back(std::move(f));
    }
    return corpus;
}

}  // namespace lincnf

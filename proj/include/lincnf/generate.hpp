#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lincnf/formula.hpp"

namespace lincnf {

// Deterministic across platforms: mt19937_64 is pinned by the standard and
// bounded draws use rejection sampling instead of the library distributions,
// whose algorithms are implementation-defined.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    // Uniform in [0, bound); bound >= 1.
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

// Lines of the projective plane of order q over the prime field GF(q):
// monotone, exact linear, (q+1)-regular, (q+1)-uniform, m = n = q^2+q+1.
// Errc::not_prime.
Formula gen_projective_plane(int q);

// Edges of the even cycle on 2t vertices: 2-regular, 2-uniform,
// disjointedness 2t-3. t >= 2 (Errc::inconsistent_parameters below that).
Formula gen_cycle(int t);

// m pairwise-disjoint k-literal clauses: 1-regular, k-uniform,
// disjointedness m-1, exactly k^m XSAT models.
Formula gen_disjoint_blocks(int m, int k);

// Outcome of the incidence-matrix backtracking search. `formula` empty with
// exhausted=true is a proof that no instance with the requested parameters
// exists (the search space is complete up to isomorphism); empty with
// exhausted=false means the node budget ran out first.
struct SearchResult {
    std::optional<Formula> formula;
    bool exhausted = false;
    std::uint64_t nodes_visited = 0;
};

// Searches for a k-uniform l-regular linear formula in which every clause
// is disjoint from exactly d others. Rows are built lexicographically
// minimal-first: the first clause is {1..k}, rows never decrease, and new
// variables are introduced without gaps. budget caps extension steps
// (0 = default cap). The seed is echoed into metadata only; the search
// itself is deterministic. Errc::inconsistent_parameters,
// Errc::non_integral_size.
SearchResult gen_dlcnf_search(int k, int l, int d,
                              std::uint64_t budget = 0,
                              std::uint64_t seed = 0);

// Greedy randomized linear formula over at most target_n variables: clause
// sizes drawn from [k_min, k_max], candidate variable sets rejected when
// they share two or more variables with an existing clause. Stops once all
// target_n variables occur or after 100 consecutive rejections. The output
// is always linear (certified before return).
Formula gen_random_linear(int target_n, int k_min, int k_max, std::uint64_t seed);

// CLI-facing description of one generator invocation.
struct GeneratorSpec {
    enum class Kind { projective_plane, cycle, disjoint_blocks, dlcnf_search, random_linear };

    Kind kind = Kind::projective_plane;
    int q = 2;         // projective_plane
    int t = 2;         // cycle
    int m = 1;         // disjoint_blocks
    int k = 1;         // disjoint_blocks, dlcnf_search
    int l = 1;         // dlcnf_search
    int d = 0;         // dlcnf_search
    int target_n = 1;  // random_linear
    int k_min = 1;     // random_linear
    int k_max = 1;     // random_linear
    std::uint64_t budget = 0;
    std::uint64_t seed = 0;
};

struct GeneratedInstance {
    Formula formula;
    // Metadata comment lines (without the leading "c "), e.g.
    // "class kind=cycle k=2 l=2 d=1 seed=0".
    std::vector<std::string> comments;
};

// Runs the generator described by `spec` and certifies the advertised class
// parameters via the classifier. A search that finds nothing raises
// Errc::budget_exhausted, with a message distinguishing a fully exhausted
// search space from an exhausted budget.
GeneratedInstance run_generator(const GeneratorSpec& spec);

// Seeded corpus of small random linear formulas for identity fuzzing.
// Clause counts are truncated to max_clauses (truncation preserves
// linearity).
std::vector<Formula> seeded_linear_corpus(int count, std::uint64_t seed, int max_clauses = 40);

}  // namespace lincnf

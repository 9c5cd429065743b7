#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dv/matrix.hpp"

namespace dv {

// Seeded PRNG with a stability guarantee across versions: the draws come
// from std::mt19937_64 (fully specified by the standard) reduced by modulo,
// shuffles are Fisher-Yates. The identifier below goes into generator
// metadata.
class seeded_rng {
public:
    static constexpr const char* algorithm = "mt19937_64/modulo";

    explicit seeded_rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    std::uint64_t below(std::uint64_t bound) { return bound <= 1 ? 0 : next() % bound; }
    bool coin() { return next() & 1; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

// Simple undirected graph, no loops, no multi-edges. Vertices 1..n.
struct undirected_graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v

    void validate() const;
    std::vector<int> isolated_vertices() const;
};

// Graph input format: line 1 "n m", then m lines "u v" (1-based).
undirected_graph read_graph(std::istream& in);
undirected_graph load_graph(const std::string& path);

// Exhaustive maximum size of a vertex set with pairwise distance >= 3.
int max_distance3_independent_set(const undirected_graph& g);

struct d3is_result {
    std::optional<instance> inst;        // the incidence construction, when built
    std::optional<bool> trivial_verdict; // direct answer when the graph is degenerate
    std::string note;
};

// Incidence-matrix construction: rows are the edges plus a null row,
// columns the vertices, budget n - k. The output profile is (2, 4), and
// the graph has a distance-3 independent set of size k iff the instance is
// a yes-instance. Degenerate graphs (isolated vertices stripped; fewer
// than four edges or no two disjoint edges) are refused with the direct
// verdict instead. Pass enforce_preconditions = false to build the raw
// construction regardless.
d3is_result from_graph_d3is(const undirected_graph& g, int k, bool enforce_preconditions = true);

// Padding constructions on a (2,4)-shaped instance (null row last, all
// other rows of weight two, first two rows at distance four).

// Case "alpha = 1": extends to n+1 rows and d+b+1 columns, budget k+1;
// output profile (1, 4+b).
instance pad_case1(const instance& inst, int b);

// Case "alpha = 2+a": appends ceil(a/2) row-indicator columns per non-null
// row, floor(a/2) all-but-null columns and b indicators of row 1, budget
// unchanged; output profile (2+a, 4+2*ceil(a/2)+b).
instance pad_case2(const instance& inst, int a, int b);

// Binary matrix whose non-null rows realize a sunflower with the given
// core size and petal sizes, plus a trailing null row; the seed shuffles
// the column layout. At most one petal may be empty (none when the core is
// empty).
matrix gen_sunflower(const std::vector<int>& petal_sizes, int core_size, std::uint64_t seed);

// Rejection sampler for binary matrices with distance profile exactly
// (alpha, beta); deterministic for a fixed seed, nothing when the attempt
// budget runs out.
std::optional<matrix> gen_random_profile(int n, int d, int alpha, int beta, std::uint64_t seed, int attempts = 2000);

}  // namespace dv

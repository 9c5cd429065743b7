#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dv/matrix.hpp"
#include "dv/set_family.hpp"

namespace dv {

enum class regime_tag { polynomial_binary, np_complete_binary, unknown_non_binary };

struct regime {
    regime_tag tag;
    std::string reason;
};

// Binary dichotomy: polynomial iff H <= 2*ceil(h/2)+1, NP-complete
// otherwise; alphabets beyond binary are unclassified.
regime classify(const distance_profile_t& p, int sigma_size);

struct oracle_limits {
    int max_n = 10;
    int max_d = 16;
};

// Exhaustive minimum distinguishing set, sizes ascending then lexicographic.
// Ground truth for everything else; refuses instances beyond the limits.
// Uses its own pairwise difference-mask check, independent of
// is_distinguishing.
solution minimum_solution_oracle(const matrix& m, oracle_limits limits = {});

// Minimum solution within budget k, or nothing. Enumerates subsets size-
// ascending from the budget lower bound; returns the lexicographically
// smallest minimum.
std::optional<solution> solve_exact_subsets(const instance& inst);

// Same contract via a search tree: each node branches on the difference set
// of an undistinguished row pair, smallest set first.
std::optional<solution> solve_exact_branching(const instance& inst);

// Per-weight structure of a binary matrix: row classes I_w, their column
// systems D_w and column unions U_w, plus the Deza threshold of the active
// profile. Construction verifies the pairwise-intersection properties that
// the profile forces and reports the first violation.
struct weight_class_analysis {
    std::map<int, std::vector<int>> classes;   // w -> I_w (weights >= 1)
    std::map<int, int> counts;                 // n_w
    std::map<int, set_family> systems;         // D_w
    std::map<int, std::vector<int>> unions;    // U_w
    long long threshold_c = 0;
    distance_profile_t profile{};
    bool null_row_present = false;

    int count(int w) const;
    const std::vector<int>& rows_of(int w) const;
    const set_family& system_of(int w) const;
    const std::vector<int>& union_of(int w) const;
};

weight_class_analysis analyze_weight_classes(const matrix& m);

// Matching saturating the left side of a bipartite graph (augmenting-path
// search), or nothing when Hall's condition fails. Pairs come back sorted
// by left vertex.
std::optional<std::vector<std::pair<int, int>>> hall_matching(const std::vector<int>& left,
                                                              const std::vector<int>& right,
                                                              const std::vector<std::pair<int, int>>& edges);

struct poly_trace {
    int regime = 0;               // 1: beta <= alpha+1, 2: odd alpha with beta = alpha+2
    std::string case_label;       // which case of the analysis resolved the instance
    bool delegated = false;       // bounded instance handed to the exact solver
    std::size_t candidates = 0;   // candidate sets tested
};

// Polynomial-time solver for preprocessed binary matrices whose profile
// satisfies beta <= alpha+1, or odd alpha with beta = alpha+2. Inputs must
// already be reduced (null row, distinct columns, no inessential columns).
std::optional<solution> solve_poly_homogeneous(const instance& inst, poly_trace* trace = nullptr);

namespace poly_detail {

// The matching construction of the (alpha, alpha+2) analysis for odd
// alpha >= 3 when both D_{alpha+1} and D_{alpha+2} are sunflowers: verifies
// the structural claims, builds the bipartite graph outside the big core,
// and returns the saturating matching plus the crossing column. Exposed so
// it can be driven directly on structurally valid fixtures that sit below
// the Deza threshold.
std::optional<solution> case_viii_matching(const instance& inst, const weight_class_analysis& analysis,
                                           poly_trace* trace);

}  // namespace poly_detail

enum class strategy { auto_select, exact, branch, poly };

struct solve_report {
    strategy requested = strategy::auto_select;
    std::string path;  // human-readable account of the route taken
    std::optional<regime> detected;
    std::optional<distance_profile_t> reduced_profile;
    poly_trace poly;
};

struct solve_outcome {
    std::optional<solution> sol;
    solve_report report;
};

// Dispatcher: auto = preprocess (binary only) -> classify -> polynomial
// solver when the regime applies, else the branching solver. The answer is
// identical regardless of strategy.
solve_outcome solve(const instance& inst, strategy s = strategy::auto_select);

}  // namespace dv

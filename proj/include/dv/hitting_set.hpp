#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dv/matrix.hpp"

namespace dv {

// Universe [1, universe_size], a collection of non-empty subsets, and a
// budget k. max_card bounds every set's cardinality.
struct hitting_set_instance {
    int universe_size = 0;
    std::vector<std::vector<int>> sets;  // each sorted ascending
    int k = 0;

    int max_card() const;
    void validate() const;
};

// Hitting Set file format (".hs"): line 1 "|U| |C|", then one set per line
// as space-separated ascending 1-based elements.
hitting_set_instance read_hitting_set(std::istream& in);
hitting_set_instance load_hitting_set(const std::string& path);
void write_hitting_set(const hitting_set_instance& hs, std::ostream& out);
void save_hitting_set(const hitting_set_instance& hs, const std::string& path);

// U = [d], one set per row pair holding the columns where the rows differ
// (duplicates collapsed), budget unchanged. Every set has cardinality <= H.
hitting_set_instance dv_to_hitting_set(const instance& inst);

// The (|C|+1) x |U| matrix with entry i in row i at the columns of the i-th
// set, a trailing null row, and the budget unchanged. Hitting sets of size
// <= k correspond exactly to distinguishing column sets of size <= k.
instance hitting_set_to_dv(const hitting_set_instance& hs);

// Adds the full difference set of each still-undistinguished row pair, in
// lexicographic pair order. The result is a valid solution of size at most
// H times the optimum.
solution greedy_factor_h(const instance& inst);

// g(H, k) = H! * H^(H+1) * (k+1)^H, the kernel size bound (saturating).
unsigned long long g_bound(int max_card, int k);

// Sunflower-lemma kernel for Hitting Set with sets of cardinality <= H:
// any sunflower with more than k petals is replaced by its core (an empty
// core is a definite no, reported as nullopt). The output has at most
// g(H,k) sets over at most g(H,k) elements, renamed order-preservingly.
std::optional<hitting_set_instance> hs_kernelize(const hitting_set_instance& hs);

// dv_to_hitting_set -> hs_kernelize -> hitting_set_to_dv. A definite no
// becomes a trivial no-instance. Output rows differ from the null row in at
// most H columns, so the output profile has H' <= 2H.
instance kernelize_h_k(const instance& inst);

}  // namespace dv

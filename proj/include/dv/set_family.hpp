#pragma once

#include <optional>
#include <vector>

#include "dv/matrix.hpp"

namespace dv {

// A family of pairwise-distinct finite sets of column indices. Each set is
// kept sorted; family order is first occurrence.
struct set_family {
    std::vector<std::vector<int>> sets;
    std::optional<int> uniform_size;  // s when the family is s-uniform

    int size() const { return static_cast<int>(sets.size()); }
};

// Sorts members, collapses duplicates, records uniformity.
set_family make_family(std::vector<std::vector<int>> sets);

// A strong Delta-system: all pairwise intersections equal the core C; the
// petals are the members minus the core.
struct sunflower {
    set_family family;
    std::vector<int> core;
    std::vector<std::vector<int>> petals;  // petals[i] = family.sets[i] \ core
    int lambda = 0;                        // |core|
};

// D(I): the column system { W_i | i in I } of a binary matrix.
set_family column_system(const matrix& m, const std::vector<int>& row_indices);

// lambda if all pairwise intersection sizes agree, otherwise nothing.
// Requires at least two sets.
std::optional<int> weak_delta_lambda(const set_family& f);

// The sunflower structure if all pairwise intersections equal one set,
// otherwise nothing. Requires at least two sets. A weak Delta-system need
// not qualify.
std::optional<sunflower> sunflower_core(const set_family& f);

// s^2 - s + 2: an s-uniform weak Delta-system at least this large is
// guaranteed to be a sunflower.
long long deza_threshold(long long s);

// Pigeonhole consistency check: when the sunflower has more petals than X
// has elements and X meets every member in >= lambda elements, then
// lambda <= |core| and |X cap core| >= lambda must hold. Returns whether
// that conclusion holds (vacuously true when |family| <= |X|).
bool sunflower_intersection_check(const sunflower& f, const std::vector<int>& x, int lambda);

// Closed-form minimum solution when the column system of all non-null rows
// forms a sunflower: one column per non-empty petal, plus one core column
// iff some petal is empty. Requires a preprocessed matrix (null row
// present, no duplicate columns).
solution solve_sunflower(const matrix& m);

}  // namespace dv

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dv/error.hpp"

namespace dv {

using symbol = std::uint32_t;

// Packed binary row. Bit j-1 (0-based word layout) holds the entry of
// column j, so weight / distance / intersection cost O(d / 64).
struct bitrow {
    std::vector<std::uint64_t> words;
    int size = 0;

    bool test(int col) const {  // 1-based
        return (words[static_cast<std::size_t>(col - 1) >> 6] >> ((col - 1) & 63)) & 1u;
    }
    void set(int col) { words[static_cast<std::size_t>(col - 1) >> 6] |= std::uint64_t{1} << ((col - 1) & 63); }

    static bitrow zeros(int size);
};

int weight(const bitrow& x);
int hamming(const bitrow& x, const bitrow& y);
int intersection_size(const bitrow& x, const bitrow& y);

// Plain rectangular grid of symbols. No distinct-rows requirement; this is
// what restriction returns.
struct grid {
    int rows = 0;
    int cols = 0;
    std::vector<symbol> cells;  // row-major

    symbol at(int i, int j) const { return cells[static_cast<std::size_t>(i - 1) * cols + (j - 1)]; }
    std::span<const symbol> row(int i) const {
        return {cells.data() + static_cast<std::size_t>(i - 1) * cols, static_cast<std::size_t>(cols)};
    }
};

// An n x d matrix over a finite alphabet of non-negative integers with all
// rows pairwise distinct. Immutable after construction; the alphabet is
// inferred from the content, and packed rows are precomputed for binary
// matrices.
class matrix {
public:
    explicit matrix(grid g);
    static matrix from_rows(const std::vector<std::vector<symbol>>& rows);

    int n() const { return grid_.rows; }
    int d() const { return grid_.cols; }
    symbol at(int i, int j) const { return grid_.at(i, j); }
    std::span<const symbol> row(int i) const { return grid_.row(i); }
    const grid& cells() const { return grid_; }

    // Sorted distinct symbols occurring in the matrix.
    const std::vector<symbol>& alphabet() const { return alphabet_; }
    bool binary() const { return binary_; }

    // Packed form of row i; only available for binary matrices.
    const bitrow& bits(int i) const;

    // 1-based column indices of the 1-entries of row i (the set W_i).
    std::vector<int> one_positions(int i) const;

    bool has_null_row() const;
    std::optional<int> null_row_index() const;

    bool operator==(const matrix& other) const { return grid_.rows == other.grid_.rows && grid_.cols == other.grid_.cols && grid_.cells == other.grid_.cells; }

private:
    grid grid_;
    std::vector<symbol> alphabet_;
    bool binary_ = false;
    std::vector<bitrow> bits_;
};

// A set of retained column indices, sorted ascending, 1-based.
struct solution {
    std::vector<int> columns;

    int size() const { return static_cast<int>(columns.size()); }
    bool operator==(const solution& other) const { return columns == other.columns; }
};

// Validates range [1, d], ordering and uniqueness.
solution make_solution(std::vector<int> columns, int d);

// A matrix paired with the retained-column budget k; t = d - k columns get
// discarded.
struct instance {
    matrix m;
    int k = 0;

    instance(matrix mat, int budget);
    int t() const { return m.d() - k; }
};

struct distance_profile_t {
    int h = 0;  // minimum pairwise row Hamming distance
    int H = 0;  // maximum pairwise row Hamming distance
};

// Number of 1-entries of a binary row.
int weight(std::span<const symbol> row);

// Hamming distance of two equal-length rows over any alphabet.
int hamming(std::span<const symbol> x, std::span<const symbol> y);

// D_ij: sorted 1-based column indices where rows i and j differ.
std::vector<int> difference_set(const matrix& m, int i, int j);

// (h, H) over all n(n-1)/2 row pairs; requires n >= 2.
distance_profile_t distance_profile(const matrix& m);

// S restricted to the columns in K (ascending index order). The result may
// contain duplicate rows.
grid restrict(const matrix& m, const solution& k);
grid restrict(const matrix& m, const std::vector<int>& columns);

// True iff all rows of restrict(m, K) are pairwise distinct. Lexicographic
// sort of the restricted rows.
bool is_distinguishing(const matrix& m, const solution& k);
bool is_distinguishing(const matrix& m, const std::vector<int>& columns);

// Groups row indices by their symbol in column j; blocks ordered by first
// occurrence.
std::vector<std::vector<int>> column_partition(const matrix& m, int j);

}  // namespace dv

#include "dv/matrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace dv {

bitrow bitrow::zeros(int size) {
    bitrow r;
    r.size = size;
    r.words.assign(static_cast<std::size_t>(size + 63) / 64, 0);
    return r;
}

int weight(const bitrow& x) {
    int w = 0;
    for (auto word : x.words) w += std::popcount(word);
    return w;
}

int hamming(const bitrow& x, const bitrow& y) {
    if (x.size != y.size) throw domain_error("hamming: rows have different lengths");
    int dist = 0;
    for (std::size_t i = 0; i < x.words.size(); ++i) dist += std::popcount(x.words[i] ^ y.words[i]);
    return dist;
}

int intersection_size(const bitrow& x, const bitrow& y) {
    if (x.size != y.size) throw domain_error("intersection_size: rows have different lengths");
    int c = 0;
    for (std::size_t i = 0; i < x.words.size(); ++i) c += std::popcount(x.words[i] & y.words[i]);
    return c;
}

matrix::matrix(grid g) : grid_(std::move(g)) {
    if (grid_.rows < 1) throw domain_error("matrix: row count must be >= 1");
    if (grid_.cols < 0) throw domain_error("matrix: column count must be >= 0");
    if (grid_.cells.size() != static_cast<std::size_t>(grid_.rows) * grid_.cols)
        throw domain_error("matrix: cell buffer does not match dimensions");

    alphabet_.assign(grid_.cells.begin(), grid_.cells.end());
    std::sort(alphabet_.begin(), alphabet_.end());
    alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
    binary_ = alphabet_.empty() || alphabet_.back() <= 1;

    // Distinct rows are part of the problem definition, never repaired.
    std::vector<int> order(grid_.rows);
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        auto ra = row(a), rb = row(b);
        return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
    });
    for (int i = 0; i + 1 < grid_.rows; ++i) {
        auto ra = row(order[i]), rb = row(order[i + 1]);
        if (std::equal(ra.begin(), ra.end(), rb.begin(), rb.end()))
            throw contract_error("matrix: duplicate rows " + std::to_string(std::min(order[i], order[i + 1])) +
                                 " and " + std::to_string(std::max(order[i], order[i + 1])));
    }

    if (binary_) {
        bits_.reserve(grid_.rows);
        for (int i = 1; i <= grid_.rows; ++i) {
            bitrow r = bitrow::zeros(grid_.cols);
            for (int j = 1; j <= grid_.cols; ++j)
                if (at(i, j)) r.set(j);
            bits_.push_back(std::move(r));
        }
    }
}

matrix matrix::from_rows(const std::vector<std::vector<symbol>>& rows) {
    grid g;
    g.rows = static_cast<int>(rows.size());
    g.cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != g.cols) throw domain_error("matrix: ragged rows");
        g.cells.insert(g.cells.end(), r.begin(), r.end());
    }
    return matrix(std::move(g));
}

const bitrow& matrix::bits(int i) const {
    if (!binary_) throw domain_error("matrix: packed rows require a binary matrix");
    return bits_[static_cast<std::size_t>(i - 1)];
}

std::vector<int> matrix::one_positions(int i) const {
    std::vector<int> out;
    for (int j = 1; j <= d(); ++j)
        if (at(i, j) == 1) out.push_back(j);
    return out;
}

bool matrix::has_null_row() const { return null_row_index().has_value(); }

std::optional<int> matrix::null_row_index() const {
    for (int i = 1; i <= n(); ++i) {
        auto r = row(i);
        if (std::all_of(r.begin(), r.end(), [](symbol s) { return s == 0; })) return i;
    }
    return std::nullopt;
}

solution make_solution(std::vector<int> columns, int d) {
    std::sort(columns.begin(), columns.end());
    if (std::adjacent_find(columns.begin(), columns.end()) != columns.end())
        throw domain_error("solution: duplicate column index");
    if (!columns.empty() && (columns.front() < 1 || columns.back() > d))
        throw domain_error("solution: column index out of range [1, " + std::to_string(d) + "]");
    return solution{std::move(columns)};
}

instance::instance(matrix mat, int budget) : m(std::move(mat)), k(budget) {
    if (k < 0 || k > m.d()) throw domain_error("instance: budget k must lie in [0, d]");
}

int weight(std::span<const symbol> row) {
    int w = 0;
    for (symbol s : row) {
        if (s > 1) throw domain_error("weight: row is not binary");
        w += static_cast<int>(s);
    }
    return w;
}

int hamming(std::span<const symbol> x, std::span<const symbol> y) {
    if (x.size() != y.size()) throw domain_error("hamming: rows have different lengths");
    int dist = 0;
    for (std::size_t j = 0; j < x.size(); ++j) dist += x[j] != y[j];
    return dist;
}

std::vector<int> difference_set(const matrix& m, int i, int j) {
    if (i == j) throw domain_error("difference_set: row indices must differ");
    if (i < 1 || i > m.n() || j < 1 || j > m.n()) throw domain_error("difference_set: row index out of range");
    std::vector<int> out;
    for (int c = 1; c <= m.d(); ++c)
        if (m.at(i, c) != m.at(j, c)) out.push_back(c);
    return out;
}

distance_profile_t distance_profile(const matrix& m) {
    if (m.n() < 2) throw domain_error("distance_profile: undefined for fewer than two rows");
    distance_profile_t p{m.d() + 1, 0};
    for (int i = 1; i <= m.n(); ++i)
        for (int j = i + 1; j <= m.n(); ++j) {
            int dist = m.binary() ? hamming(m.bits(i), m.bits(j)) : hamming(m.row(i), m.row(j));
            p.h = std::min(p.h, dist);
            p.H = std::max(p.H, dist);
        }
    return p;
}

static void check_columns(const matrix& m, const std::vector<int>& columns) {
    for (int c : columns)
        if (c < 1 || c > m.d()) throw domain_error("column index " + std::to_string(c) + " out of range");
}

grid restrict(const matrix& m, const std::vector<int>& columns) {
    check_columns(m, columns);
    std::vector<int> cols = columns;
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    grid g;
    g.rows = m.n();
    g.cols = static_cast<int>(cols.size());
    g.cells.reserve(static_cast<std::size_t>(g.rows) * g.cols);
    for (int i = 1; i <= m.n(); ++i)
        for (int c : cols) g.cells.push_back(m.at(i, c));
    return g;
}

grid restrict(const matrix& m, const solution& k) { return restrict(m, k.columns); }

bool is_distinguishing(const matrix& m, const std::vector<int>& columns) {
    check_columns(m, columns);
    std::vector<int> cols = columns;
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());

    std::vector<int> order(m.n());
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        for (int c : cols) {
            symbol x = m.at(a, c), y = m.at(b, c);
            if (x != y) return x < y;
        }
        return false;
    });
    for (int i = 0; i + 1 < m.n(); ++i) {
        bool equal = true;
        for (int c : cols)
            if (m.at(order[i], c) != m.at(order[i + 1], c)) {
                equal = false;
                break;
            }
        if (equal) return false;
    }
    return true;
}

bool is_distinguishing(const matrix& m, const solution& k) { return is_distinguishing(m, k.columns); }

std::vector<std::vector<int>> column_partition(const matrix& m, int j) {
    if (j < 1 || j > m.d()) throw domain_error("column_partition: column index out of range");
    std::vector<std::vector<int>> blocks;
    std::vector<symbol> seen;
    for (int i = 1; i <= m.n(); ++i) {
        symbol s = m.at(i, j);
        auto it = std::find(seen.begin(), seen.end(), s);
        if (it == seen.end()) {
            seen.push_back(s);
            blocks.push_back({i});
        } else {
            blocks[static_cast<std::size_t>(it - seen.begin())].push_back(i);
        }
    }
    return blocks;
}

}  // namespace dv

#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "dv/generators.hpp"
#include "dv/hitting_set.hpp"
#include "dv/matrix.hpp"

namespace support {

inline dv::matrix build_from_sets(const std::vector<std::vector<int>>& one_sets, int d) {
    std::vector<std::vector<dv::symbol>> rows;
    for (const auto& s : one_sets) {
        std::vector<dv::symbol> row(static_cast<std::size_t>(d), 0);
        for (int j : s) row[static_cast<std::size_t>(j - 1)] = 1;
        rows.push_back(std::move(row));
    }
    return dv::matrix::from_rows(rows);
}

// Random matrix over {0..sigma-1} with distinct rows (resamples until they
// are).
inline dv::matrix random_matrix(int n, int d, int sigma, dv::seeded_rng& rng) {
    double capacity = 1;
    for (int j = 0; j < d && capacity < 4.0 * n; ++j) capacity *= sigma;
    if (capacity < n) throw std::invalid_argument("random_matrix: fewer than n distinct rows exist");
    for (;;) {
        std::vector<std::vector<dv::symbol>> rows(static_cast<std::size_t>(n),
                                                  std::vector<dv::symbol>(static_cast<std::size_t>(d)));
        for (auto& row : rows)
            for (auto& cell : row) cell = static_cast<dv::symbol>(rng.below(static_cast<std::uint64_t>(sigma)));
        std::set<std::vector<dv::symbol>> distinct(rows.begin(), rows.end());
        if (static_cast<int>(distinct.size()) == n) return dv::matrix::from_rows(rows);
    }
}

// Exhaustive minimum hitting set size within the budget; independent of the
// library code.
inline std::optional<int> brute_force_min_hitting_set(const dv::hitting_set_instance& hs, int budget) {
    for (int s = 0; s <= std::min(budget, hs.universe_size); ++s) {
        std::vector<int> idx(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
        for (;;) {
            bool hits_all = true;
            for (const auto& set : hs.sets) {
                bool hit = false;
                for (int e : idx)
                    if (std::binary_search(set.begin(), set.end(), e)) {
                        hit = true;
                        break;
                    }
                if (!hit) {
                    hits_all = false;
                    break;
                }
            }
            if (hits_all) return s;
            int pos = s - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == hs.universe_size - (s - 1 - pos)) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int q = pos + 1; q < s; ++q)
                idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
        }
    }
    return std::nullopt;
}

// Profile-preserving disguise: complement a random subset of columns, then
// permute rows and columns. Pairwise distances are untouched.
inline dv::matrix disguise(const dv::matrix& m, dv::seeded_rng& rng) {
    int n = m.n(), d = m.d();
    std::vector<int> col_perm(static_cast<std::size_t>(d)), row_perm(static_cast<std::size_t>(n));
    for (int j = 0; j < d; ++j) col_perm[static_cast<std::size_t>(j)] = j + 1;
    for (int i = 0; i < n; ++i) row_perm[static_cast<std::size_t>(i)] = i + 1;
    rng.shuffle(col_perm);
    rng.shuffle(row_perm);
    std::vector<char> flip(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) flip[static_cast<std::size_t>(j)] = rng.coin();

    std::vector<std::vector<dv::symbol>> rows(static_cast<std::size_t>(n),
                                              std::vector<dv::symbol>(static_cast<std::size_t>(d)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) {
            dv::symbol v = m.at(row_perm[static_cast<std::size_t>(i)], col_perm[static_cast<std::size_t>(j)]);
            if (flip[static_cast<std::size_t>(j)]) v = 1 - v;
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        }
    return dv::matrix::from_rows(rows);
}

// Structured (1,3)-profile instance: null row, optional {x}, weight-2 rows
// {x, p_i}, and weight-3 rows {x, y, q_j} guarded by {x, y} so the result
// is already reduced. Requires n3 >= 1 for the profile to reach 3.
inline dv::matrix profile_1_3(int n2_petals, int n3, bool with_w1) {
    std::vector<std::vector<int>> sets;
    int x = 1, y = 2;
    int next = 3;
    if (with_w1) sets.push_back({x});
    for (int i = 0; i < n2_petals; ++i) sets.push_back({x, next++});
    sets.push_back({x, y});
    for (int j = 0; j < n3; ++j) sets.push_back({x, y, next++});
    sets.push_back({});
    return build_from_sets(sets, next - 1);
}

// Reduced (1,3)-profile instance hitting case II of the gap-two analysis:
// many weight-1 rows, a couple of protected weight-2 rows.
inline dv::matrix case_ii_alpha1(int n1) {
    std::vector<std::vector<int>> sets;
    for (int v = 1; v <= n1; ++v) sets.push_back({v});
    int p = n1 + 1;
    sets.push_back({1, 2});
    sets.push_back({1, p});
    sets.push_back({});
    return build_from_sets(sets, p);
}

// Reduced (1,3)-profile instance with n1 >= 8 and n2 >= 8 and no weight-3
// rows (case V): weight-1 rows {v_i} plus weight-2 rows {v_1, p_j}.
inline dv::matrix case_v_alpha1(int n1, int n2) {
    std::vector<std::vector<int>> sets;
    for (int v = 1; v <= n1; ++v) sets.push_back({v});
    for (int j = 0; j < n2; ++j) sets.push_back({1, n1 + 1 + j});
    sets.push_back({});
    return build_from_sets(sets, n1 + n2);
}

// Bipartite matching-shaped (3,5) instance: cores {1,2} and {1,2,3}, two
// weight-3 rows, n5+1 weight-4 rows and n5 weight-5 rows; the columns
// outside {1,2,3} form a bipartite graph with left degrees 2 and right
// degrees 2 (weight-5) and 1 (weight-3). Already reduced.
inline dv::matrix matching_alpha3(int n5, dv::seeded_rng& rng) {
    int n4 = n5 + 1;
    for (int tries = 0; tries < 1000; ++tries) {
        // Stub lists: left vertex l twice; right stubs from the weight-5
        // rows (twice each) and the two weight-3 rows (once each).
        std::vector<int> right_stubs;
        for (int r = 0; r < n5; ++r) {
            right_stubs.push_back(r);
            right_stubs.push_back(r);
        }
        right_stubs.push_back(n5);      // weight-3 row with {2,3}
        right_stubs.push_back(n5 + 1);  // weight-3 row with {1,3}
        rng.shuffle(right_stubs);

        std::set<std::pair<int, int>> edges;
        bool ok = true;
        std::size_t cursor = 0;
        for (int l = 0; l < n4 && ok; ++l)
            for (int c = 0; c < 2 && ok; ++c) ok = edges.emplace(l, right_stubs[cursor++]).second;
        if (!ok) continue;

        // Rows: weight-5 first, then weight-4, then weight-3, then null.
        int d = 3 + static_cast<int>(edges.size());
        std::vector<std::vector<int>> sets(static_cast<std::size_t>(n5 + n4 + 2));
        for (int r = 0; r < n5; ++r) sets[static_cast<std::size_t>(r)] = {1, 2, 3};
        for (int l = 0; l < n4; ++l) sets[static_cast<std::size_t>(n5 + l)] = {1, 2};
        sets[static_cast<std::size_t>(n5 + n4)] = {2, 3};
        sets[static_cast<std::size_t>(n5 + n4 + 1)] = {1, 3};
        auto right_row = [&](int r) { return r < n5 ? r : n5 + n4 + (r - n5); };
        int col = 3;
        for (auto [l, r] : edges) {
            ++col;
            sets[static_cast<std::size_t>(n5 + l)].push_back(col);
            sets[static_cast<std::size_t>(right_row(r))].push_back(col);
        }
        sets.push_back({});  // null row
        return build_from_sets(sets, d);
    }
    throw std::runtime_error("matching_alpha3: could not realize a simple bipartite graph");
}

}  // namespace support

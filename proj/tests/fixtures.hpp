#pragma once

#include <vector>

#include "dv/hitting_set.hpp"
#include "dv/matrix.hpp"

// Fixed matrices used across the suites. The 1-sets below follow the layout
// of the worked examples in the repository's documentation.
namespace fixtures {

inline dv::matrix binary_from_sets(int d, const std::vector<std::vector<int>>& one_sets) {
    std::vector<std::vector<dv::symbol>> rows;
    for (const auto& s : one_sets) {
        std::vector<dv::symbol> row(static_cast<std::size_t>(d), 0);
        for (int j : s) row[static_cast<std::size_t>(j - 1)] = 1;
        rows.push_back(std::move(row));
    }
    return dv::matrix::from_rows(rows);
}

// 5x7 with rows of weight one, two and three; profile (3, 5).
inline dv::matrix weight_classes_5x7() {
    return binary_from_sets(7, {{1, 5}, {1, 4, 7}, {3}, {2, 4, 5}, {6, 7}});
}

// 7x10 whose non-null rows form a sunflower with core {1,2} and petals
// {4,9}, {7}, {3,10}, {6,8}, {5} and the empty petal.
inline dv::matrix sunflower_7x10() {
    return binary_from_sets(10, {{1, 2, 4, 9}, {1, 2, 7}, {1, 2, 3, 10}, {1, 2, 6, 8}, {1, 2, 5}, {1, 2}, {}});
}

// Universe {1..6} with five sets; {3,5} is a minimum hitting set.
inline dv::hitting_set_instance hitting_set_6() {
    dv::hitting_set_instance hs;
    hs.universe_size = 6;
    hs.sets = {{1, 2, 3}, {3, 4}, {1, 3, 6}, {1, 2, 4, 5}, {1, 5, 6}};
    hs.k = 2;
    return hs;
}

// 10x11 with profile (3,5): weight classes of sizes 2, 4, 3 plus the null
// row; the weight-4 and weight-5 systems are sunflowers with cores {1,2}
// and {1,2,3}.
inline dv::matrix matching_10x11() {
    return binary_from_sets(11, {{1, 2, 3, 4, 5},
                                 {1, 2, 3, 6, 7},
                                 {1, 2, 3, 8, 9},
                                 {1, 2, 4, 7},
                                 {1, 2, 5, 9},
                                 {1, 2, 8, 10},
                                 {1, 2, 6, 11},
                                 {2, 3, 10},
                                 {1, 3, 11},
                                 {}});
}

// 5x4 incidence-plus-null-row shape: weight-2 rows, null row last, first
// two rows at distance four; profile (2, 4).
inline dv::matrix incidence_5x4() {
    return binary_from_sets(4, {{1, 2}, {3, 4}, {1, 4}, {1, 3}, {}});
}

}  // namespace fixtures

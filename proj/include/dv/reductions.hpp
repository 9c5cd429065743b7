#pragma once

#include <optional>
#include <vector>

#include "dv/matrix.hpp"

namespace dv {

struct reduction_report {
    int complemented_columns = 0;
    int duplicate_columns_removed = 0;
    int inessential_columns_removed = 0;
    int dominated_columns_removed = 0;
    // Original 1-based indices of the surviving columns, ascending. Column j
    // of the reduced matrix corresponds to kept_columns[j-1] of the input.
    std::vector<int> kept_columns;
};

struct reduction_result {
    matrix m;
    reduction_report report;
};

// Composes two reports from consecutive reductions into one relative to the
// original matrix.
reduction_report chain_reports(const reduction_report& first, const reduction_report& second);

// Normal form for binary matrices: complements every column where row 1 has
// a 1 (so row 1 becomes the null vector), then removes duplicate columns
// keeping the lowest index. Preserves the answer for every k.
reduction_result preprocess_binary(const matrix& m);

// All columns j that (1) exactly distinguish some row i from all others and
// (2) leave all rows distinct when removed.
std::vector<int> find_inessential_columns(const matrix& m);

// Exhaustively deletes inessential columns one at a time, recomputing
// eligibility after every deletion. Binary matrices only.
reduction_result apply_rule_inessential(const matrix& m);

// While some column partitions the rows finer than (or equal to) another,
// the coarser one is deleted; equal partitions drop the larger index. Works
// for any alphabet and preserves the answer for every k.
reduction_result dominance_reduce(const matrix& m);

// ceil(log_|Sigma| n): any budget below this is a definite no.
int budget_lower_bound(const matrix& m);

// Kernel for the parameters (|Sigma|, k): definite-no (nullopt) when
// n > |Sigma|^k, otherwise the dominance-reduced instance, which satisfies
// n <= |Sigma|^k and d <= |Sigma|^n / |Sigma|!.
std::optional<instance> kernelize_sigma_k(const instance& inst);

}  // namespace dv

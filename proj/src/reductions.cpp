#include "dv/reductions.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace dv {

namespace {

std::vector<symbol> column_of(const matrix& m, int j) {
    std::vector<symbol> col(static_cast<std::size_t>(m.n()));
    for (int i = 1; i <= m.n(); ++i) col[static_cast<std::size_t>(i - 1)] = m.at(i, j);
    return col;
}

matrix keep_columns(const matrix& m, const std::vector<int>& cols) {
    grid g;
    g.rows = m.n();
    g.cols = static_cast<int>(cols.size());
    g.cells.reserve(static_cast<std::size_t>(g.rows) * g.cols);
    for (int i = 1; i <= m.n(); ++i)
        for (int j : cols) g.cells.push_back(m.at(i, j));
    return matrix(std::move(g));
}

// Saturating |Sigma|^e, capped so comparisons against n and d stay exact.
long long checked_pow(long long base, long long exp, long long cap) {
    if (base <= 1) return exp == 0 ? 1 : base;
    long long v = 1;
    for (long long i = 0; i < exp; ++i) {
        if (v > cap / base) return cap + 1;
        v *= base;
    }
    return v;
}

long long factorial_capped(long long x, long long cap) {
    long long v = 1;
    for (long long i = 2; i <= x; ++i) {
        if (v > cap / i) return cap + 1;
        v *= i;
    }
    return v;
}

}  // namespace

reduction_report chain_reports(const reduction_report& first, const reduction_report& second) {
    reduction_report out;
    out.complemented_columns = first.complemented_columns + second.complemented_columns;
    out.duplicate_columns_removed = first.duplicate_columns_removed + second.duplicate_columns_removed;
    out.inessential_columns_removed = first.inessential_columns_removed + second.inessential_columns_removed;
    out.dominated_columns_removed = first.dominated_columns_removed + second.dominated_columns_removed;
    out.kept_columns.reserve(second.kept_columns.size());
    for (int j : second.kept_columns) out.kept_columns.push_back(first.kept_columns[static_cast<std::size_t>(j - 1)]);
    return out;
}

reduction_result preprocess_binary(const matrix& m) {
    if (!m.binary()) throw domain_error("preprocess_binary: requires a binary matrix");

    reduction_report report;
    grid g = m.cells();
    // Pivot on row 1: flip every column where it holds a 1.
    for (int j = 1; j <= m.d(); ++j) {
        if (m.at(1, j) == 1) {
            ++report.complemented_columns;
            for (int i = 1; i <= m.n(); ++i) {
                auto& cell = g.cells[static_cast<std::size_t>(i - 1) * g.cols + (j - 1)];
                cell = 1 - cell;
            }
        }
    }
    matrix flipped(std::move(g));

    std::map<std::vector<symbol>, int> first_index;
    std::vector<int> kept;
    for (int j = 1; j <= flipped.d(); ++j) {
        auto col = column_of(flipped, j);
        if (first_index.emplace(std::move(col), j).second)
            kept.push_back(j);
        else
            ++report.duplicate_columns_removed;
    }
    report.kept_columns = kept;
    return {keep_columns(flipped, kept), std::move(report)};
}

std::vector<int> find_inessential_columns(const matrix& m) {
    std::vector<int> out;
    std::vector<int> all(static_cast<std::size_t>(m.d()));
    for (int j = 1; j <= m.d(); ++j) all[static_cast<std::size_t>(j - 1)] = j;

    for (int j = 1; j <= m.d(); ++j) {
        // Condition (1): some row i carries a value in column j that no
        // other row has, while all other rows agree with each other.
        bool exact = false;
        if (m.n() == 1) {
            exact = true;
        } else {
            for (int i = 1; i <= m.n() && !exact; ++i) {
                symbol mine = m.at(i, j);
                symbol rest = m.at(i == 1 ? 2 : 1, j);
                if (mine == rest) continue;
                bool ok = true;
                for (int l = 1; l <= m.n() && ok; ++l)
                    if (l != i) ok = m.at(l, j) == rest;
                exact = ok;
            }
        }
        if (!exact) continue;

        // Condition (2): rows stay distinct without the column.
        std::vector<int> rest;
        rest.reserve(all.size() - 1);
        for (int c : all)
            if (c != j) rest.push_back(c);
        if (is_distinguishing(m, rest)) out.push_back(j);
    }
    return out;
}

reduction_result apply_rule_inessential(const matrix& m) {
    if (!m.binary()) throw domain_error("apply_rule_inessential: requires a binary matrix");

    reduction_report report;
    report.kept_columns.resize(static_cast<std::size_t>(m.d()));
    for (int j = 1; j <= m.d(); ++j) report.kept_columns[static_cast<std::size_t>(j - 1)] = j;

    matrix current = m;
    for (;;) {
        auto candidates = find_inessential_columns(current);
        if (candidates.empty()) break;
        int victim = candidates.front();
        ++report.inessential_columns_removed;
        std::vector<int> survivors;
        for (int j = 1; j <= current.d(); ++j)
            if (j != victim) survivors.push_back(j);
        report.kept_columns.erase(report.kept_columns.begin() + (victim - 1));
        current = keep_columns(current, survivors);
    }
    return {std::move(current), std::move(report)};
}

namespace {

// True iff column j partitions the rows at least as fine as column j2:
// whenever two rows agree in j they agree in j2.
bool finer_or_equal(const matrix& m, int j, int j2) {
    std::map<symbol, symbol> block_value;
    for (int i = 1; i <= m.n(); ++i) {
        auto [it, inserted] = block_value.emplace(m.at(i, j), m.at(i, j2));
        if (!inserted && it->second != m.at(i, j2)) return false;
    }
    return true;
}

}  // namespace

reduction_result dominance_reduce(const matrix& m) {
    reduction_report report;
    report.kept_columns.resize(static_cast<std::size_t>(m.d()));
    for (int j = 1; j <= m.d(); ++j) report.kept_columns[static_cast<std::size_t>(j - 1)] = j;

    matrix current = m;
    for (bool changed = true; changed;) {
        changed = false;
        for (int victim = 1; victim <= current.d() && !changed; ++victim) {
            for (int j = 1; j <= current.d() && !changed; ++j) {
                if (j == victim || !finer_or_equal(current, j, victim)) continue;
                // Equal partitions are a mutual refinement; drop the larger
                // index, i.e. only let a smaller column evict its equal.
                if (finer_or_equal(current, victim, j) && j > victim) continue;
                ++report.dominated_columns_removed;
                std::vector<int> survivors;
                for (int c = 1; c <= current.d(); ++c)
                    if (c != victim) survivors.push_back(c);
                report.kept_columns.erase(report.kept_columns.begin() + (victim - 1));
                current = keep_columns(current, survivors);
                changed = true;
            }
        }
    }
    return {std::move(current), std::move(report)};
}

int budget_lower_bound(const matrix& m) {
    long long n = m.n();
    if (n == 1) return 0;
    long long sigma = static_cast<long long>(m.alphabet().size());
    if (sigma < 2) throw domain_error("budget_lower_bound: alphabet too small to distinguish rows");
    int bound = 0;
    long long reach = 1;
    while (reach < n) {
        reach = reach > n / sigma ? n : reach * sigma;  // saturate, avoids overflow
        ++bound;
    }
    return bound;
}

std::optional<instance> kernelize_sigma_k(const instance& inst) {
    long long sigma = static_cast<long long>(inst.m.alphabet().size());
    long long n = inst.m.n();
    if (sigma >= 2 && checked_pow(sigma, inst.k, n) < n) return std::nullopt;
    if (sigma < 2 && n > 1) return std::nullopt;

    auto reduced = dominance_reduce(inst.m);
    long long cap = 1LL << 40;
    long long numerator = checked_pow(sigma, n, cap);
    long long denominator = factorial_capped(sigma, cap);
    if (numerator <= cap && reduced.m.d() > numerator / denominator)
        throw contract_error("kernelize_sigma_k: column count exceeds |Sigma|^n / |Sigma|!");
    int budget = std::min(inst.k, reduced.m.d());  // k beyond d' is equivalent to d'
    return instance(std::move(reduced.m), budget);
}

}  // namespace dv

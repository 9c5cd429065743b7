#include "dv/solvers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "dv/reductions.hpp"

namespace dv {

regime classify(const distance_profile_t& p, int sigma_size) {
    if (sigma_size > 2)
        return {regime_tag::unknown_non_binary,
                "alphabet size " + std::to_string(sigma_size) + " > 2: the distance dichotomy covers binary matrices only"};
    int threshold = 2 * ((p.h + 1) / 2) + 1;  // 2*ceil(h/2)+1
    if (p.H <= threshold) {
        std::string route = p.H <= p.h + 1
                                ? "uniform weight classes collapse to a sunflower solution"
                                : "odd h with gap two resolves by case analysis and bipartite matching";
        return {regime_tag::polynomial_binary, "H <= 2*ceil(h/2)+1: polynomial; " + route};
    }
    return {regime_tag::np_complete_binary,
            "H >= 2*ceil(h/2)+2: NP-complete; expresses distance-3 independent set via padded incidence matrices"};
}

namespace {

bool next_combination(std::vector<int>& idx, int d) {
    int s = static_cast<int>(idx.size());
    for (int pos = s - 1; pos >= 0; --pos) {
        if (idx[pos] < d - (s - 1 - pos)) {
            ++idx[pos];
            for (int q = pos + 1; q < s; ++q) idx[q] = idx[q - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::uint64_t> pair_difference_masks(const matrix& m) {
    std::vector<std::uint64_t> masks;
    masks.reserve(static_cast<std::size_t>(m.n()) * (m.n() - 1) / 2);
    for (int i = 1; i <= m.n(); ++i)
        for (int j = i + 1; j <= m.n(); ++j) {
            std::uint64_t mask = 0;
            for (int c = 1; c <= m.d(); ++c)
                if (m.at(i, c) != m.at(j, c)) mask |= std::uint64_t{1} << (c - 1);
            masks.push_back(mask);
        }
    return masks;
}

}  // namespace

solution minimum_solution_oracle(const matrix& m, oracle_limits limits) {
    if (m.n() > limits.max_n || m.d() > limits.max_d)
        throw domain_error("minimum_solution_oracle: instance exceeds the configured limits (n <= " +
                           std::to_string(limits.max_n) + ", d <= " + std::to_string(limits.max_d) + ")");
    if (m.d() > 63) throw domain_error("minimum_solution_oracle: at most 63 columns supported");

    auto masks = pair_difference_masks(m);
    for (int s = 0; s <= m.d(); ++s) {
        std::vector<int> idx(static_cast<std::size_t>(s));
        std::iota(idx.begin(), idx.end(), 1);
        do {
            std::uint64_t chosen = 0;
            for (int c : idx) chosen |= std::uint64_t{1} << (c - 1);
            bool ok = true;
            for (auto pm : masks)
                if (!(pm & chosen)) {
                    ok = false;
                    break;
                }
            if (ok) return solution{idx};
        } while (next_combination(idx, m.d()));
    }
    throw contract_error("minimum_solution_oracle: no distinguishing set found (rows not distinct?)");
}

std::optional<solution> solve_exact_subsets(const instance& inst) {
    const matrix& m = inst.m;
    int lower = m.n() == 1 ? 0 : budget_lower_bound(m);
    int upper = std::min(inst.k, m.d());
    for (int s = lower; s <= upper; ++s) {
        std::vector<int> idx(static_cast<std::size_t>(s));
        std::iota(idx.begin(), idx.end(), 1);
        do {
            if (is_distinguishing(m, idx)) return solution{idx};
        } while (next_combination(idx, m.d()));
    }
    return std::nullopt;
}

namespace {

struct branch_state {
    const matrix& m;
    std::vector<std::vector<int>> pair_diffs;  // per pair i<j
    std::vector<char> chosen;
    std::optional<std::vector<int>> best;
    int budget;

    // Smallest undistinguished difference set, ties by pair order.
    const std::vector<int>* pick_pair() const {
        const std::vector<int>* pick = nullptr;
        for (const auto& diff : pair_diffs) {
            bool hit = false;
            for (int c : diff)
                if (chosen[static_cast<std::size_t>(c)]) {
                    hit = true;
                    break;
                }
            if (!hit && (!pick || diff.size() < pick->size())) pick = &diff;
        }
        return pick;
    }

    void dfs(std::vector<int>& stack) {
        if (best && stack.size() + 1 > best->size()) return;
        const auto* diff = pick_pair();
        if (!diff) {
            if (!best || stack.size() < best->size()) best = stack;
            return;
        }
        if (static_cast<int>(stack.size()) >= budget) return;
        if (best && stack.size() + 1 >= best->size()) return;
        for (int c : *diff) {
            chosen[static_cast<std::size_t>(c)] = 1;
            stack.push_back(c);
            dfs(stack);
            stack.pop_back();
            chosen[static_cast<std::size_t>(c)] = 0;
        }
    }
};

}  // namespace

std::optional<solution> solve_exact_branching(const instance& inst) {
    const matrix& m = inst.m;
    branch_state state{m, {}, std::vector<char>(static_cast<std::size_t>(m.d()) + 1, 0), std::nullopt,
                       std::min(inst.k, m.d())};
    for (int i = 1; i <= m.n(); ++i)
        for (int j = i + 1; j <= m.n(); ++j) state.pair_diffs.push_back(difference_set(m, i, j));
    // smallest difference sets first, ties in pair order
    std::stable_sort(state.pair_diffs.begin(), state.pair_diffs.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });

    std::vector<int> stack;
    state.dfs(stack);
    if (!state.best) return std::nullopt;
    return make_solution(std::move(*state.best), m.d());
}

int weight_class_analysis::count(int w) const {
    auto it = counts.find(w);
    return it == counts.end() ? 0 : it->second;
}

const std::vector<int>& weight_class_analysis::rows_of(int w) const {
    static const std::vector<int> empty;
    auto it = classes.find(w);
    return it == classes.end() ? empty : it->second;
}

const set_family& weight_class_analysis::system_of(int w) const {
    static const set_family empty;
    auto it = systems.find(w);
    return it == systems.end() ? empty : it->second;
}

const std::vector<int>& weight_class_analysis::union_of(int w) const {
    static const std::vector<int> empty;
    auto it = unions.find(w);
    return it == unions.end() ? empty : it->second;
}

namespace {

void check_class_property(const matrix& m, const weight_class_analysis& a, int w1, int w2, int lo, int hi,
                          const std::string& label) {
    const auto& rows1 = a.rows_of(w1);
    const auto& rows2 = a.rows_of(w2);
    for (int i : rows1)
        for (int j : rows2) {
            if (i == j) continue;
            int inter = intersection_size(m.bits(i), m.bits(j));
            if (inter < lo || inter > hi)
                throw contract_error("analyze_weight_classes: property " + label + " violated for rows " +
                                     std::to_string(i) + "," + std::to_string(j) + ": |W_ij| = " +
                                     std::to_string(inter));
        }
}

}  // namespace

weight_class_analysis analyze_weight_classes(const matrix& m) {
    if (!m.binary()) throw domain_error("analyze_weight_classes: requires a binary matrix");
    if (m.n() < 2) throw domain_error("analyze_weight_classes: needs at least two rows");

    weight_class_analysis a;
    a.null_row_present = m.has_null_row();
    for (int i = 1; i <= m.n(); ++i) {
        int w = weight(m.bits(i));
        if (w == 0) continue;
        a.classes[w].push_back(i);
    }
    for (const auto& [w, rows] : a.classes) {
        a.counts[w] = static_cast<int>(rows.size());
        a.systems[w] = column_system(m, rows);
        std::set<int> u;
        for (int i : rows)
            for (int c : m.one_positions(i)) u.insert(c);
        a.unions[w] = std::vector<int>(u.begin(), u.end());
    }

    a.profile = distance_profile(m);
    int alpha = a.profile.h, beta = a.profile.H;
    if (beta <= alpha + 1) {
        a.threshold_c = deza_threshold(alpha + 1);
        check_class_property(m, a, alpha, alpha, alpha / 2, alpha / 2, "(1)");
        check_class_property(m, a, alpha + 1, alpha + 1, (alpha + 2) / 2, (alpha + 2) / 2, "(2)");
        check_class_property(m, a, alpha, alpha + 1, (alpha + 1) / 2, (alpha + 1) / 2, "(3)");
    } else if (beta == alpha + 2 && alpha % 2 == 1) {
        a.threshold_c = deza_threshold(alpha + 2);
        int lo = alpha / 2, hi = (alpha + 1) / 2;  // floor / ceil of alpha/2
        check_class_property(m, a, alpha, alpha, lo, lo, "(1)");
        check_class_property(m, a, alpha, alpha + 1, lo, hi, "(2)");
        check_class_property(m, a, alpha, alpha + 2, hi, hi, "(3)");
        check_class_property(m, a, alpha + 1, alpha + 1, hi, hi, "(4)");
        check_class_property(m, a, alpha + 1, alpha + 2, hi, hi + 1, "(5)");
        check_class_property(m, a, alpha + 2, alpha + 2, hi + 1, hi + 1, "(6)");
    } else {
        a.threshold_c = deza_threshold(beta);
    }
    return a;
}

std::optional<std::vector<std::pair<int, int>>> hall_matching(const std::vector<int>& left,
                                                              const std::vector<int>& right,
                                                              const std::vector<std::pair<int, int>>& edges) {
    std::map<int, int> lidx, ridx;
    for (std::size_t i = 0; i < left.size(); ++i) lidx[left[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < right.size(); ++i) ridx[right[i]] = static_cast<int>(i);

    std::vector<std::vector<int>> adj(left.size());
    for (auto [u, v] : edges) {
        auto lu = lidx.find(u);
        auto rv = ridx.find(v);
        if (lu == lidx.end() || rv == ridx.end()) throw domain_error("hall_matching: edge endpoint not a vertex");
        adj[static_cast<std::size_t>(lu->second)].push_back(rv->second);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());

    std::vector<int> match_right(right.size(), -1);
    std::vector<char> visited;

    auto augment = [&](auto&& self, int u) -> bool {
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (visited[static_cast<std::size_t>(v)]) continue;
            visited[static_cast<std::size_t>(v)] = 1;
            if (match_right[static_cast<std::size_t>(v)] < 0 || self(self, match_right[static_cast<std::size_t>(v)])) {
                match_right[static_cast<std::size_t>(v)] = u;
                return true;
            }
        }
        return false;
    };

    for (std::size_t u = 0; u < left.size(); ++u) {
        visited.assign(right.size(), 0);
        if (!augment(augment, static_cast<int>(u))) return std::nullopt;
    }

    std::vector<std::pair<int, int>> out;
    for (std::size_t v = 0; v < right.size(); ++v)
        if (match_right[v] >= 0) out.emplace_back(left[static_cast<std::size_t>(match_right[v])], right[v]);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Polynomial solver for homogeneous binary matrices.
// ---------------------------------------------------------------------------

namespace {

// One factor of a candidate decomposition: either an explicit list of
// column-set choices or all subsets of a pool.
struct choice_part {
    std::vector<std::vector<int>> fixed;
    std::vector<int> pool;
    bool subset_mode = false;

    std::size_t count() const { return subset_mode ? (std::size_t{1} << pool.size()) : fixed.size(); }

    void emit(std::size_t choice, std::vector<int>& out) const {
        if (subset_mode) {
            for (std::size_t b = 0; b < pool.size(); ++b)
                if (choice & (std::size_t{1} << b)) out.push_back(pool[b]);
        } else {
            const auto& cols = fixed[choice];
            out.insert(out.end(), cols.begin(), cols.end());
        }
    }
};

choice_part subsets_of(std::vector<int> pool) {
    if (pool.size() > 24)
        throw contract_error("solve_poly_homogeneous: bounded candidate pool unexpectedly large (" +
                             std::to_string(pool.size()) + " columns)");
    choice_part p;
    p.pool = std::move(pool);
    p.subset_mode = true;
    return p;
}

// All petals, or all but one (any solution misses at most one petal).
choice_part petal_keeps(const std::vector<std::vector<int>>& petals) {
    choice_part p;
    std::vector<int> all;
    for (const auto& petal : petals) all.insert(all.end(), petal.begin(), petal.end());
    std::sort(all.begin(), all.end());
    p.fixed.push_back(all);
    for (std::size_t drop = 0; drop < petals.size(); ++drop) {
        std::vector<int> kept;
        for (std::size_t i = 0; i < petals.size(); ++i)
            if (i != drop) kept.insert(kept.end(), petals[i].begin(), petals[i].end());
        std::sort(kept.begin(), kept.end());
        p.fixed.push_back(std::move(kept));
    }
    return p;
}

// Minimum distinguishing candidate (size, then lexicographic) over
// forced + one choice from every part.
std::optional<solution> best_candidate(const matrix& m, const std::vector<int>& forced,
                                       const std::vector<choice_part>& parts, poly_trace* trace) {
    std::vector<std::size_t> odometer(parts.size(), 0);
    std::optional<std::vector<int>> best;
    for (;;) {
        std::vector<int> candidate = forced;
        for (std::size_t p = 0; p < parts.size(); ++p) parts[p].emit(odometer[p], candidate);
        std::sort(candidate.begin(), candidate.end());
        candidate.erase(std::unique(candidate.begin(), candidate.end()), candidate.end());
        if (trace) ++trace->candidates;
        bool better = !best || candidate.size() < best->size() || (candidate.size() == best->size() && candidate < *best);
        if (better && is_distinguishing(m, candidate)) best = std::move(candidate);

        std::size_t p = 0;
        while (p < parts.size() && ++odometer[p] == parts[p].count()) odometer[p++] = 0;
        if (p == parts.size()) break;
    }
    if (!best) return std::nullopt;
    return solution{std::move(*best)};
}

sunflower require_sunflower(const set_family& f, const std::string& what) {
    auto s = sunflower_core(f);
    if (!s) throw contract_error("solve_poly_homogeneous: " + what + " is not a sunflower");
    return *s;
}

void require(bool cond, const std::string& claim) {
    if (!cond) throw contract_error("solve_poly_homogeneous: structural claim failed: " + claim);
}

std::optional<solution> within_budget(std::optional<solution> sol, int k) {
    if (sol && sol->size() <= k) return sol;
    return std::nullopt;
}

// The matrix is free of duplicate columns, contains the null row, and the
// inessential-column rule does not apply.
void verify_reduced(const matrix& m) {
    if (!m.has_null_row())
        throw domain_error("solve_poly_homogeneous: input must be preprocessed (null row missing)");
    std::set<std::vector<symbol>> cols;
    for (int j = 1; j <= m.d(); ++j) {
        std::vector<symbol> col(static_cast<std::size_t>(m.n()));
        for (int i = 1; i <= m.n(); ++i) col[static_cast<std::size_t>(i - 1)] = m.at(i, j);
        if (!cols.insert(std::move(col)).second)
            throw domain_error("solve_poly_homogeneous: input must be preprocessed (duplicate columns)");
    }
    if (!find_inessential_columns(m).empty())
        throw domain_error("solve_poly_homogeneous: input must be reduced (inessential column present)");
}

std::optional<solution> delegate_exact(const instance& inst, poly_trace* trace, const std::string& label) {
    if (trace) {
        trace->delegated = true;
        trace->case_label = label;
    }
    return solve_exact_subsets(inst);
}

std::optional<solution> sunflower_answer(const instance& inst, poly_trace* trace, const std::string& label) {
    if (trace) trace->case_label = label;
    solution sol;
    try {
        sol = solve_sunflower(inst.m);
    } catch (const domain_error& e) {
        throw contract_error(std::string("solve_poly_homogeneous: expected sunflower structure: ") + e.what());
    }
    if (trace) ++trace->candidates;
    return within_budget(std::move(sol), inst.k);
}

std::optional<solution> solve_gap_one(const instance& inst, const weight_class_analysis& a, poly_trace* trace) {
    const matrix& m = inst.m;
    int alpha = a.profile.h;
    long long c = a.threshold_c;
    if (trace) trace->regime = 1;

    for (const auto& [w, cnt] : a.counts)
        require(w == alpha || w == alpha + 1, "weights outside {alpha, alpha+1}");

    int na = a.count(alpha);
    int na1 = a.count(alpha + 1);
    if (na < c && na1 < c) return delegate_exact(inst, trace, "gap-one, bounded instance");

    if (na1 >= c) {
        // Petal columns of D_{alpha+1} are single ones; for alpha >= 2 they
        // would be inessential, impossible on reduced input.
        require(alpha == 1, "n_{alpha+1} >= c forces alpha = 1 on reduced input");
        require(a.count(1) <= 1, "at most one weight-1 row when D_2 is a large sunflower");
        // Pigeonhole consistency: any weight-1 row must sit inside the core
        // of the weight-2 sunflower.
        if (a.count(1) == 1) {
            sunflower mid = require_sunflower(a.system_of(2), "D_2");
            require(sunflower_intersection_check(mid, m.one_positions(a.rows_of(1).front()), 1),
                    "weight-1 row meets the core of D_2");
        }
        return sunflower_answer(inst, trace, "gap-one, sunflower on D_1 u D_2");
    }
    // na >= c: the core columns would be inessential for even alpha.
    require(alpha % 2 == 1, "n_alpha >= c is impossible for even alpha on reduced input");
    require(na1 == 0, "n_alpha >= c forces n_{alpha+1} = 0 for odd alpha");
    (void)m;
    return sunflower_answer(inst, trace, "gap-one, sunflower on D_alpha");
}

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_strict_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

namespace poly_detail {

std::optional<solution> case_viii_matching(const instance& inst, const weight_class_analysis& a, poly_trace* trace) {
    const matrix& m = inst.m;
    int alpha = a.profile.h;
    require(alpha % 2 == 1 && alpha >= 3, "matching construction needs odd alpha >= 3");

    sunflower mid = require_sunflower(a.system_of(alpha + 1), "D_{alpha+1}");
    sunflower top = require_sunflower(a.system_of(alpha + 2), "D_{alpha+2}");
    const std::vector<int>& core = mid.core;      // C
    const std::vector<int>& big_core = top.core;  // C'
    require(static_cast<int>(core.size()) == (alpha + 1) / 2, "|C| = ceil(alpha/2)");
    require(static_cast<int>(big_core.size()) == (alpha + 1) / 2 + 1, "|C'| = ceil(alpha/2)+1");
    require(is_strict_subset(core, big_core), "C is a proper subset of C'");

    int z = set_minus(big_core, core).front();

    // Column z carries ones exactly on the weight-alpha and
    // weight-(alpha+2) rows.
    std::set<int> expect_one(a.rows_of(alpha).begin(), a.rows_of(alpha).end());
    for (int i : a.rows_of(alpha + 2)) expect_one.insert(i);
    for (int i = 1; i <= m.n(); ++i)
        require((m.at(i, z) == 1) == (expect_one.count(i) > 0), "column z marks exactly I_alpha u I_{alpha+2}");

    require(a.count(alpha) == (alpha + 1) / 2, "n_alpha = ceil(alpha/2)");
    require(a.count(alpha + 1) == a.count(alpha + 2) + alpha / 2, "n_{alpha+1} = n_{alpha+2} + floor(alpha/2)");

    // Pigeonhole consistency: every weight-alpha row meets the big core in
    // at least ceil(alpha/2) columns.
    for (int i : a.rows_of(alpha))
        require(sunflower_intersection_check(top, m.one_positions(i), (alpha + 1) / 2),
                "weight-alpha rows meet the core of D_{alpha+2}");

    // Every further column is an edge between I_{alpha+1} and
    // I_alpha u I_{alpha+2}.
    std::set<int> left_set(a.rows_of(alpha + 1).begin(), a.rows_of(alpha + 1).end());
    std::vector<std::pair<int, int>> edges;
    std::map<std::pair<int, int>, int> edge_column;
    std::set<int> big_core_set(big_core.begin(), big_core.end());
    for (int j = 1; j <= m.d(); ++j) {
        if (big_core_set.count(j)) continue;
        std::vector<int> ones;
        for (int i = 1; i <= m.n(); ++i)
            if (m.at(i, j) == 1) ones.push_back(i);
        if (ones.empty()) continue;  // a surviving all-zero column is irrelevant
        require(ones.size() == 2, "columns outside C' have exactly two ones");
        int u = left_set.count(ones[0]) ? ones[0] : ones[1];
        int v = u == ones[0] ? ones[1] : ones[0];
        require(left_set.count(u) > 0 && expect_one.count(v) > 0,
                "columns outside C' connect I_{alpha+1} with I_alpha u I_{alpha+2}");
        edges.emplace_back(u, v);
        edge_column[{u, v}] = j;
    }

    std::vector<int> right = set_union(a.rows_of(alpha), a.rows_of(alpha + 2));
    auto matching = hall_matching(a.rows_of(alpha + 1), right, edges);
    require(matching.has_value(), "a matching saturating I_{alpha+1} exists");

    std::vector<int> columns{z};
    for (auto [u, v] : *matching) columns.push_back(edge_column.at({u, v}));
    solution sol = make_solution(std::move(columns), m.d());
    if (trace) {
        ++trace->candidates;
        trace->case_label = "gap-two, case VIII matching";
    }
    require(is_distinguishing(m, sol), "matching plus crossing column distinguishes all rows");
    require(sol.size() == a.count(alpha + 1) + 1, "|K| = n_{alpha+1} + 1");
    return within_budget(std::move(sol), inst.k);
}

}  // namespace poly_detail

namespace {

std::optional<solution> solve_gap_two(const instance& inst, const weight_class_analysis& a, poly_trace* trace) {
    const matrix& m = inst.m;
    int alpha = a.profile.h;
    long long c = a.threshold_c;
    if (trace) trace->regime = 2;

    for (const auto& [w, cnt] : a.counts)
        require(w >= alpha && w <= alpha + 2, "weights outside {alpha, .., alpha+2}");

    bool big0 = a.count(alpha) >= c;
    bool big1 = a.count(alpha + 1) >= c;
    bool big2 = a.count(alpha + 2) >= c;

    const auto u1 = a.union_of(1);  // forced into any solution when alpha = 1

    if (!big0 && !big1 && !big2) return delegate_exact(inst, trace, "gap-two, case I (bounded)");

    if (big0 && !big1 && !big2) {
        if (alpha >= 3) return delegate_exact(inst, trace, "gap-two, case II (bounded, alpha >= 3)");
        if (trace) trace->case_label = "gap-two, case II";
        auto pool = set_minus(set_union(a.union_of(2), a.union_of(3)), u1);
        return within_budget(best_candidate(m, u1, {subsets_of(pool)}, trace), inst.k);
    }

    if (!big0 && big1 && !big2) {
        if (alpha >= 3) return delegate_exact(inst, trace, "gap-two, case III (bounded, alpha >= 3)");
        if (trace) trace->case_label = "gap-two, case III";
        sunflower mid = require_sunflower(a.system_of(2), "D_2");
        return within_budget(
            best_candidate(m, u1, {subsets_of(mid.core), petal_keeps(mid.petals), subsets_of(a.union_of(3))}, trace),
            inst.k);
    }

    if (!big0 && !big1 && big2) {
        if (alpha >= 3) return delegate_exact(inst, trace, "gap-two, case IV (bounded, alpha >= 3)");
        if (trace) trace->case_label = "gap-two, case IV";
        sunflower top = require_sunflower(a.system_of(3), "D_3");
        return within_budget(
            best_candidate(m, u1, {subsets_of(top.core), subsets_of(a.union_of(2)), petal_keeps(top.petals)}, trace),
            inst.k);
    }

    if (big0 && big1 && !big2) {
        require(a.count(alpha + 2) == 0, "n_alpha >= c forces n_{alpha+2} = 0");
        require(alpha == 1, "case V is impossible for alpha >= 3 on reduced input");
        if (trace) trace->case_label = "gap-two, case V";
        sunflower low = require_sunflower(a.system_of(1), "D_1");
        require(low.core.empty(), "D_1 has an empty core");
        sunflower mid = require_sunflower(a.system_of(2), "D_2");
        require(static_cast<int>(mid.core.size()) == 1, "|core(D_2)| = 1");
        return within_budget(best_candidate(m, u1, {subsets_of(mid.core), petal_keeps(mid.petals)}, trace), inst.k);
    }

    if (big0 && !big1 && big2)
        throw contract_error("solve_poly_homogeneous: case VI cannot occur (n_alpha >= c forces n_{alpha+2} = 0)");
    if (big0 && big1 && big2)
        throw contract_error("solve_poly_homogeneous: case VII cannot occur (n_alpha >= c forces n_{alpha+2} = 0)");

    // case VIII: !big0 && big1 && big2
    sunflower mid = require_sunflower(a.system_of(alpha + 1), "D_{alpha+1}");
    sunflower top = require_sunflower(a.system_of(alpha + 2), "D_{alpha+2}");
    require(is_strict_subset(mid.core, top.core), "C is a proper subset of C'");
    if (alpha == 1) {
        if (trace) trace->case_label = "gap-two, case VIII";
        return within_budget(
            best_candidate(m, u1, {subsets_of(top.core), petal_keeps(mid.petals), petal_keeps(top.petals)}, trace),
            inst.k);
    }
    return poly_detail::case_viii_matching(inst, a, trace);
}

}  // namespace

std::optional<solution> solve_poly_homogeneous(const instance& inst, poly_trace* trace) {
    const matrix& m = inst.m;
    if (!m.binary()) throw domain_error("solve_poly_homogeneous: requires a binary matrix");
    if (m.n() == 1) return solution{};
    verify_reduced(m);

    auto a = analyze_weight_classes(m);
    int alpha = a.profile.h, beta = a.profile.H;
    if (beta <= alpha + 1) return solve_gap_one(inst, a, trace);
    if (alpha % 2 == 1 && beta == alpha + 2) return solve_gap_two(inst, a, trace);
    throw domain_error("solve_poly_homogeneous: profile (h=" + std::to_string(alpha) + ", H=" + std::to_string(beta) +
                       ") is outside the polynomial regimes; use the exact solvers");
}

namespace {

solution map_back(const solution& sol, const std::vector<int>& kept_columns) {
    std::vector<int> cols;
    cols.reserve(sol.columns.size());
    for (int j : sol.columns) cols.push_back(kept_columns[static_cast<std::size_t>(j - 1)]);
    std::sort(cols.begin(), cols.end());
    return solution{std::move(cols)};
}

}  // namespace

solve_outcome solve(const instance& inst, strategy s) {
    solve_outcome out;
    out.report.requested = s;

    switch (s) {
        case strategy::exact:
            out.report.path = "exact subset enumeration";
            out.sol = solve_exact_subsets(inst);
            return out;
        case strategy::branch:
            out.report.path = "branching on difference sets";
            out.sol = solve_exact_branching(inst);
            return out;
        case strategy::poly:
            out.report.path = "polynomial solver";
            out.sol = solve_poly_homogeneous(inst, &out.report.poly);
            if (!out.report.poly.case_label.empty()) out.report.path += " (" + out.report.poly.case_label + ")";
            return out;
        case strategy::auto_select:
            break;
    }

    if (inst.m.n() == 1) {
        out.report.path = "auto: single row, empty solution";
        out.sol = solution{};
        return out;
    }
    if (!inst.m.binary()) {
        auto r = classify(distance_profile(inst.m), static_cast<int>(inst.m.alphabet().size()));
        out.report.detected = r;
        out.report.path = "auto: non-binary alphabet, branching solver";
        out.sol = solve_exact_branching(inst);
        return out;
    }

    auto pre = preprocess_binary(inst.m);
    auto rule1 = apply_rule_inessential(pre.m);
    auto report = chain_reports(pre.report, rule1.report);
    const matrix& reduced = rule1.m;
    int k = std::min(inst.k, reduced.d());

    auto profile = distance_profile(reduced);
    out.report.reduced_profile = profile;
    auto r = classify(profile, 2);
    out.report.detected = r;

    instance red_inst(reduced, k);
    std::optional<solution> sol;
    if (r.tag == regime_tag::polynomial_binary) {
        out.report.path = "auto: reduced (d " + std::to_string(inst.m.d()) + " -> " + std::to_string(reduced.d()) +
                          "), polynomial solver";
        sol = solve_poly_homogeneous(red_inst, &out.report.poly);
        if (!out.report.poly.case_label.empty()) out.report.path += " (" + out.report.poly.case_label + ")";
    } else {
        out.report.path = "auto: reduced (d " + std::to_string(inst.m.d()) + " -> " + std::to_string(reduced.d()) +
                          "), NP-complete regime, branching solver";
        sol = solve_exact_branching(red_inst);
    }
    if (sol) out.sol = map_back(*sol, report.kept_columns);
    return out;
}

}  // namespace dv

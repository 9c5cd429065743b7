#include "dv/generators.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

namespace dv {

void undirected_graph::validate() const {
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 1 || v < 1 || u > n || v > n) throw domain_error("graph: vertex out of range");
        if (u == v) throw domain_error("graph: self-loop");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) throw domain_error("graph: multi-edge");
    }
}

std::vector<int> undirected_graph::isolated_vertices() const {
    std::vector<char> touched(static_cast<std::size_t>(n) + 1, 0);
    for (auto [u, v] : edges) touched[static_cast<std::size_t>(u)] = touched[static_cast<std::size_t>(v)] = 1;
    std::vector<int> out;
    for (int v = 1; v <= n; ++v)
        if (!touched[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

undirected_graph read_graph(std::istream& in) {
    undirected_graph g;
    std::string line;
    if (!std::getline(in, line)) throw parse_error("graph file is empty");
    std::istringstream head(line);
    long long n = -1, m = -1;
    if (!(head >> n >> m) || n < 0 || m < 0) throw parse_error("expected 'n m' header", 1);
    g.n = static_cast<int>(n);
    for (long long i = 0; i < m; ++i) {
        if (!std::getline(in, line)) throw parse_error("fewer edges than declared", i + 1);
        std::istringstream row(line);
        int u, v;
        if (!(row >> u >> v)) throw parse_error("expected 'u v'", i + 2);
        g.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    g.validate();
    return g;
}

undirected_graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return read_graph(in);
}

namespace {

std::vector<std::vector<int>> pairwise_distances(const undirected_graph& g) {
    const int inf = 1 << 29;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n) + 1);
    for (auto [u, v] : g.edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(g.n) + 1,
                                       std::vector<int>(static_cast<std::size_t>(g.n) + 1, inf));
    for (int s = 1; s <= g.n; ++s) {
        auto& d = dist[static_cast<std::size_t>(s)];
        d[static_cast<std::size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[static_cast<std::size_t>(u)])
                if (d[static_cast<std::size_t>(v)] > d[static_cast<std::size_t>(u)] + 1) {
                    d[static_cast<std::size_t>(v)] = d[static_cast<std::size_t>(u)] + 1;
                    q.push(v);
                }
        }
    }
    return dist;
}

}  // namespace

int max_distance3_independent_set(const undirected_graph& g) {
    if (g.n > 24) throw domain_error("max_distance3_independent_set: exhaustive search limited to 24 vertices");
    auto dist = pairwise_distances(g);
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
        std::vector<int> verts;
        for (int v = 1; v <= g.n; ++v)
            if (mask & (1u << (v - 1))) verts.push_back(v);
        if (static_cast<int>(verts.size()) <= best) continue;
        bool ok = true;
        for (std::size_t a = 0; a < verts.size() && ok; ++a)
            for (std::size_t b = a + 1; b < verts.size() && ok; ++b)
                ok = dist[static_cast<std::size_t>(verts[a])][static_cast<std::size_t>(verts[b])] >= 3;
        if (ok) best = static_cast<int>(verts.size());
    }
    return best;
}

namespace {

instance trivial_instance(bool yes) { return instance(matrix::from_rows({{0}, {1}}), yes ? 1 : 0); }

instance incidence_instance(const undirected_graph& g, int k) {
    int m = static_cast<int>(g.edges.size());
    grid rows;
    rows.rows = m + 1;
    rows.cols = g.n;
    rows.cells.assign(static_cast<std::size_t>(m + 1) * g.n, 0);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edges[static_cast<std::size_t>(e)];
        rows.cells[static_cast<std::size_t>(e) * g.n + (u - 1)] = 1;
        rows.cells[static_cast<std::size_t>(e) * g.n + (v - 1)] = 1;
    }
    int budget = std::clamp(g.n - k, 0, g.n);
    return instance(matrix(std::move(rows)), budget);
}

}  // namespace

d3is_result from_graph_d3is(const undirected_graph& g, int k, bool enforce_preconditions) {
    g.validate();
    d3is_result out;

    if (!enforce_preconditions) {
        out.inst = incidence_instance(g, k);
        out.note = "raw incidence construction";
        return out;
    }

    // Isolated vertices always belong to a maximum solution: strip them and
    // lower the target accordingly.
    undirected_graph core = g;
    auto isolated = g.isolated_vertices();
    int target = k;
    if (!isolated.empty()) {
        target -= static_cast<int>(isolated.size());
        std::vector<int> rename(static_cast<std::size_t>(g.n) + 1, 0);
        int next = 0;
        std::set<int> iso(isolated.begin(), isolated.end());
        for (int v = 1; v <= g.n; ++v)
            if (!iso.count(v)) rename[static_cast<std::size_t>(v)] = ++next;
        core.n = next;
        for (auto& [u, v] : core.edges) {
            u = rename[static_cast<std::size_t>(u)];
            v = rename[static_cast<std::size_t>(v)];
        }
        out.note = "stripped " + std::to_string(isolated.size()) + " isolated vertices";
    }
    if (target <= 0) {
        out.trivial_verdict = true;
        out.inst = trivial_instance(true);
        out.note += (out.note.empty() ? "" : "; ") + std::string("isolated vertices already reach the target");
        return out;
    }
    if (target > core.n) {
        out.trivial_verdict = false;
        out.inst = trivial_instance(false);
        out.note += (out.note.empty() ? "" : "; ") + std::string("target exceeds the vertex count");
        return out;
    }

    // The construction needs at least four edges, two of them disjoint;
    // everything else is a star or of constant size and solved directly.
    std::optional<std::pair<std::size_t, std::size_t>> disjoint;
    for (std::size_t i = 0; i < core.edges.size() && !disjoint; ++i)
        for (std::size_t j = i + 1; j < core.edges.size() && !disjoint; ++j) {
            auto [a, b] = core.edges[i];
            auto [c, d] = core.edges[j];
            if (a != c && a != d && b != c && b != d) disjoint = {i, j};
        }

    if (core.edges.size() < 4 || !disjoint) {
        int direct = disjoint ? max_distance3_independent_set(core) : (core.edges.empty() ? core.n : 1);
        out.trivial_verdict = direct >= target;
        out.inst = trivial_instance(*out.trivial_verdict);
        out.note += (out.note.empty() ? "" : "; ") + std::string("degenerate graph solved directly");
        return out;
    }

    // Bring a disjoint edge pair to the front so the first two rows are at
    // Hamming distance four.
    std::swap(core.edges[0], core.edges[disjoint->first]);
    for (std::size_t j = 1; j < core.edges.size(); ++j) {
        auto [a, b] = core.edges[0];
        auto [c, d] = core.edges[j];
        if (a != c && a != d && b != c && b != d) {
            std::swap(core.edges[1], core.edges[j]);
            break;
        }
    }

    out.inst = incidence_instance(core, target);
    return out;
}

namespace {

void require_incidence_shape(const matrix& m) {
    if (!m.binary()) throw domain_error("padding: requires a binary matrix");
    if (m.n() < 3) throw domain_error("padding: too few rows for the construction");
    auto null_row = m.null_row_index();
    if (!null_row || *null_row != m.n()) throw domain_error("padding: null row must be the last row");
    for (int i = 1; i < m.n(); ++i)
        if (weight(m.bits(i)) != 2) throw domain_error("padding: non-null rows must have weight two");
    if (hamming(m.bits(1), m.bits(2)) != 4)
        throw domain_error("padding: first two rows must be at Hamming distance four");
}

}  // namespace

instance pad_case1(const instance& inst, int b) {
    if (b < 0) throw domain_error("pad_case1: b must be non-negative");
    const matrix& m = inst.m;
    require_incidence_shape(m);

    int n = m.n(), d = m.d();
    grid g;
    g.rows = n + 1;
    g.cols = d + b + 1;
    g.cells.assign(static_cast<std::size_t>(g.rows) * g.cols, 0);
    auto put = [&](int i, int j) { g.cells[static_cast<std::size_t>(i - 1) * g.cols + (j - 1)] = 1; };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= d; ++j)
            if (m.at(i, j)) put(i, j);
    for (int j = d + 1; j <= d + b; ++j) put(1, j);  // b copies of the row-1 indicator
    put(n + 1, d + b + 1);                           // the new row's own indicator
    return instance(matrix(std::move(g)), inst.k + 1);
}

instance pad_case2(const instance& inst, int a, int b) {
    if (a < 0 || b < 0) throw domain_error("pad_case2: a and b must be non-negative");
    const matrix& m = inst.m;
    require_incidence_shape(m);

    int n = m.n(), d = m.d();
    int half_up = (a + 1) / 2, half_down = a / 2;
    grid g;
    g.rows = n;
    g.cols = d + half_up * (n - 1) + half_down + b;
    g.cells.assign(static_cast<std::size_t>(g.rows) * g.cols, 0);
    auto put = [&](int i, int j) { g.cells[static_cast<std::size_t>(i - 1) * g.cols + (j - 1)] = 1; };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= d; ++j)
            if (m.at(i, j)) put(i, j);
    int col = d;
    for (int i = 1; i <= n - 1; ++i)  // ceil(a/2) indicator copies per non-null row
        for (int c = 0; c < half_up; ++c) put(i, ++col);
    for (int c = 0; c < half_down; ++c) {  // floor(a/2) all-but-null columns
        ++col;
        for (int i = 1; i <= n - 1; ++i) put(i, col);
    }
    for (int c = 0; c < b; ++c) put(1, ++col);  // b extra indicators of row 1
    return instance(matrix(std::move(g)), inst.k);
}

matrix gen_sunflower(const std::vector<int>& petal_sizes, int core_size, std::uint64_t seed) {
    if (core_size < 0) throw domain_error("gen_sunflower: negative core size");
    if (petal_sizes.empty()) throw domain_error("gen_sunflower: needs at least one petal");
    int empty_petals = 0;
    for (int p : petal_sizes) {
        if (p < 0) throw domain_error("gen_sunflower: negative petal size");
        if (p == 0) ++empty_petals;
    }
    if (empty_petals > 1) throw domain_error("gen_sunflower: two empty petals would make rows coincide");
    if (empty_petals == 1 && core_size == 0)
        throw domain_error("gen_sunflower: an empty petal with an empty core coincides with the null row");

    int d = core_size;
    for (int p : petal_sizes) d += p;
    std::vector<int> layout(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) layout[static_cast<std::size_t>(j)] = j + 1;
    seeded_rng rng(seed);
    rng.shuffle(layout);

    int n = static_cast<int>(petal_sizes.size()) + 1;
    grid g;
    g.rows = n;
    g.cols = d;
    g.cells.assign(static_cast<std::size_t>(n) * d, 0);
    int cursor = 0;
    std::vector<int> core_cols;
    for (int c = 0; c < core_size; ++c) core_cols.push_back(layout[static_cast<std::size_t>(cursor++)]);
    for (int i = 1; i <= n - 1; ++i) {
        for (int j : core_cols) g.cells[static_cast<std::size_t>(i - 1) * d + (j - 1)] = 1;
        for (int p = 0; p < petal_sizes[static_cast<std::size_t>(i - 1)]; ++p) {
            int j = layout[static_cast<std::size_t>(cursor++)];
            g.cells[static_cast<std::size_t>(i - 1) * d + (j - 1)] = 1;
        }
    }
    return matrix(std::move(g));
}

std::optional<matrix> gen_random_profile(int n, int d, int alpha, int beta, std::uint64_t seed, int attempts) {
    if (n < 2 || d < 1) throw domain_error("gen_random_profile: needs n >= 2, d >= 1");
    if (alpha < 1 || alpha > beta || beta > d) throw domain_error("gen_random_profile: need 1 <= alpha <= beta <= d");
    seeded_rng rng(seed);

    if (n == 2) {
        if (alpha != beta) return std::nullopt;  // a single pair has one distance
        std::vector<int> cols(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j) cols[static_cast<std::size_t>(j)] = j;
        rng.shuffle(cols);
        std::vector<std::vector<symbol>> rows(2, std::vector<symbol>(static_cast<std::size_t>(d), 0));
        for (int c = 0; c < alpha; ++c) rows[1][static_cast<std::size_t>(cols[static_cast<std::size_t>(c)])] = 1;
        return matrix::from_rows(rows);
    }

    for (int attempt = 0; attempt < attempts; ++attempt) {
        std::vector<std::vector<symbol>> rows(static_cast<std::size_t>(n),
                                              std::vector<symbol>(static_cast<std::size_t>(d), 0));
        auto put_random_ones = [&](int row, int count, const std::vector<int>& pool) {
            std::vector<int> cols = pool;
            rng.shuffle(cols);
            for (int c = 0; c < count && c < static_cast<int>(cols.size()); ++c)
                rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(cols[static_cast<std::size_t>(c)])] = 1;
        };
        std::vector<int> all_cols(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j) all_cols[static_cast<std::size_t>(j)] = j;

        if (attempt % 3 == 0) {
            // Core-seeded model: a null row plus rows sharing a common core
            // of about alpha/2 columns; near-Delta-system shapes hit tight
            // profiles far more often than independent draws.
            int core_size = std::min(d, alpha / 2 + ((alpha % 2 == 1 && rng.coin()) ? 1 : 0));
            std::vector<int> shuffled = all_cols;
            rng.shuffle(shuffled);
            std::vector<int> core(shuffled.begin(), shuffled.begin() + core_size);
            std::vector<int> rest(shuffled.begin() + core_size, shuffled.end());
            for (int i = 1; i < n; ++i) {
                int w = std::min(d, alpha + static_cast<int>(rng.below(static_cast<std::uint64_t>(beta - alpha + 1))));
                for (int j : core) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
                put_random_ones(i, w - core_size, rest);
            }
        } else if (attempt % 3 == 1) {
            // Weight-range model: a null row plus rows whose weight lies in
            // [alpha, beta], so distances to the null row land in range.
            for (int i = 1; i < n; ++i) {
                int w = std::min(d, alpha + static_cast<int>(rng.below(static_cast<std::uint64_t>(beta - alpha + 1))));
                put_random_ones(i, w, all_cols);
            }
        } else {
            for (auto& row : rows)
                for (auto& cell : row) cell = rng.coin() ? 1 : 0;
        }

        std::set<std::vector<symbol>> distinct(rows.begin(), rows.end());
        if (static_cast<int>(distinct.size()) != n) continue;
        matrix m = matrix::from_rows(rows);
        auto p = distance_profile(m);
        if (p.h == alpha && p.H == beta) return m;
    }
    return std::nullopt;
}

}  // namespace dv

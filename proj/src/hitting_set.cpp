#include "dv/hitting_set.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace dv {

int hitting_set_instance::max_card() const {
    std::size_t card = 0;
    for (const auto& s : sets) card = std::max(card, s.size());
    return static_cast<int>(card);
}

void hitting_set_instance::validate() const {
    if (universe_size < 0) throw domain_error("hitting set: negative universe");
    if (k < 0) throw domain_error("hitting set: negative budget");
    for (const auto& s : sets) {
        if (s.empty()) throw domain_error("hitting set: empty set is unhittable");
        if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
            throw domain_error("hitting set: sets must be strictly ascending");
        if (s.front() < 1 || s.back() > universe_size)
            throw domain_error("hitting set: element out of range [1, " + std::to_string(universe_size) + "]");
    }
}

hitting_set_instance read_hitting_set(std::istream& in) {
    hitting_set_instance hs;
    std::string line;
    if (!std::getline(in, line)) throw parse_error("hitting set file is empty");
    {
        std::istringstream head(line);
        long long u = -1, c = -1;
        if (!(head >> u >> c) || u < 0 || c < 0) throw parse_error("expected '|U| |C|' header", 1);
        hs.universe_size = static_cast<int>(u);
        long long count = c;
        for (long long i = 0; i < count; ++i) {
            if (!std::getline(in, line)) throw parse_error("fewer sets than declared", i + 1);
            std::istringstream row(line);
            std::vector<int> s;
            long long e;
            while (row >> e) s.push_back(static_cast<int>(e));
            hs.sets.push_back(std::move(s));
        }
    }
    hs.validate();
    return hs;
}

hitting_set_instance load_hitting_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return read_hitting_set(in);
}

void write_hitting_set(const hitting_set_instance& hs, std::ostream& out) {
    out << hs.universe_size << ' ' << hs.sets.size() << '\n';
    for (const auto& s : hs.sets) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out << ' ';
            out << s[i];
        }
        out << '\n';
    }
}

void save_hitting_set(const hitting_set_instance& hs, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open '" + path + "' for writing");
    write_hitting_set(hs, out);
}

hitting_set_instance dv_to_hitting_set(const instance& inst) {
    const matrix& m = inst.m;
    if (m.n() < 2) throw domain_error("dv_to_hitting_set: needs at least two rows");
    hitting_set_instance hs;
    hs.universe_size = m.d();
    hs.k = inst.k;
    std::set<std::vector<int>> seen;
    for (int i = 1; i <= m.n(); ++i)
        for (int j = i + 1; j <= m.n(); ++j) {
            auto diff = difference_set(m, i, j);
            if (seen.insert(diff).second) hs.sets.push_back(std::move(diff));
        }
    return hs;
}

instance hitting_set_to_dv(const hitting_set_instance& hs) {
    hs.validate();
    int n = static_cast<int>(hs.sets.size());
    grid g;
    g.rows = n + 1;
    g.cols = hs.universe_size;
    g.cells.assign(static_cast<std::size_t>(g.rows) * g.cols, 0);
    for (int i = 1; i <= n; ++i)
        for (int e : hs.sets[static_cast<std::size_t>(i - 1)])
            g.cells[static_cast<std::size_t>(i - 1) * g.cols + (e - 1)] = static_cast<symbol>(i);
    return instance(matrix(std::move(g)), std::min(hs.k, hs.universe_size));
}

solution greedy_factor_h(const instance& inst) {
    const matrix& m = inst.m;
    if (m.n() < 2) throw domain_error("greedy_factor_h: needs at least two rows");
    std::set<int> picked;
    for (int i = 1; i <= m.n(); ++i)
        for (int j = i + 1; j <= m.n(); ++j) {
            auto diff = difference_set(m, i, j);
            bool hit = std::any_of(diff.begin(), diff.end(), [&](int c) { return picked.count(c) > 0; });
            if (!hit) picked.insert(diff.begin(), diff.end());
        }
    return solution{std::vector<int>(picked.begin(), picked.end())};
}

unsigned long long g_bound(int max_card, int k) {
    const unsigned long long cap = ~0ULL;
    unsigned long long v = 1;
    auto mul = [&](unsigned long long f) {
        if (f != 0 && v > cap / f) v = cap;
        else v *= f;
    };
    for (int i = 2; i <= max_card; ++i) mul(static_cast<unsigned long long>(i));          // H!
    for (int i = 0; i <= max_card; ++i) mul(static_cast<unsigned long long>(max_card));   // H^(H+1)
    for (int i = 0; i < max_card; ++i) mul(static_cast<unsigned long long>(k) + 1);       // (k+1)^H
    return v;
}

namespace {

struct found_sunflower {
    std::vector<std::size_t> members;  // indices into the family
    std::vector<int> core;
};

// Erdos-Rado extraction: a greedy maximal disjoint subfamily either already
// yields the petals, or some element lies in enough sets to recurse on.
// Requires |family| > s! * k^s for s-uniform input; petals = k+1.
found_sunflower find_sunflower(const std::vector<std::vector<int>>& family, const std::vector<std::size_t>& index,
                               int petals) {
    std::vector<std::size_t> disjoint;
    std::set<int> used;
    for (std::size_t idx = 0; idx < index.size(); ++idx) {
        const auto& s = family[index[idx]];
        bool clash = std::any_of(s.begin(), s.end(), [&](int e) { return used.count(e) > 0; });
        if (!clash) {
            disjoint.push_back(idx);
            used.insert(s.begin(), s.end());
            if (static_cast<int>(disjoint.size()) == petals) break;
        }
    }
    if (static_cast<int>(disjoint.size()) >= petals) {
        found_sunflower out;
        for (std::size_t i : disjoint) out.members.push_back(index[i]);
        return out;
    }

    // Pick the most frequent element of the (small) union and recurse on
    // the link, ties to the smallest element.
    std::map<int, int> freq;
    for (std::size_t i : index)
        for (int e : family[i]) ++freq[e];
    int pivot = 0, best = -1;
    for (int e : used)
        if (freq[e] > best) {
            best = freq[e];
            pivot = e;
        }

    std::vector<std::vector<int>> link;
    std::vector<std::size_t> link_index;
    std::vector<std::size_t> parents;
    for (std::size_t i : index) {
        const auto& s = family[i];
        if (!std::binary_search(s.begin(), s.end(), pivot)) continue;
        std::vector<int> shrunk;
        std::copy_if(s.begin(), s.end(), std::back_inserter(shrunk), [&](int e) { return e != pivot; });
        link.push_back(std::move(shrunk));
        parents.push_back(i);
    }
    link_index.resize(link.size());
    for (std::size_t i = 0; i < link.size(); ++i) link_index[i] = i;

    auto inner = find_sunflower(link, link_index, petals);
    found_sunflower out;
    out.core = inner.core;
    out.core.insert(std::lower_bound(out.core.begin(), out.core.end(), pivot), pivot);
    for (std::size_t i : inner.members) out.members.push_back(parents[i]);
    return out;
}

unsigned long long class_limit(int s, int k) {
    // s! * k^s, saturating; above this a (k+1)-petal sunflower exists.
    const unsigned long long cap = ~0ULL;
    unsigned long long v = 1;
    auto mul = [&](unsigned long long f) {
        if (f != 0 && v > cap / f) v = cap;
        else v *= f;
    };
    for (int i = 2; i <= s; ++i) mul(static_cast<unsigned long long>(i));
    for (int i = 0; i < s; ++i) mul(static_cast<unsigned long long>(k));
    return v;
}

}  // namespace

std::optional<hitting_set_instance> hs_kernelize(const hitting_set_instance& hs) {
    hs.validate();
    int h = hs.max_card();
    int k = hs.k;

    // Family as a sorted set of distinct sets.
    std::set<std::vector<int>> family_set(hs.sets.begin(), hs.sets.end());
    if (k == 0 && !family_set.empty()) return std::nullopt;

    if (k > 0) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int s = 1; s <= h && !changed; ++s) {
                std::vector<std::vector<int>> cls;
                for (const auto& set : family_set)
                    if (static_cast<int>(set.size()) == s) cls.push_back(set);
                if (cls.size() <= class_limit(s, k)) continue;

                std::vector<std::size_t> index(cls.size());
                for (std::size_t i = 0; i < cls.size(); ++i) index[i] = i;
                auto sf = find_sunflower(cls, index, k + 1);
                if (sf.core.empty()) return std::nullopt;  // k+1 disjoint sets cannot be hit
                for (std::size_t i : sf.members) family_set.erase(cls[i]);
                family_set.insert(sf.core);
                changed = true;
            }
        }
    }

    // Trim the universe to surviving elements, keeping the old order.
    std::set<int> elements;
    for (const auto& s : family_set)
        for (int e : s) elements.insert(e);
    std::map<int, int> rename;
    int next = 0;
    for (int e : elements) rename[e] = ++next;

    hitting_set_instance out;
    out.universe_size = next;
    out.k = k;
    for (const auto& s : family_set) {
        std::vector<int> renamed;
        renamed.reserve(s.size());
        for (int e : s) renamed.push_back(rename[e]);
        out.sets.push_back(std::move(renamed));
    }

    auto bound = g_bound(h, k);
    if (out.sets.size() > bound || static_cast<unsigned long long>(out.universe_size) > bound)
        throw contract_error("hs_kernelize: kernel exceeds the g(H,k) bound");
    return out;
}

instance kernelize_h_k(const instance& inst) {
    auto hs = dv_to_hitting_set(inst);
    auto kernel = hs_kernelize(hs);
    if (!kernel) {
        // Definite no: a two-row instance with no budget.
        return instance(matrix::from_rows({{0}, {1}}), 0);
    }
    if (kernel->sets.empty()) {
        // Definite yes (cannot arise from a matrix with n >= 2, but keep
        // the pipeline total).
        return instance(matrix::from_rows({{0}, {1}}), 1);
    }
    return hitting_set_to_dv(*kernel);
}

}  // namespace dv

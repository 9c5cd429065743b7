#include "dv/set_family.hpp"

#include <algorithm>
#include <set>

namespace dv {

set_family make_family(std::vector<std::vector<int>> sets) {
    set_family f;
    std::set<std::vector<int>> seen;
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (seen.insert(s).second) f.sets.push_back(std::move(s));
    }
    if (!f.sets.empty()) {
        std::size_t s0 = f.sets.front().size();
        bool uniform = std::all_of(f.sets.begin(), f.sets.end(), [&](const auto& s) { return s.size() == s0; });
        if (uniform) f.uniform_size = static_cast<int>(s0);
    }
    return f;
}

set_family column_system(const matrix& m, const std::vector<int>& row_indices) {
    if (!m.binary()) throw domain_error("column_system: requires a binary matrix");
    std::vector<std::vector<int>> sets;
    for (int i : row_indices) {
        if (i < 1 || i > m.n()) throw domain_error("column_system: row index out of range");
        sets.push_back(m.one_positions(i));
    }
    return make_family(std::move(sets));
}

static std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::optional<int> weak_delta_lambda(const set_family& f) {
    if (f.size() < 2) throw domain_error("weak_delta_lambda: needs at least two sets");
    auto lambda = static_cast<int>(intersect(f.sets[0], f.sets[1]).size());
    for (std::size_t i = 0; i < f.sets.size(); ++i)
        for (std::size_t j = i + 1; j < f.sets.size(); ++j)
            if (static_cast<int>(intersect(f.sets[i], f.sets[j]).size()) != lambda) return std::nullopt;
    return lambda;
}

std::optional<sunflower> sunflower_core(const set_family& f) {
    if (f.size() < 2) throw domain_error("sunflower_core: needs at least two sets");
    // Candidate core from the first two sets, then a global verification.
    std::vector<int> core = intersect(f.sets[0], f.sets[1]);
    for (std::size_t i = 0; i < f.sets.size(); ++i)
        for (std::size_t j = i + 1; j < f.sets.size(); ++j)
            if (intersect(f.sets[i], f.sets[j]) != core) return std::nullopt;
    sunflower s;
    s.family = f;
    s.core = core;
    s.lambda = static_cast<int>(core.size());
    for (const auto& member : f.sets) {
        std::vector<int> petal;
        std::set_difference(member.begin(), member.end(), core.begin(), core.end(), std::back_inserter(petal));
        s.petals.push_back(std::move(petal));
    }
    return s;
}

long long deza_threshold(long long s) { return s * s - s + 2; }

bool sunflower_intersection_check(const sunflower& f, const std::vector<int>& x, int lambda) {
    if (f.family.size() <= static_cast<int>(x.size())) return true;
    if (lambda > static_cast<int>(f.core.size())) return false;
    std::vector<int> xs = x;
    std::sort(xs.begin(), xs.end());
    return static_cast<int>(intersect(xs, f.core).size()) >= lambda;
}

solution solve_sunflower(const matrix& m) {
    if (!m.binary()) throw domain_error("solve_sunflower: requires a binary matrix");
    auto null_row = m.null_row_index();
    if (!null_row) throw domain_error("solve_sunflower: requires a preprocessed matrix with a null row");

    std::vector<int> non_null;
    for (int i = 1; i <= m.n(); ++i)
        if (i != *null_row) non_null.push_back(i);
    set_family family = column_system(m, non_null);

    std::vector<int> core;
    std::vector<std::vector<int>> petals;
    if (family.size() == 0) {
        return solution{};  // single null row, nothing to distinguish
    } else if (family.size() == 1) {
        petals.push_back(family.sets.front());  // degenerate one-set family: empty core
    } else {
        auto s = sunflower_core(family);
        if (!s) throw domain_error("solve_sunflower: column system is not a sunflower");
        core = s->core;
        petals = s->petals;
    }

    // One column per non-empty petal; a core column only when some petal is
    // empty. Choices are made deterministic by taking smallest indices.
    std::vector<int> picked;
    bool empty_petal = false;
    for (const auto& petal : petals) {
        if (petal.empty())
            empty_petal = true;
        else
            picked.push_back(petal.front());
    }
    if (empty_petal) {
        if (core.empty()) throw contract_error("solve_sunflower: empty petal with empty core");
        picked.push_back(core.front());
    }
    return make_solution(std::move(picked), m.d());
}

}  // namespace dv

#include <doctest.h>

#include <algorithm>

#include "dv/generators.hpp"
#include "dv/reductions.hpp"
#include "dv/solvers.hpp"
#include "fixtures.hpp"
#include "test_support.hpp"

using namespace dv;

namespace {

// Preprocess + inessential-column rule, the solver's required input form.
matrix reduce_fully(const matrix& m) { return apply_rule_inessential(preprocess_binary(m).m).m; }

int oracle_min(const matrix& m) { return minimum_solution_oracle(m, {20, 18}).size(); }

// Runs the polynomial solver with full budget and compares the minimum
// against the oracle.
void check_against_oracle(const matrix& reduced, poly_trace* trace = nullptr) {
    auto sol = solve_poly_homogeneous(instance(reduced, reduced.d()), trace);
    REQUIRE(sol.has_value());
    CHECK(is_distinguishing(reduced, *sol));
    CHECK(sol->size() == oracle_min(reduced));
}

}  // namespace

TEST_CASE("poly solver requires reduced input") {
    // the raw sunflower fixture has duplicate columns
    CHECK_THROWS_AS(solve_poly_homogeneous(instance(fixtures::sunflower_7x10(), 6)), domain_error);
    // missing null row
    matrix no_null = support::build_from_sets({{1}, {1, 2}}, 2);
    CHECK_THROWS_AS(solve_poly_homogeneous(instance(no_null, 2)), domain_error);
}

TEST_CASE("poly solver rejects profiles outside the regimes") {
    // (2,4) profile, reduced
    matrix m = reduce_fully(fixtures::incidence_5x4());
    auto p = distance_profile(m);
    if (p.H >= 2 * ((p.h + 1) / 2) + 2) CHECK_THROWS_AS(solve_poly_homogeneous(instance(m, m.d())), domain_error);
}

TEST_CASE("gap-one regime: reduced sunflower fixture lands in the large-class case") {
    matrix reduced = reduce_fully(fixtures::sunflower_7x10());
    auto p = distance_profile(reduced);
    REQUIRE(p.h == 1);
    REQUIRE(p.H == 2);
    poly_trace trace;
    auto sol = solve_poly_homogeneous(instance(reduced, reduced.d()), &trace);
    REQUIRE(sol.has_value());
    CHECK(sol->size() == 6);
    CHECK(trace.regime == 1);
    CHECK_FALSE(trace.delegated);

    // budget one below the minimum: no
    CHECK_FALSE(solve_poly_homogeneous(instance(reduced, 5)).has_value());
}

TEST_CASE("gap-one regime: small instances delegate to the exact solver") {
    matrix m = support::build_from_sets({{1}, {2}, {1, 2}, {}}, 2);  // profile (1,2), all classes below c
    poly_trace trace;
    auto sol = solve_poly_homogeneous(instance(m, 2), &trace);
    REQUIRE(sol.has_value());
    CHECK(trace.delegated);
    CHECK(sol->size() == oracle_min(m));
}

TEST_CASE("gap-one regime: pure weight-alpha sunflowers above threshold") {
    // fifteen disjoint singletons: alpha = 1, beta = 2, n_1 >= c
    std::vector<std::vector<int>> sets;
    for (int i = 1; i <= 15; ++i) sets.push_back({i});
    sets.push_back({});
    matrix m = support::build_from_sets(sets, 15);
    poly_trace trace;
    auto sol = solve_poly_homogeneous(instance(m, 15), &trace);
    REQUIRE(sol.has_value());
    CHECK(sol->size() == 15);
    CHECK(trace.regime == 1);
    CHECK_FALSE(trace.delegated);
    CHECK_FALSE(solve_poly_homogeneous(instance(m, 14)).has_value());
}

TEST_CASE("gap-one regime matches the oracle on random reduced instances") {
    int solved = 0;
    for (int seed = 1; solved < 60 && seed < 400; ++seed) {
        int alpha = 1 + (seed % 3);
        int beta = alpha + (seed % 2);
        auto m = gen_random_profile(4 + (seed % 5), 5 + (seed % 7), alpha, beta, static_cast<std::uint64_t>(seed), 400);
        if (!m) continue;
        matrix reduced = reduce_fully(*m);
        if (reduced.n() < 2) continue;
        auto p = distance_profile(reduced);
        if (p.H > p.h + 1) continue;  // reduction left the gap-one regime
        check_against_oracle(reduced);
        ++solved;
    }
    CHECK(solved >= 60);
}

TEST_CASE("gap-two regime case II: many weight-1 rows") {
    matrix m = support::case_ii_alpha1(8);
    REQUIRE(distance_profile(m).h == 1);
    REQUIRE(distance_profile(m).H == 3);
    REQUIRE(find_inessential_columns(m).empty());
    poly_trace trace;
    check_against_oracle(m, &trace);
    CHECK(trace.regime == 2);
    CHECK(trace.case_label.find("case II") != std::string::npos);
}

TEST_CASE("gap-two regime case III: large weight-2 sunflower") {
    matrix m = support::profile_1_3(8, 1, true);
    REQUIRE(distance_profile(m).h == 1);
    REQUIRE(distance_profile(m).H == 3);
    REQUIRE(find_inessential_columns(m).empty());
    poly_trace trace;
    check_against_oracle(m, &trace);
    CHECK(trace.case_label.find("case III") != std::string::npos);
}

TEST_CASE("gap-two regime case IV: large weight-3 sunflower") {
    matrix m = support::profile_1_3(0, 8, true);
    REQUIRE(find_inessential_columns(m).empty());
    poly_trace trace;
    check_against_oracle(m, &trace);
    CHECK(trace.case_label.find("case IV") != std::string::npos);
}

TEST_CASE("gap-two regime case V: large weight-1 and weight-2 classes") {
    matrix m = support::case_v_alpha1(8, 8);
    REQUIRE(find_inessential_columns(m).empty());
    poly_trace trace;
    check_against_oracle(m, &trace);
    CHECK(trace.case_label.find("case V") != std::string::npos);
}

TEST_CASE("gap-two regime case VIII with alpha = 1") {
    matrix m = support::profile_1_3(7, 8, true);  // n2 = 8 (petals + guard), n3 = 8
    REQUIRE(find_inessential_columns(m).empty());
    auto a = analyze_weight_classes(m);
    REQUIRE(a.count(2) >= 8);
    REQUIRE(a.count(3) >= 8);
    poly_trace trace;
    check_against_oracle(m, &trace);
    CHECK(trace.case_label.find("case VIII") != std::string::npos);
}

TEST_CASE("gap-two regime small cases delegate and match the oracle") {
    seeded_rng rng(402);
    for (int trial = 0; trial < 40; ++trial) {
        int n2 = static_cast<int>(rng.below(4));
        int n3 = 1 + static_cast<int>(rng.below(4));
        matrix m = support::profile_1_3(n2, n3, rng.coin());
        matrix reduced = reduce_fully(m);
        auto p = distance_profile(reduced);
        if (!(p.h % 2 == 1 && p.H == p.h + 2)) continue;
        poly_trace trace;
        check_against_oracle(reduced, &trace);
        CHECK(trace.regime == 2);
    }
}

TEST_CASE("matching fixture: oracle answer is five") {
    matrix m = fixtures::matching_10x11();
    CHECK(oracle_min(m) == 5);
    // below threshold, the dispatcher delegates yet stays exact
    poly_trace trace;
    auto sol = solve_poly_homogeneous(instance(m, 5), &trace);
    REQUIRE(sol.has_value());
    CHECK(sol->size() == 5);
    CHECK(trace.regime == 2);
    CHECK_FALSE(solve_poly_homogeneous(instance(m, 4)).has_value());
}

TEST_CASE("matching construction solves the 10x11 fixture directly") {
    matrix m = fixtures::matching_10x11();
    auto a = analyze_weight_classes(m);
    poly_trace trace;
    auto sol = poly_detail::case_viii_matching(instance(m, 5), a, &trace);
    REQUIRE(sol.has_value());
    CHECK(sol->columns == std::vector<int>{3, 4, 6, 9, 10});  // crossing column + matched edges
    CHECK(is_distinguishing(m, *sol));
    CHECK_FALSE(poly_detail::case_viii_matching(instance(m, 4), a, &trace).has_value());
}

TEST_CASE("matching construction on generated gap-two instances") {
    seeded_rng rng(403);
    for (int n5 : {2, 3, 5}) {
        matrix m = support::matching_alpha3(n5, rng);
        REQUIRE(distance_profile(m).h == 3);
        REQUIRE(distance_profile(m).H == 5);
        REQUIRE(find_inessential_columns(m).empty());
        auto a = analyze_weight_classes(m);
        CHECK(a.count(4) == a.count(5) + 1);  // bipartite degree identity
        poly_trace trace;
        auto sol = poly_detail::case_viii_matching(instance(m, m.d()), a, &trace);
        REQUIRE(sol.has_value());
        CHECK(sol->size() == a.count(4) + 1);
        CHECK(is_distinguishing(m, *sol));
        if (m.n() <= 20 && m.d() <= 18) CHECK(sol->size() == oracle_min(m));
    }
}

TEST_CASE("gap-two regime case VIII via threshold dispatch on a large instance") {
    seeded_rng rng(404);
    matrix m = support::matching_alpha3(22, rng);  // n4 = 23, n5 = 22, both >= c = 22
    auto a = analyze_weight_classes(m);
    REQUIRE(a.count(4) >= a.threshold_c);
    REQUIRE(a.count(5) >= a.threshold_c);
    REQUIRE(find_inessential_columns(m).empty());

    poly_trace trace;
    auto sol = solve_poly_homogeneous(instance(m, m.d()), &trace);
    REQUIRE(sol.has_value());
    CHECK(trace.case_label.find("case VIII matching") != std::string::npos);
    CHECK(sol->size() == a.count(4) + 1);
    CHECK(is_distinguishing(m, *sol));
    // no solution of size n_{alpha+1} exists
    CHECK_FALSE(solve_poly_homogeneous(instance(m, a.count(4))).has_value());
}

TEST_CASE("case VIII identity holds on generated gap-two instances") {
    seeded_rng rng(405);
    for (int n5 : {2, 4, 22}) {
        matrix m = support::matching_alpha3(n5, rng);
        auto a = analyze_weight_classes(m);
        CHECK(a.count(4) == a.count(5) + 3 / 2);  // n_{alpha+1} = n_{alpha+2} + floor(alpha/2)
    }
}

TEST_CASE("single-row and trivial inputs") {
    matrix one = matrix::from_rows({{0, 0}});
    auto sol = solve_poly_homogeneous(instance(one, 0));
    REQUIRE(sol.has_value());
    CHECK(sol->size() == 0);
}

TEST_CASE("triangle column system below the threshold is delegated") {
    // weight-2 rows {1,2},{2,3},{1,3}: a weak Delta-system that is not a
    // sunflower; profile (1,3), all classes small.
    matrix m = support::build_from_sets({{1, 2}, {2, 3}, {1, 3}, {1}, {}}, 3);
    REQUIRE(distance_profile(m).h == 1);
    REQUIRE(distance_profile(m).H == 3);
    REQUIRE(find_inessential_columns(m).empty());
    poly_trace trace;
    auto sol = solve_poly_homogeneous(instance(m, 3), &trace);
    REQUIRE(sol.has_value());
    CHECK(trace.delegated);
    CHECK(sol->size() == minimum_solution_oracle(m).size());
}

TEST_CASE("auto dispatch equals the oracle on gap-two profiles") {
    seeded_rng rng(406);
    for (int trial = 0; trial < 25; ++trial) {
        matrix m = support::profile_1_3(static_cast<int>(rng.below(5)), 1 + static_cast<int>(rng.below(5)),
                                        rng.coin());
        matrix shuffled = support::disguise(m, rng);
        int expect = minimum_solution_oracle(shuffled, {20, 18}).size();
        for (int k : {expect - 1, expect}) {
            if (k < 0) continue;
            auto outcome = solve(instance(shuffled, std::min(k, shuffled.d())), strategy::auto_select);
            CHECK(outcome.sol.has_value() == (k >= expect));
            if (outcome.sol) {
                CHECK(outcome.sol->size() == expect);
                CHECK(is_distinguishing(shuffled, *outcome.sol));
            }
        }
    }
}

#include <doctest.h>

#include <random>

#include "noflab/zoo.hpp"

using namespace noflab;

TEST_SUITE_BEGIN("zoo");

TEST_CASE("all-bits-and inner") {
    SymmetricTable g = and_inner(2, 3);
    CHECK(g.at_type(ColumnType{3}) == 1);
    CHECK(g.at_type(ColumnType{2}) == 0);
    CHECK(g.at_type(ColumnType{0}) == 0);

    // d = 4: the all-ones pattern is symbol 3
    SymmetricTable g4 = and_inner(4, 2);
    CHECK(g4.at_type(ColumnType{0, 0, 2}) == 1);
    CHECK(g4.at_type(ColumnType{0, 1, 1}) == 0);

    // d = 3 cannot encode the all-ones pattern (symbol 3): constant 0
    SymmetricTable g3 = and_inner(3, 2);
    for (int i = 0; i < g3.orbits().size(); ++i) CHECK(g3.at_index(i) == 0);
}

TEST_CASE("bit-majority inner over encoded columns") {
    // d = 2, k = 4: weight of the column vs 4 bits total; tie at weight 2
    SymmetricTable ge = majority_bits_inner(2, 4, TieRule::Ge);
    SymmetricTable gt = majority_bits_inner(2, 4, TieRule::Gt);
    CHECK(ge.at_type(ColumnType{2}) == 1);
    CHECK(gt.at_type(ColumnType{2}) == 0);
    CHECK(ge.at_type(ColumnType{1}) == 0);
    CHECK(gt.at_type(ColumnType{3}) == 1);

    // d = 4, k = 2: t = 2, four bits per column
    SymmetricTable m4 = majority_bits_inner(4, 2, TieRule::Ge);
    CHECK(m4.at_type(ColumnType{0, 0, 2}) == 1);  // both rows 11: weight 4
    CHECK(m4.at_type(ColumnType{1, 0, 0}) == 0);  // rows 01, 00: weight 1
    CHECK(m4.at_type(ColumnType{1, 1, 0}) == 1);  // rows 01, 10: weight 2, tie
    SymmetricTable m4gt = majority_bits_inner(4, 2, TieRule::Gt);
    CHECK(m4gt.at_type(ColumnType{1, 1, 0}) == 0);
}

TEST_CASE("symbol-sum threshold inner") {
    SymmetricTable thr = threshold_sum_inner(3, 2, 3);
    CHECK(thr.at_type(ColumnType{0, 2}) == 1);  // 2 + 2
    CHECK(thr.at_type(ColumnType{1, 1}) == 1);  // 1 + 2
    CHECK(thr.at_type(ColumnType{0, 1}) == 0);  // 2
    CHECK(thr.at_type(ColumnType{2, 0}) == 0);  // 1 + 1
}

TEST_CASE("outer weight tables") {
    CHECK(mod2_outer(4) == std::vector<std::uint8_t>{0, 1, 0, 1, 0});
    CHECK(zero_test_outer(3) == std::vector<std::uint8_t>{1, 0, 0, 0});
    CHECK(majority_outer(4, TieRule::Ge) == std::vector<std::uint8_t>{0, 0, 1, 1, 1});
    CHECK(majority_outer(4, TieRule::Gt) == std::vector<std::uint8_t>{0, 0, 0, 1, 1});
    CHECK(majority_outer(5, TieRule::Ge) == std::vector<std::uint8_t>{0, 0, 0, 1, 1, 1});
}

TEST_CASE("seeded generators are reproducible") {
    CHECK(random_symmetric(5, 2, 8) == random_symmetric(5, 2, 8));
    CHECK(random_weight_table(5, 16) == random_weight_table(5, 16));
    CHECK(random_matrix(5, 4, 16, 3) == random_matrix(5, 4, 16, 3));
    CHECK(random_matrix(5, 4, 16, 3) != random_matrix(6, 4, 16, 3));
    for (int j = 1; j <= 16; ++j)
        for (int i = 1; i <= 4; ++i) CHECK(random_matrix(5, 4, 16, 3).at(i, j) < 3);
}

TEST_CASE("named registry") {
    ComposedSpec gip = make_named("gip", 2, 3, 4);
    CHECK(gip.outer == mod2_outer(4));
    REQUIRE(gip.inners.size() == 4);
    for (const auto& g : gip.inners) CHECK(g == and_inner(2, 3));

    ComposedSpec disj = make_named("disj", 2, 3, 4);
    CHECK(disj.outer == zero_test_outer(4));

    ComposedSpec mm = make_named("majmaj", 2, 5, 5);
    CHECK(mm.outer == majority_outer(5));
    CHECK(mm.inners[0] == majority_bits_inner(2, 5));

    ComposedSpec thr = make_named("majthr:3", 3, 2, 4);
    CHECK(thr.inners[0] == threshold_sum_inner(3, 2, 3));

    ComposedSpec rnd = make_named("random", 2, 4, 4, 9);
    for (const auto& g : rnd.inners) CHECK(g == rnd.inners[0]);
    ComposedSpec rnd2 = make_named("random", 2, 4, 4, 9);
    CHECK(rnd.outer == rnd2.outer);
    CHECK(rnd.inners[0] == rnd2.inners[0]);

    ComposedSpec mixed = make_named("random-mixed", 2, 8, 4, 1);
    bool any_differ = false;
    for (std::size_t a = 0; a < mixed.inners.size(); ++a)
        for (std::size_t b = a + 1; b < mixed.inners.size(); ++b)
            any_differ |= !(mixed.inners[a] == mixed.inners[b]);
    CHECK(any_differ);

    CHECK_THROWS_AS(make_named("frobnicate", 2, 3, 4), std::invalid_argument);
}

TEST_CASE("direct evaluation, worked examples") {
    // columns (1,1) and (1,0): one all-ones column, parity 1
    InputMatrix m(2, 2, 2, {1, 1, 1, 0});
    CHECK(direct_eval(make_named("gip", 2, 2, 2), m) == 1);
    CHECK(direct_eval(make_named("disj", 2, 2, 2), m) == 0);

    InputMatrix zeros(2, 3, 2);
    CHECK(direct_eval(make_named("gip", 2, 2, 3), zeros) == 0);
    CHECK(direct_eval(make_named("disj", 2, 2, 3), zeros) == 1);

    CHECK_THROWS_AS(direct_eval(make_named("gip", 2, 2, 2), zeros), std::invalid_argument);
    CHECK_THROWS_AS(direct_eval(make_named("gip", 3, 2, 2), m), std::invalid_argument);
}

TEST_CASE("direct evaluation agrees with literal bit arithmetic") {
    std::mt19937_64 gen(31);
    for (int trial = 0; trial < 50; ++trial) {
        int k = 2 + gen() % 4;
        int n = 1 + gen() % 5;
        InputMatrix m = random_matrix(gen(), k, n, 2);

        long long and_cols = 0, maj_cols = 0;
        for (int j = 1; j <= n; ++j) {
            int weight = 0;
            for (int i = 1; i <= k; ++i) weight += m.at(i, j);
            and_cols += weight == k;
            maj_cols += 2 * weight >= k;
        }
        CHECK(direct_eval(make_named("gip", 2, k, n), m) == (and_cols & 1));
        CHECK(direct_eval(make_named("disj", 2, k, n), m) == (and_cols == 0 ? 1 : 0));
        CHECK(direct_eval(make_named("majmaj", 2, k, n), m) == (2 * maj_cols >= n ? 1 : 0));
    }
}

TEST_SUITE_END();

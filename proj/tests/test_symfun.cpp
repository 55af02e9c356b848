#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "noflab/symfun.hpp"
#include "noflab/zoo.hpp"

using namespace noflab;

TEST_SUITE_BEGIN("symfun");

namespace {

// test-local point table: mask bits [(u-1)*t, u*t) hold row u's value
std::vector<RowBits> rows_of_mask(std::uint64_t mask, int t, int k) {
    std::vector<RowBits> rows(k);
    for (int u = 0; u < k; ++u) rows[u] = static_cast<RowBits>((mask >> (u * t)) & ((1u << t) - 1));
    return rows;
}

std::vector<long long> dense_points(const SymmetricTable& g, int t) {
    int k = g.arity();
    std::vector<long long> pts(std::size_t(1) << (t * k));
    for (std::uint64_t m = 0; m < pts.size(); ++m) {
        auto rows = rows_of_mask(m, t, k);
        pts[m] = g.at_point(rows);
    }
    return pts;
}

// independent inclusion-exclusion straight from the definition
long long mobius_oracle(const std::vector<long long>& pts, std::uint64_t a) {
    long long acc = 0;
    std::uint64_t sub = a;
    int pa = std::popcount(a);
    while (true) {
        acc += ((pa - std::popcount(sub)) % 2 == 0) ? pts[sub] : -pts[sub];
        if (sub == 0) break;
        sub = (sub - 1) & a;
    }
    return acc;
}

}  // namespace

TEST_CASE("smallest prime strictly inside (n, 2n)") {
    CHECK(smallest_prime_in(2).p == 3);
    CHECK(smallest_prime_in(4).p == 5);
    CHECK(smallest_prime_in(8).p == 11);
    CHECK(smallest_prime_in(10).p == 11);
    CHECK(smallest_prime_in(100).p == 101);
    CHECK_THROWS_AS(smallest_prime_in(1), std::invalid_argument);
    for (long long n = 2; n <= 300; ++n) {
        int p = smallest_prime_in(n).p;
        CHECK(p > n);
        CHECK(p < 2 * n);
    }
}

TEST_CASE("row value order: weight first, then numeric") {
    CHECK(row_value_less(0, 1));
    CHECK(row_value_less(1, 2));   // same weight, numeric tie-break
    CHECK(row_value_less(2, 3));
    CHECK(row_value_less(4, 3));   // weight 1 before weight 2
    CHECK_FALSE(row_value_less(3, 3));
}

TEST_CASE("sorted tuples enumerate nondecreasing rows in canonical order") {
    auto s12 = sorted_tuples(1, 2);
    REQUIRE(s12.size() == 3);
    CHECK(s12[0].rows == std::vector<RowBits>{0, 0});
    CHECK(s12[1].rows == std::vector<RowBits>{0, 1});
    CHECK(s12[2].rows == std::vector<RowBits>{1, 1});

    auto s22 = sorted_tuples(2, 2);
    CHECK(s22.size() == 10);  // C(2+3, 3)
    CHECK(s22.front().rows == std::vector<RowBits>{0, 0});
    CHECK(s22.back().rows == std::vector<RowBits>{3, 3});

    for (int t = 1; t <= 3; ++t)
        for (int k = 0; k <= (t == 3 ? 4 : 6); ++k) {
            auto all = sorted_tuples(t, k);
            CHECK(BigInt(all.size()) == binomial(k + (1 << t) - 1, (1 << t) - 1));
            std::set<std::vector<RowBits>> uniq;
            for (const auto& a : all) {
                CHECK(std::is_sorted(a.rows.begin(), a.rows.end(), row_value_less));
                uniq.insert(a.rows);
            }
            CHECK(uniq.size() == all.size());
        }
}

TEST_CASE("tuple and orbit views agree") {
    for (int t = 1; t <= 2; ++t)
        for (int k = 1; k <= 5; ++k) {
            TypeIndexer orbits((1 << t) - 1, k);
            auto all = sorted_tuples(t, k);
            REQUIRE(static_cast<int>(all.size()) == orbits.size());
            for (const auto& a : all) {
                ColumnType ty = type_of_tuple(a, t);
                CHECK(tuple_of_type(ty, k) == a);
            }
        }
    CHECK(sort_tuple(std::vector<RowBits>{3, 0, 1}).rows == std::vector<RowBits>{0, 1, 3});
}

TEST_CASE("symmetric tables index one value per orbit") {
    auto g = SymmetricTable::from_predicate(3, 2, [](const ColumnType& e) { return e.level() >= 2; });
    CHECK(g.values().size() == 4);
    CHECK(g.at_point(std::vector<RowBits>{1, 0, 1}) == 1);
    CHECK(g.at_point(std::vector<RowBits>{0, 0, 1}) == 0);
    CHECK_THROWS_AS(SymmetricTable(2, 2, {0, 1}), std::invalid_argument);      // wrong size
    CHECK_THROWS_AS(SymmetricTable(2, 2, {0, 1, 2}), std::invalid_argument);   // non-boolean
}

TEST_CASE("multilinear coefficients: conjunction example") {
    auto and2 = and_inner(2, 2);
    CHECK(mobius_coefficient(and2, std::vector<RowBits>{1, 1}) == 1);
    CHECK(mobius_coefficient(and2, std::vector<RowBits>{1, 0}) == 0);
    CHECK(mobius_coefficient(and2, std::vector<RowBits>{0, 0}) == 0);
}

TEST_CASE("multilinear coefficients match inclusion-exclusion on the dense table") {
    std::mt19937_64 gen(42);
    for (auto [t, k] : {std::pair{1, 4}, {1, 6}, {2, 3}, {3, 2}}) {
        SymmetricTable g = random_symmetric(gen(), 1 << t, k);
        auto pts = dense_points(g, t);
        for (std::uint64_t a = 0; a < pts.size(); ++a) {
            auto rows = rows_of_mask(a, t, k);
            CHECK(mobius_coefficient(g, rows) == BigInt(mobius_oracle(pts, a)));
        }
    }
}

TEST_CASE("coefficients are invariant under row permutation") {
    std::mt19937_64 gen(7);
    SymmetricTable g = random_symmetric(9, 4, 5);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<RowBits> rows(5);
        for (auto& r : rows) r = static_cast<RowBits>(gen() % 4);
        auto shuffled = rows;
        std::shuffle(shuffled.begin(), shuffled.end(), gen);
        CHECK(mobius_coefficient(g, rows) == mobius_coefficient(g, shuffled));
    }
}

TEST_CASE("dense transforms invert each other and reconstruct the table") {
    std::mt19937_64 gen(3);
    for (auto [t, k] : {std::pair{1, 5}, {2, 3}}) {
        SymmetricTable g = random_symmetric(gen(), 1 << t, k);
        auto pts = dense_points(g, t);
        auto coeffs = mobius_transform(pts);
        CHECK(zeta_transform(coeffs) == pts);
        // coefficient vector agrees with the per-point computation
        for (std::uint64_t a = 0; a < pts.size(); ++a)
            CHECK(BigInt(coeffs[a]) == mobius_coefficient(g, rows_of_mask(a, t, k)));
        // multilinear evaluation at every point returns the table
        for (std::uint64_t x = 0; x < pts.size(); ++x)
            CHECK(multilinear_eval(coeffs, x) == pts[x]);
    }
}

TEST_CASE("symmetrized monomial: distinct-arrangement counting") {
    // a = (3,1,1) over t=2: exactly three monomials
    SortedTuple a{{1, 1, 3}};
    std::vector<RowBits> ones{3, 3, 3};
    CHECK(monomial_sym_eval(a, ones) == 3);
    std::vector<RowBits> mixed{3, 1, 1};
    CHECK(monomial_sym_eval(a, mixed) == 1);  // only w = (3,1,1) fits
    std::vector<RowBits> low{1, 1, 1};
    CHECK(monomial_sym_eval(a, low) == 0);

    SortedTuple zero{{0, 0, 0}};
    CHECK(monomial_sym_eval(zero, low) == 1);  // empty monomial evaluates to 1

    CHECK_THROWS_AS(monomial_sym_eval(SortedTuple{{3, 1, 1}}, ones), std::invalid_argument);
}

TEST_CASE("symmetrized monomial agrees with explicit permutation enumeration") {
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 60; ++trial) {
        int t = 1 + gen() % 2;
        int k = 1 + gen() % 5;
        std::vector<RowBits> araw(k), x(k);
        for (auto& v : araw) v = static_cast<RowBits>(gen() % (1 << t));
        for (auto& v : x) v = static_cast<RowBits>(gen() % (1 << t));
        SortedTuple a = sort_tuple(araw);
        std::vector<RowBits> perm = a.rows;
        std::sort(perm.begin(), perm.end());
        std::set<std::vector<RowBits>> seen;
        long long expect = 0;
        do {
            if (seen.insert(perm).second) {
                bool ok = true;
                for (int u = 0; u < k; ++u)
                    if ((perm[u] & ~x[u]) != 0) ok = false;
                if (ok) ++expect;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(monomial_sym_eval(a, x) == BigInt(expect));
    }
}

TEST_CASE("orbit kernel reproduces per-point coefficients for every tuple") {
    for (auto [t, k] : {std::pair{1, 5}, {2, 3}}) {
        MobiusOrbitKernel kernel(t, k);
        for (std::uint64_t s = 0; s < 6; ++s) {
            SymmetricTable g = random_symmetric(s * 31 + 5, 1 << t, k);
            for (int ai = 0; ai < kernel.tuple_count(); ++ai) {
                const auto& a = kernel.tuples()[ai];
                CHECK(kernel.coefficient(ai, g) == mobius_coefficient(g, a.rows));
            }
        }
    }
}

TEST_CASE("basis coefficients reconstruct the function mod p") {
    PrimeModulus p = smallest_prime_in(4);  // p = 5
    for (auto [t, k] : {std::pair{1, 3}, {2, 2}}) {
        for (std::uint64_t s : {1ULL, 2ULL}) {
            SymmetricTable g = random_symmetric(s, 1 << t, k);
            MobiusOrbitKernel kernel(t, k);
            CoefficientVector cv = basis_coefficients(kernel, g, p);
            for (long long v : cv.values) {
                CHECK(v >= 0);
                CHECK(v < p.p);
            }
            // g(x) = sum_a c_a(g) m_a(x) mod p at every point
            std::uint64_t total = std::uint64_t(1) << (t * k);
            for (std::uint64_t xm = 0; xm < total; ++xm) {
                auto xr = rows_of_mask(xm, t, k);
                long long acc = 0;
                for (int ai = 0; ai < kernel.tuple_count(); ++ai) {
                    long long mval =
                        static_cast<long long>(monomial_sym_eval(kernel.tuples()[ai], xr) % p.p);
                    acc = (acc + cv.values[ai] * mval) % p.p;
                }
                CHECK(acc == g.at_point(xr) % p.p);
            }
        }
    }
}

TEST_SUITE_END();

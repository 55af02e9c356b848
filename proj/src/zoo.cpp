#include "noflab/zoo.hpp"

#include <bit>
#include <random>

namespace noflab {

SymmetricTable and_inner(int d, int k) {
    int t = Alphabet::of(d).t;
    int ones = (1 << t) - 1;
    return SymmetricTable::from_predicate(k, d, [&](const ColumnType& e) {
        if (ones > d - 1) return false;  // all-ones pattern unencodable: constant 0
        return e.counts[ones - 1] == k;
    });
}

SymmetricTable majority_bits_inner(int d, int k, TieRule tie) {
    int t = Alphabet::of(d).t;
    return SymmetricTable::from_predicate(k, d, [&](const ColumnType& e) {
        long long weight = 0;
        for (int s = 1; s < d; ++s)
            weight += static_cast<long long>(e.counts[s - 1]) * std::popcount(static_cast<unsigned>(s));
        long long total = static_cast<long long>(k) * t;
        return tie == TieRule::Ge ? 2 * weight >= total : 2 * weight > total;
    });
}

SymmetricTable threshold_sum_inner(int d, int k, long long s) {
    return SymmetricTable::from_predicate(k, d, [&](const ColumnType& e) {
        long long sum = 0;
        for (int v = 1; v < d; ++v) sum += static_cast<long long>(e.counts[v - 1]) * v;
        return sum >= s;
    });
}

std::vector<std::uint8_t> mod2_outer(long long n) {
    std::vector<std::uint8_t> f(n + 1);
    for (long long w = 0; w <= n; ++w) f[w] = static_cast<std::uint8_t>(w & 1);
    return f;
}

std::vector<std::uint8_t> zero_test_outer(long long n) {
    std::vector<std::uint8_t> f(n + 1, 0);
    f[0] = 1;
    return f;
}

std::vector<std::uint8_t> majority_outer(long long n, TieRule tie) {
    std::vector<std::uint8_t> f(n + 1);
    for (long long w = 0; w <= n; ++w)
        f[w] = (tie == TieRule::Ge ? 2 * w >= n : 2 * w > n) ? 1 : 0;
    return f;
}

SymmetricTable random_symmetric(std::uint64_t seed, int alphabet, int arity) {
    std::mt19937_64 gen(seed);
    TypeIndexer idx(alphabet - 1, arity);
    std::vector<std::uint8_t> vals(idx.size());
    for (auto& v : vals) v = static_cast<std::uint8_t>(gen() % 2);
    return SymmetricTable(arity, alphabet, std::move(vals));
}

std::vector<std::uint8_t> random_weight_table(std::uint64_t seed, long long n) {
    std::mt19937_64 gen(seed);
    std::vector<std::uint8_t> f(n + 1);
    for (auto& v : f) v = static_cast<std::uint8_t>(gen() % 2);
    return f;
}

InputMatrix random_matrix(std::uint64_t seed, int k, long long n, int d) {
    std::mt19937_64 gen(seed);
    InputMatrix m(k, static_cast<int>(n), d);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= n; ++j) m.set(i, j, static_cast<std::uint8_t>(gen() % d));
    return m;
}

ComposedSpec make_named(const std::string& name, int d, int k, long long n, std::uint64_t seed,
                        TieRule tie) {
    ComposedSpec spec;
    spec.d = d;
    auto uniform = [&](const SymmetricTable& g) {
        spec.inners.assign(n, g);
    };
    if (name == "gip") {
        spec.outer = mod2_outer(n);
        uniform(and_inner(d, k));
    } else if (name == "disj") {
        spec.outer = zero_test_outer(n);
        uniform(and_inner(d, k));
    } else if (name == "majmaj") {
        spec.outer = majority_outer(n, tie);
        uniform(majority_bits_inner(d, k, tie));
    } else if (name.rfind("majthr:", 0) == 0) {
        long long s = std::stoll(name.substr(7));
        spec.outer = majority_outer(n, tie);
        uniform(threshold_sum_inner(d, k, s));
    } else if (name == "random") {
        spec.outer = random_weight_table(splitmix64(seed ^ 0x0F0F0F0F0F0F0F0FULL), n);
        uniform(random_symmetric(seed, d, k));
    } else if (name == "random-mixed") {
        spec.outer = random_weight_table(splitmix64(seed ^ 0x0F0F0F0F0F0F0F0FULL), n);
        for (long long j = 0; j < n; ++j)
            spec.inners.push_back(random_symmetric(derive_seed(seed, j), d, k));
    } else {
        throw std::invalid_argument("make_named: unknown function '" + name + "'");
    }
    spec.validate(k, n);
    return spec;
}

int direct_eval(const ComposedSpec& spec, const InputMatrix& m) {
    spec.validate(m.rows(), m.cols());
    if (m.alphabet() != spec.d) throw std::invalid_argument("direct_eval: alphabet mismatch");
    long long w = 0;
    for (int j = 1; j <= m.cols(); ++j) w += spec.inners[j - 1].at_type(column_type(m, j));
    return spec.outer[w];
}

}  // namespace noflab

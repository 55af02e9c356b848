#include "noflab/symfun.hpp"

#include <algorithm>
#include <bit>

namespace noflab {

PrimeModulus smallest_prime_in(long long n) {
    if (n < 2) throw std::invalid_argument("smallest_prime_in: n must be >= 2");
    for (long long c = n + 1; c < 2 * n; ++c) {
        bool prime = c >= 2;
        for (long long f = 2; f * f <= c; ++f)
            if (c % f == 0) {
                prime = false;
                break;
            }
        if (prime) {
            if (c > std::numeric_limits<int>::max()) throw std::overflow_error("smallest_prime_in");
            return PrimeModulus{static_cast<int>(c)};
        }
    }
    throw std::logic_error("smallest_prime_in: no prime in range");  // cannot happen for n >= 2
}

bool row_value_less(RowBits a, RowBits b) {
    int pa = std::popcount(static_cast<unsigned>(a));
    int pb = std::popcount(static_cast<unsigned>(b));
    return pa != pb ? pa < pb : a < b;
}

std::string SortedTuple::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(rows[i]);
    }
    return s + ")";
}

SortedTuple sort_tuple(std::span<const RowBits> rows) {
    SortedTuple t{std::vector<RowBits>(rows.begin(), rows.end())};
    std::sort(t.rows.begin(), t.rows.end(), row_value_less);
    return t;
}

namespace {

std::vector<RowBits> ranked_values(int t) {
    std::vector<RowBits> vals(1u << t);
    for (std::size_t v = 0; v < vals.size(); ++v) vals[v] = static_cast<RowBits>(v);
    std::sort(vals.begin(), vals.end(), row_value_less);
    return vals;
}

void tuples_rec(const std::vector<RowBits>& vals, int k, std::size_t min_rank,
                std::vector<RowBits>& cur, std::vector<SortedTuple>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(SortedTuple{cur});
        return;
    }
    for (std::size_t r = min_rank; r < vals.size(); ++r) {
        cur.push_back(vals[r]);
        tuples_rec(vals, k, r, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<SortedTuple> sorted_tuples(int t, int k) {
    if (t < 1 || k < 0) throw std::invalid_argument("sorted_tuples: bad arguments");
    auto vals = ranked_values(t);
    std::vector<SortedTuple> out;
    std::vector<RowBits> cur;
    tuples_rec(vals, k, 0, cur, out);
    return out;
}

ColumnType type_of_tuple(const SortedTuple& a, int t) {
    ColumnType ty(std::vector<int>((1 << t) - 1, 0));
    for (RowBits v : a.rows) {
        if (v >= (1u << t)) throw std::invalid_argument("type_of_tuple: row value needs more bits");
        if (v > 0) ++ty.counts[v - 1];
    }
    return ty;
}

SortedTuple tuple_of_type(const ColumnType& ty, int k) {
    int lvl = ty.level();
    if (lvl > k) throw std::invalid_argument("tuple_of_type: level exceeds arity");
    std::vector<RowBits> rows(k - lvl, 0);
    for (int v = 1; v <= ty.symbols(); ++v)
        rows.insert(rows.end(), ty.counts[v - 1], static_cast<RowBits>(v));
    return sort_tuple(rows);
}

SymmetricTable::SymmetricTable(int arity, int alphabet, std::vector<std::uint8_t> values)
    : arity_(arity), alphabet_(alphabet), values_(std::move(values)), idx_(alphabet - 1, arity) {
    if (arity < 1 || alphabet < 2) throw std::invalid_argument("SymmetricTable: bad dimensions");
    if (static_cast<int>(values_.size()) != idx_.size())
        throw std::invalid_argument("SymmetricTable: need one value per orbit");
    for (auto v : values_)
        if (v > 1) throw std::invalid_argument("SymmetricTable: values must be 0/1");
}

SymmetricTable SymmetricTable::from_predicate(
    int arity, int alphabet, const std::function<bool(const ColumnType&)>& pred) {
    TypeIndexer idx(alphabet - 1, arity);
    std::vector<std::uint8_t> vals(idx.size());
    for (int i = 0; i < idx.size(); ++i) vals[i] = pred(idx.type_at(i)) ? 1 : 0;
    return SymmetricTable(arity, alphabet, std::move(vals));
}

std::uint8_t SymmetricTable::at_point(std::span<const RowBits> rows) const {
    if (static_cast<int>(rows.size()) != arity_)
        throw std::invalid_argument("SymmetricTable::at_point: arity mismatch");
    ColumnType ty(std::vector<int>(alphabet_ - 1, 0));
    for (RowBits v : rows) {
        if (v >= static_cast<unsigned>(alphabet_))
            throw std::invalid_argument("SymmetricTable::at_point: symbol outside alphabet");
        if (v > 0) ++ty.counts[v - 1];
    }
    return at_type(ty);
}

BigInt mobius_coefficient(const SymmetricTable& g, std::span<const RowBits> point) {
    if (static_cast<int>(point.size()) != g.arity())
        throw std::invalid_argument("mobius_coefficient: arity mismatch");
    if (std::popcount(static_cast<unsigned>(g.alphabet())) != 1)
        throw std::invalid_argument("mobius_coefficient: alphabet must be a power of two");
    // Inclusion-exclusion over per-row sub-patterns, accumulated per orbit.
    const TypeIndexer& orbits = g.orbits();
    std::vector<BigInt> acc(orbits.size(), 0), nxt(orbits.size());
    // bump_idx[orbit][v-1]: orbit index after adding one occurrence of v
    std::vector<std::vector<int>> bump(orbits.size());
    for (int i = 0; i < orbits.size(); ++i) {
        bump[i].assign(g.alphabet() - 1, -1);
        if (orbits.type_at(i).level() < g.arity())
            for (int v = 1; v < g.alphabet(); ++v) bump[i][v - 1] = orbits.index_of(orbits.type_at(i).bumped(v));
    }
    acc[0] = 1;
    for (RowBits xu : point) {
        if (xu >= static_cast<unsigned>(g.alphabet()))
            throw std::invalid_argument("mobius_coefficient: row value outside alphabet");
        std::fill(nxt.begin(), nxt.end(), 0);
        int pc_x = std::popcount(static_cast<unsigned>(xu));
        for (int i = 0; i < orbits.size(); ++i) {
            if (acc[i] == 0) continue;
            // iterate sub-patterns of xu, including 0
            RowBits sub = xu;
            while (true) {
                int sign = ((pc_x - std::popcount(static_cast<unsigned>(sub))) & 1) ? -1 : 1;
                int to = sub == 0 ? i : bump[i][sub - 1];
                if (sign > 0)
                    nxt[to] += acc[i];
                else
                    nxt[to] -= acc[i];
                if (sub == 0) break;
                sub = static_cast<RowBits>((sub - 1) & xu);
            }
        }
        acc.swap(nxt);
    }
    BigInt total = 0;
    for (int i = 0; i < orbits.size(); ++i)
        if (acc[i] != 0 && g.at_index(i)) total += acc[i];
    return total;
}

std::vector<long long> mobius_transform(std::vector<long long> f) {
    std::size_t sz = f.size();
    if (sz == 0 || (sz & (sz - 1)) != 0)
        throw std::invalid_argument("mobius_transform: size must be a power of two");
    for (std::size_t b = 1; b < sz; b <<= 1)
        for (std::size_t m = 0; m < sz; ++m)
            if (m & b) f[m] -= f[m ^ b];
    return f;
}

std::vector<long long> zeta_transform(std::vector<long long> f) {
    std::size_t sz = f.size();
    if (sz == 0 || (sz & (sz - 1)) != 0)
        throw std::invalid_argument("zeta_transform: size must be a power of two");
    for (std::size_t b = 1; b < sz; b <<= 1)
        for (std::size_t m = 0; m < sz; ++m)
            if (m & b) f[m] += f[m ^ b];
    return f;
}

long long multilinear_eval(std::span<const long long> coeffs, std::uint64_t x) {
    if (x >= coeffs.size()) throw std::out_of_range("multilinear_eval: point outside domain");
    long long total = 0;
    std::uint64_t sub = x;
    while (true) {
        total += coeffs[sub];
        if (sub == 0) break;
        sub = (sub - 1) & x;
    }
    return total;
}

namespace {

// Arrangement-count DP shared by the exact and the 64-bit fast path.
template <typename Int>
Int monomial_eval_dp(const SortedTuple& a, std::span<const RowBits> x) {
    std::vector<RowBits> vals;
    std::vector<int> mult;
    for (RowBits v : a.rows) {
        if (!vals.empty() && vals.back() == v)
            ++mult.back();
        else {
            vals.push_back(v);
            mult.push_back(1);
        }
    }
    int m = static_cast<int>(vals.size());
    std::vector<int> stride(m, 1);
    int states = 1;
    for (int i = 0; i < m; ++i) {
        stride[i] = states;
        states *= mult[i] + 1;
    }
    std::vector<Int> dp(states, Int(0)), nx(states);
    dp[0] = 1;
    std::vector<int> consumed(m, 0);
    for (RowBits xu : x) {
        std::fill(nx.begin(), nx.end(), Int(0));
        std::fill(consumed.begin(), consumed.end(), 0);
        for (int s = 0; s < states; ++s) {
            if (dp[s] != 0)
                for (int i = 0; i < m; ++i)
                    if (consumed[i] < mult[i] && (vals[i] & ~xu) == 0) nx[s + stride[i]] += dp[s];
            // advance mixed-radix odometer alongside s
            for (int i = 0; i < m; ++i) {
                if (++consumed[i] <= mult[i]) break;
                consumed[i] = 0;
            }
        }
        dp.swap(nx);
    }
    return dp[states - 1];
}

}  // namespace

BigInt monomial_sym_eval(const SortedTuple& a, std::span<const RowBits> x) {
    if (a.rows.size() != x.size()) throw std::invalid_argument("monomial_sym_eval: arity mismatch");
    if (!std::is_sorted(a.rows.begin(), a.rows.end(), row_value_less))
        throw std::invalid_argument("monomial_sym_eval: tuple not in sorted form");
    // All intermediates are bounded by the number of arrangements of a.
    std::vector<int> mult;
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        if (i > 0 && a.rows[i] == a.rows[i - 1])
            ++mult.back();
        else
            mult.push_back(1);
    BigInt bound = 1;
    for (std::size_t i = 2; i <= a.rows.size(); ++i) bound *= static_cast<long long>(i);
    for (int mu : mult)
        for (int i = 2; i <= mu; ++i) bound /= i;
    if (bound < (BigInt(1) << 62)) return BigInt(monomial_eval_dp<long long>(a, x));
    return monomial_eval_dp<BigInt>(a, x);
}

MobiusOrbitKernel::MobiusOrbitKernel(int t, int k)
    : t_(t), k_(k), wide_(t * k > 62), tuples_(sorted_tuples(t, k)), orbits_((1 << t) - 1, k) {
    int nv = 1 << t;
    std::vector<std::vector<int>> bump(orbits_.size());
    for (int i = 0; i < orbits_.size(); ++i) {
        bump[i].assign(nv - 1, -1);
        if (orbits_.type_at(i).level() < k)
            for (int v = 1; v < nv; ++v) bump[i][v - 1] = orbits_.index_of(orbits_.type_at(i).bumped(v));
    }
    auto build = [&](auto zero, auto& store) {
        using Int = decltype(zero);
        store.resize(tuples_.size());
        std::vector<Int> acc(orbits_.size()), nxt(orbits_.size());
        for (std::size_t ai = 0; ai < tuples_.size(); ++ai) {
            std::fill(acc.begin(), acc.end(), Int(0));
            acc[0] = 1;
            for (RowBits au : tuples_[ai].rows) {
                std::fill(nxt.begin(), nxt.end(), Int(0));
                int pc = std::popcount(static_cast<unsigned>(au));
                for (int i = 0; i < orbits_.size(); ++i) {
                    if (acc[i] == 0) continue;
                    RowBits sub = au;
                    while (true) {
                        int to = sub == 0 ? i : bump[i][sub - 1];
                        if (((pc - std::popcount(static_cast<unsigned>(sub))) & 1) == 0)
                            nxt[to] += acc[i];
                        else
                            nxt[to] -= acc[i];
                        if (sub == 0) break;
                        sub = static_cast<RowBits>((sub - 1) & au);
                    }
                }
                acc.swap(nxt);
            }
            store[ai].assign(acc.begin(), acc.end());
        }
    };
    if (wide_)
        build(BigInt(0), kern_wide_);
    else
        build(static_cast<long long>(0), kern_);
}

void MobiusOrbitKernel::check_table(const SymmetricTable& g) const {
    if (g.arity() != k_ || g.alphabet() != (1 << t_))
        throw std::invalid_argument("MobiusOrbitKernel: table shape mismatch");
}

BigInt MobiusOrbitKernel::coefficient(int tuple_idx, const SymmetricTable& g) const {
    check_table(g);
    BigInt total = 0;
    if (wide_) {
        const auto& row = kern_wide_.at(tuple_idx);
        for (int i = 0; i < orbits_.size(); ++i)
            if (g.at_index(i)) total += row[i];
    } else {
        const auto& row = kern_.at(tuple_idx);
        long long t64 = 0;
        for (int i = 0; i < orbits_.size(); ++i)
            if (g.at_index(i)) t64 += row[i];  // sum of |entries| <= 2^(t*k) <= 2^62
        total = t64;
    }
    return total;
}

long long MobiusOrbitKernel::coefficient_mod(int tuple_idx, const SymmetricTable& g, int p) const {
    if (p < 2) throw std::invalid_argument("coefficient_mod: bad modulus");
    BigInt r = coefficient(tuple_idx, g) % p;
    if (r < 0) r += p;
    return static_cast<long long>(r);
}

CoefficientVector basis_coefficients(const MobiusOrbitKernel& kernel, const SymmetricTable& g,
                                     PrimeModulus p) {
    CoefficientVector cv{kernel.t(), kernel.k(), p, {}};
    cv.values.reserve(kernel.tuple_count());
    for (int ai = 0; ai < kernel.tuple_count(); ++ai)
        cv.values.push_back(kernel.coefficient_mod(ai, g, p.p));
    return cv;
}

CoefficientVector basis_coefficients(const SymmetricTable& g, int t, int k, PrimeModulus p) {
    return basis_coefficients(MobiusOrbitKernel(t, k), g, p);
}

}  // namespace noflab

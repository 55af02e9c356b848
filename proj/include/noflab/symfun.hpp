#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "noflab/math_util.hpp"
#include "noflab/types.hpp"

namespace noflab {

// Prime used to compress Fourier coefficients; strictly between n and 2n.
struct PrimeModulus {
    int p;
};

PrimeModulus smallest_prime_in(long long n);

// A row value is a t-bit pattern read most significant bit first; its numeric
// value therefore matches lexicographic order on the bit string.
using RowBits = std::uint16_t;

// Order on row values: by popcount, then numerically.
bool row_value_less(RowBits a, RowBits b);

// k row values, nondecreasing under row_value_less.
struct SortedTuple {
    std::vector<RowBits> rows;
    bool operator==(const SortedTuple& o) const = default;
    std::string str() const;
};

SortedTuple sort_tuple(std::span<const RowBits> rows);
// All sorted tuples of k rows over t-bit values, in lexicographic order of the
// row-value ranking. Size is C(k + 2^t - 1, 2^t - 1).
std::vector<SortedTuple> sorted_tuples(int t, int k);

// Orbit <-> tuple correspondence: a tuple's orbit under row permutation is the
// multiset signature of its nonzero values.
ColumnType type_of_tuple(const SortedTuple& a, int t);
SortedTuple tuple_of_type(const ColumnType& ty, int k);

// Boolean symmetric function of `arity` inputs over {0,...,alphabet-1},
// stored as one value per orbit in canonical type order.
class SymmetricTable {
public:
    SymmetricTable(int arity, int alphabet, std::vector<std::uint8_t> values);

    static SymmetricTable from_predicate(int arity, int alphabet,
                                         const std::function<bool(const ColumnType&)>& pred);

    int arity() const { return arity_; }
    int alphabet() const { return alphabet_; }
    const std::vector<std::uint8_t>& values() const { return values_; }
    const TypeIndexer& orbits() const { return idx_; }

    std::uint8_t at_type(const ColumnType& ty) const { return values_[idx_.index_of(ty)]; }
    std::uint8_t at_index(int orbit_idx) const { return values_.at(orbit_idx); }
    std::uint8_t at_point(std::span<const RowBits> rows) const;

    bool operator==(const SymmetricTable& o) const {
        return arity_ == o.arity_ && alphabet_ == o.alphabet_ && values_ == o.values_;
    }

private:
    int arity_, alphabet_;
    std::vector<std::uint8_t> values_;
    TypeIndexer idx_;
};

// Exact multilinear (Fourier) coefficient of g at point a, by inclusion-
// exclusion over sub-patterns. g must be over alphabet 2^t for some t.
BigInt mobius_coefficient(const SymmetricTable& g, std::span<const RowBits> point);

// Dense small-domain transforms for cross-checks. Points are indexed by a mask
// whose bits [(u-1)*t, u*t) hold row u's value; only the subset lattice
// structure matters to the transforms themselves.
std::vector<long long> mobius_transform(std::vector<long long> point_values);
std::vector<long long> zeta_transform(std::vector<long long> coefficients);
// Direct evaluation sum_{a subset x} coeffs[a]; exact on long long input.
long long multilinear_eval(std::span<const long long> coeffs, std::uint64_t x_mask);

// Number of monomials of the symmetrized monomial of a that evaluate to 1 at x,
// i.e. the number of distinct rearrangements w of a with w_u a sub-pattern of
// x_u for every row u. Exact.
BigInt monomial_sym_eval(const SortedTuple& a, std::span<const RowBits> x);

// Signed orbit-count vectors: for each sorted tuple a over (t, k) rows, the
// integer vector N_a with hat(g)(a) = sum over orbits tau of N_a[tau] * g(tau)
// for every symmetric g. Built once and reused across many g.
class MobiusOrbitKernel {
public:
    MobiusOrbitKernel(int t, int k);

    int t() const { return t_; }
    int k() const { return k_; }
    const std::vector<SortedTuple>& tuples() const { return tuples_; }
    const TypeIndexer& orbit_index() const { return orbits_; }
    int tuple_count() const { return static_cast<int>(tuples_.size()); }

    BigInt coefficient(int tuple_idx, const SymmetricTable& g) const;
    long long coefficient_mod(int tuple_idx, const SymmetricTable& g, int p) const;

private:
    int t_, k_;
    bool wide_;  // entries can exceed 64 bits when t*k > 62
    std::vector<SortedTuple> tuples_;
    TypeIndexer orbits_;
    std::vector<std::vector<long long>> kern_;
    std::vector<std::vector<BigInt>> kern_wide_;
    void check_table(const SymmetricTable& g) const;
};

// Coefficients of g in the symmetrized-monomial basis, reduced mod p, indexed
// by the canonical sorted-tuple order.
struct CoefficientVector {
    int t, k;
    PrimeModulus modulus;
    std::vector<long long> values;  // in [0, p)
};

CoefficientVector basis_coefficients(const SymmetricTable& g, int t, int k, PrimeModulus p);
CoefficientVector basis_coefficients(const MobiusOrbitKernel& kernel, const SymmetricTable& g,
                                     PrimeModulus p);

}  // namespace noflab

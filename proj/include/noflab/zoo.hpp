#pragma once

#include <cstdint>
#include <string>

#include "noflab/composed.hpp"

namespace noflab {

// Majority-style thresholds compare twice the weight against the total; on an
// exact tie the Ge rule answers 1, the Gt rule answers 0.
enum class TieRule { Ge, Gt };

// Inner: 1 iff every encoded bit of the column is 1 (constant 0 when the
// all-ones pattern is not an alphabet symbol).
SymmetricTable and_inner(int d, int k);
// Inner: 1 iff the column's encoded bit weight reaches half of k*t.
SymmetricTable majority_bits_inner(int d, int k, TieRule tie = TieRule::Ge);
// Inner: 1 iff the column's symbol sum reaches s.
SymmetricTable threshold_sum_inner(int d, int k, long long s);

std::vector<std::uint8_t> mod2_outer(long long n);
std::vector<std::uint8_t> zero_test_outer(long long n);  // 1 iff the weight is 0
std::vector<std::uint8_t> majority_outer(long long n, TieRule tie = TieRule::Ge);

// Seeded generators. All draws come from std::mt19937_64 reduced by modulo;
// identical seeds give identical objects on any platform.
SymmetricTable random_symmetric(std::uint64_t seed, int alphabet, int arity);
std::vector<std::uint8_t> random_weight_table(std::uint64_t seed, long long n);
InputMatrix random_matrix(std::uint64_t seed, int k, long long n, int d);

// Registry of named composed functions:
//   gip        mod-2 outer over the all-bits-and inner
//   disj       zero-test outer over the all-bits-and inner
//   majmaj     majority outer over the bit-majority inner
//   majthr:<s> majority outer over the symbol-sum threshold inner
//   random     seeded random outer + one seeded random inner for all columns
//   random-mixed  seeded random outer + per-column random inners
ComposedSpec make_named(const std::string& name, int d, int k, long long n,
                        std::uint64_t seed = 0, TieRule tie = TieRule::Ge);

// Literal evaluation of the composed function; the oracle every protocol
// output is compared against.
int direct_eval(const ComposedSpec& spec, const InputMatrix& m);

}  // namespace noflab

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace noflab {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(long long n, long long r);

// Fits-in-int64 helper for fast paths; throws if the exact value does not fit.
long long binomial_ll(long long n, long long r);

// Bits needed for one count field when values range over 0..bound inclusive.
inline int count_width(long long bound) {
    if (bound < 0) throw std::invalid_argument("count_width: negative bound");
    return std::bit_width(static_cast<unsigned long long>(bound));
}

// ceil(log2 n) for n >= 1.
inline int ceil_log2(long long n) {
    if (n < 1) throw std::invalid_argument("ceil_log2: n must be >= 1");
    return std::bit_width(static_cast<unsigned long long>(n - 1));
}

// True iff k >= q * log2(n), i.e. 2^k >= n^q. Exact.
bool meets_power_threshold(int k, long long q, long long n);

// Smallest integer L with 2^L >= n^q, i.e. ceil(q * log2 n). n >= 1, q >= 1.
int ceil_q_log2(long long q, long long n);

// floor(2^(k/q)) computed exactly as the integer q-th root of 2^k.
long long floor_pow2_frac(int k, long long q);

// Stateless seed mixer; standard splitmix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

// Per-trial seed derivation: independent of worker-thread layout.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
}

}  // namespace noflab

#include "noflab/math_util.hpp"

namespace noflab {

BigInt binomial(long long n, long long r) {
    if (r < 0 || n < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    BigInt acc = 1;
    for (long long i = 1; i <= r; ++i) {
        acc *= (n - r + i);
        acc /= i;
    }
    return acc;
}

long long binomial_ll(long long n, long long r) {
    BigInt v = binomial(n, r);
    if (v > std::numeric_limits<long long>::max())
        throw std::overflow_error("binomial_ll: value exceeds 64 bits");
    return static_cast<long long>(v);
}

bool meets_power_threshold(int k, long long q, long long n) {
    if (n < 1 || q < 1 || k < 0) throw std::invalid_argument("meets_power_threshold: bad arguments");
    if (n == 1) return true;  // log2(1) == 0
    BigInt lhs = BigInt(1) << k;
    BigInt rhs = 1;
    BigInt base = n;
    for (long long i = 0; i < q; ++i) {
        rhs *= base;
        if (rhs > lhs) return false;
    }
    return lhs >= rhs;
}

int ceil_q_log2(long long q, long long n) {
    if (n < 1 || q < 1) throw std::invalid_argument("ceil_q_log2: bad arguments");
    if (n == 1) return 0;
    BigInt rhs = 1;
    BigInt base = n;
    for (long long i = 0; i < q; ++i) rhs *= base;
    // smallest L with 2^L >= rhs
    int lo = 0;
    BigInt pw = 1;
    while (pw < rhs) {
        pw <<= 1;
        ++lo;
    }
    return lo;
}

long long floor_pow2_frac(int k, long long q) {
    if (k < 0 || q < 1) throw std::invalid_argument("floor_pow2_frac: bad arguments");
    BigInt target = BigInt(1) << k;
    // integer q-th root by binary search
    BigInt lo = 1, hi = (BigInt(1) << (k / q + 1));
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        BigInt pw = 1;
        bool over = false;
        for (long long i = 0; i < q; ++i) {
            pw *= mid;
            if (pw > target) {
                over = true;
                break;
            }
        }
        if (over)
            hi = mid - 1;
        else
            lo = mid;
    }
    if (lo > std::numeric_limits<long long>::max()) throw std::overflow_error("floor_pow2_frac");
    return static_cast<long long>(lo);
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace noflab

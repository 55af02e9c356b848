#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "noflab/math_util.hpp"

namespace noflab {

// One player's contribution to a simultaneous round: a count vector in the
// canonical type order, plus its accounted size on the wire.
struct Message {
    int player = 0;
    std::vector<long long> counts;
    long long bits = 0;

    bool operator==(const Message& o) const = default;
};

// Everything the referee is allowed to see.
struct Transcript {
    std::string protocol;
    int k = 0;
    long long n = 0;
    int d = 0;
    std::vector<Message> messages;

    long long total_bits() const;
    bool operator==(const Transcript& o) const = default;
};

struct CostReport {
    std::string protocol;
    long long total_bits = 0;
    std::vector<long long> per_player_bits;
    BigInt analytic_bits = 0;  // closed-form figure the measurement is audited against
    BigInt coarse_bits = 0;     // same formula with the coarser ceil(log2 n) field width
};

// Fixed-width packing of a count vector: each value in 0..bound occupies
// count_width(bound) bits, most significant bit first, concatenated in order.
std::vector<std::uint8_t> encode_counts(std::span<const long long> counts, long long bound);
std::vector<long long> decode_counts(std::span<const std::uint8_t> packed, std::size_t how_many,
                                     long long bound);

// Accounted wire size of a count vector under the same packing.
inline long long message_bits(std::size_t how_many, long long bound) {
    return static_cast<long long>(how_many) * count_width(bound);
}

enum class RunMode { Strict, Reduced };

RunMode parse_run_mode(const std::string& s);
std::string to_string(RunMode m);

struct ProtocolError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace noflab

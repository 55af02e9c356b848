#include "noflab/runtime.hpp"

namespace noflab {

long long Transcript::total_bits() const {
    long long total = 0;
    for (const auto& m : messages) total += m.bits;
    return total;
}

std::vector<std::uint8_t> encode_counts(std::span<const long long> counts, long long bound) {
    int w = count_width(bound);
    std::vector<std::uint8_t> out((counts.size() * w + 7) / 8, 0);
    std::size_t pos = 0;
    for (long long c : counts) {
        if (c < 0 || c > bound) throw std::invalid_argument("encode_counts: count outside bound");
        for (int b = w - 1; b >= 0; --b, ++pos)
            if ((c >> b) & 1) out[pos / 8] |= static_cast<std::uint8_t>(1u << (7 - pos % 8));
    }
    return out;
}

std::vector<long long> decode_counts(std::span<const std::uint8_t> packed, std::size_t how_many,
                                     long long bound) {
    int w = count_width(bound);
    if (packed.size() * 8 < how_many * static_cast<std::size_t>(w))
        throw std::invalid_argument("decode_counts: packed data too short");
    std::vector<long long> out(how_many, 0);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < how_many; ++i)
        for (int b = 0; b < w; ++b, ++pos)
            out[i] = (out[i] << 1) | ((packed[pos / 8] >> (7 - pos % 8)) & 1);
    return out;
}

RunMode parse_run_mode(const std::string& s) {
    if (s == "strict") return RunMode::Strict;
    if (s == "reduced") return RunMode::Reduced;
    throw std::invalid_argument("unknown run mode: " + s);
}

std::string to_string(RunMode m) { return m == RunMode::Strict ? "strict" : "reduced"; }

}  // namespace noflab

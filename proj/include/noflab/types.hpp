#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace noflab {

// Multiset signature of a column over alphabet {0,...,D}: counts[s-1] is the
// number of occurrences of nonzero symbol s; occurrences of 0 are implicit
// (k - level() of them in a height-k column).
struct ColumnType {
    std::vector<int> counts;

    ColumnType() = default;
    explicit ColumnType(std::vector<int> c) : counts(std::move(c)) {}
    ColumnType(std::initializer_list<int> c) : counts(c) {}

    int symbols() const { return static_cast<int>(counts.size()); }
    int level() const { return std::accumulate(counts.begin(), counts.end(), 0); }

    bool operator==(const ColumnType& o) const { return counts == o.counts; }

    ColumnType bumped(int s) const {  // this + unit vector at symbol s (1-based)
        ColumnType t = *this;
        t.counts.at(s - 1) += 1;
        return t;
    }
    ColumnType dropped(int s) const {  // this - unit vector at symbol s (1-based)
        ColumnType t = *this;
        if (t.counts.at(s - 1) <= 0) throw std::logic_error("ColumnType::dropped: zero count");
        t.counts[s - 1] -= 1;
        return t;
    }
    std::string str() const;
};

struct ColumnTypeHash {
    std::size_t operator()(const ColumnType& t) const {
        std::size_t h = 0x9E3779B97F4A7C15ULL;
        for (int v : t.counts) h = h * 0x100000001B3ULL ^ static_cast<std::size_t>(v + 1);
        return h;
    }
};

// All types with `symbols` nonzero symbols and level <= max_level, in canonical
// order: ascending level, then lexicographic on (counts[0],...,counts[D-1]).
// The level-<=(L-1) types always form a prefix of the level-<=L enumeration.
class TypeIndexer {
public:
    TypeIndexer(int symbols, int max_level);

    int symbols() const { return symbols_; }
    int max_level() const { return max_level_; }
    int size() const { return static_cast<int>(types_.size()); }
    const std::vector<ColumnType>& types() const { return types_; }
    const ColumnType& type_at(int idx) const { return types_.at(idx); }

    int index_of(const ColumnType& t) const;
    bool contains(const ColumnType& t) const { return lookup_.count(t) != 0; }

    // Number of types with level <= lvl (a prefix length of the enumeration).
    int prefix_size(int lvl) const;

private:
    int symbols_;
    int max_level_;
    std::vector<ColumnType> types_;
    std::vector<int> prefix_;  // prefix_[L] = #types with level <= L
    std::unordered_map<ColumnType, int, ColumnTypeHash> lookup_;
};

// Canonical enumeration used everywhere a count vector is laid out.
// k only bounds max_level; the result does not otherwise depend on it.
std::vector<ColumnType> enumerate_types(int k, int symbols, int max_level);

// Process-wide indexer cache; building one for many symbols and a high level
// is costly and the protocol paths ask for the same shapes over and over.
// Thread-safe; the returned reference stays valid for the process lifetime.
const TypeIndexer& shared_indexer(int symbols, int max_level);

}  // namespace noflab

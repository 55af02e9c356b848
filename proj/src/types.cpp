#include "noflab/types.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "noflab/math_util.hpp"

namespace noflab {

std::string ColumnType::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(counts[i]);
    }
    s += ")";
    return s;
}

namespace {

void compositions_rec(int symbols, int pos, int remaining, std::vector<int>& cur,
                      std::vector<ColumnType>& out) {
    if (pos == symbols - 1) {
        cur[pos] = remaining;
        out.emplace_back(cur);
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        cur[pos] = v;
        compositions_rec(symbols, pos + 1, remaining - v, cur, out);
    }
}

}  // namespace

TypeIndexer::TypeIndexer(int symbols, int max_level) : symbols_(symbols), max_level_(max_level) {
    if (symbols < 1) throw std::invalid_argument("TypeIndexer: need at least one nonzero symbol");
    if (max_level < 0) throw std::invalid_argument("TypeIndexer: negative max_level");
    prefix_.resize(max_level + 1);
    std::vector<int> cur(symbols, 0);
    for (int lvl = 0; lvl <= max_level; ++lvl) {
        compositions_rec(symbols, 0, lvl, cur, types_);
        prefix_[lvl] = static_cast<int>(types_.size());
    }
    lookup_.reserve(types_.size() * 2);
    for (int i = 0; i < static_cast<int>(types_.size()); ++i) lookup_.emplace(types_[i], i);
}

int TypeIndexer::index_of(const ColumnType& t) const {
    auto it = lookup_.find(t);
    if (it == lookup_.end())
        throw std::out_of_range("TypeIndexer::index_of: type " + t.str() + " not enumerated");
    return it->second;
}

int TypeIndexer::prefix_size(int lvl) const {
    if (lvl < 0) return 0;
    if (lvl > max_level_) throw std::out_of_range("TypeIndexer::prefix_size: level beyond table");
    return prefix_[lvl];
}

std::vector<ColumnType> enumerate_types(int k, int symbols, int max_level) {
    if (max_level < 0 || max_level > k)
        throw std::invalid_argument("enumerate_types: need 0 <= max_level <= k");
    return TypeIndexer(symbols, max_level).types();
}

const TypeIndexer& shared_indexer(int symbols, int max_level) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<TypeIndexer>> cache;
    std::lock_guard lk(mu);
    auto& slot = cache[{symbols, max_level}];
    if (!slot) slot = std::make_unique<TypeIndexer>(symbols, max_level);
    return *slot;
}

}  // namespace noflab

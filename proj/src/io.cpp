#include "noflab/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace noflab {

void write_matrix_text(std::ostream& os, const InputMatrix& m) {
    os << m.rows() << " " << m.cols() << " " << m.alphabet() << "\n";
    for (int i = 1; i <= m.rows(); ++i) {
        for (int j = 1; j <= m.cols(); ++j) os << (j > 1 ? " " : "") << int(m.at(i, j));
        os << "\n";
    }
}

InputMatrix read_matrix_text(std::istream& is) {
    int k, n, d;
    if (!(is >> k >> n >> d)) throw std::runtime_error("matrix text: bad header");
    InputMatrix m(k, n, d);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= n; ++j) {
            int v;
            if (!(is >> v)) throw std::runtime_error("matrix text: truncated entries");
            m.set(i, j, static_cast<std::uint8_t>(v));
        }
    return m;
}

std::string matrix_to_json(const InputMatrix& m) {
    nlohmann::json j;
    j["k"] = m.rows();
    j["n"] = m.cols();
    j["d"] = m.alphabet();
    auto rows = nlohmann::json::array();
    for (int i = 1; i <= m.rows(); ++i) {
        auto row = nlohmann::json::array();
        for (int c = 1; c <= m.cols(); ++c) row.push_back(int(m.at(i, c)));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j.dump();
}

InputMatrix matrix_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    InputMatrix m(j.at("k").get<int>(), j.at("n").get<int>(), j.at("d").get<int>());
    const auto& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != m.rows())
        throw std::runtime_error("matrix json: row count mismatch");
    for (int i = 1; i <= m.rows(); ++i) {
        const auto& row = rows.at(i - 1);
        if (static_cast<int>(row.size()) != m.cols())
            throw std::runtime_error("matrix json: column count mismatch");
        for (int c = 1; c <= m.cols(); ++c)
            m.set(i, c, static_cast<std::uint8_t>(row.at(c - 1).get<int>()));
    }
    return m;
}

std::string transcript_to_json(const Transcript& t) {
    nlohmann::json j;
    j["protocol"] = t.protocol;
    j["k"] = t.k;
    j["n"] = t.n;
    j["d"] = t.d;
    auto msgs = nlohmann::json::array();
    for (const auto& m : t.messages)
        msgs.push_back({{"player", m.player}, {"counts", m.counts}, {"bits", m.bits}});
    j["messages"] = std::move(msgs);
    return j.dump();
}

Transcript transcript_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Transcript t;
    t.protocol = j.at("protocol").get<std::string>();
    t.k = j.at("k").get<int>();
    t.n = j.at("n").get<long long>();
    t.d = j.at("d").get<int>();
    for (const auto& m : j.at("messages"))
        t.messages.push_back(Message{m.at("player").get<int>(),
                                     m.at("counts").get<std::vector<long long>>(),
                                     m.at("bits").get<long long>()});
    return t;
}

void dump_coefficients(std::ostream& os, const std::vector<SortedTuple>& tuples,
                       const CoefficientVector& coeffs) {
    if (tuples.size() != coeffs.values.size())
        throw std::invalid_argument("dump_coefficients: length mismatch");
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        for (std::size_t r = 0; r < tuples[i].rows.size(); ++r)
            os << (r ? "," : "") << tuples[i].rows[r];
        os << " " << coeffs.values[i] << "\n";
    }
}

void dump_sparse_vector(std::ostream& os, const TypeIndexer& idx,
                        std::span<const long long> values) {
    if (static_cast<int>(values.size()) != idx.size())
        throw std::invalid_argument("dump_sparse_vector: length mismatch");
    for (int i = 0; i < idx.size(); ++i) {
        if (values[i] == 0) continue;
        const auto& e = idx.type_at(i);
        for (int s = 0; s < e.symbols(); ++s) os << (s ? " " : "") << e.counts[s];
        os << " : " << values[i] << "\n";
    }
}

InputMatrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
        std::ostringstream ss;
        ss << in.rdbuf();
        return matrix_from_json(ss.str());
    }
    return read_matrix_text(in);
}

}  // namespace noflab

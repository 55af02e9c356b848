#include "noflab/matrix.hpp"

#include <bit>

namespace noflab {

Alphabet Alphabet::of(int d) {
    if (d < 2) throw std::invalid_argument("Alphabet: d must be >= 2");
    int t = std::bit_width(static_cast<unsigned>(d - 1));
    return Alphabet{d, t};
}

InputMatrix::InputMatrix(int k, int n, int d) : k_(k), n_(n), d_(d) {
    if (k < 1 || n < 0 || d < 2) throw std::invalid_argument("InputMatrix: bad dimensions");
    cells_.assign(static_cast<std::size_t>(k) * n, 0);
}

InputMatrix::InputMatrix(int k, int n, int d, std::vector<std::uint8_t> row_major)
    : k_(k), n_(n), d_(d), cells_(std::move(row_major)) {
    if (k < 1 || n < 0 || d < 2) throw std::invalid_argument("InputMatrix: bad dimensions");
    if (cells_.size() != static_cast<std::size_t>(k) * n)
        throw std::invalid_argument("InputMatrix: cell count mismatch");
    for (auto v : cells_)
        if (v >= d) throw std::invalid_argument("InputMatrix: entry outside alphabet");
}

void InputMatrix::set(int i, int j, std::uint8_t v) {
    if (v >= d_) throw std::invalid_argument("InputMatrix::set: entry outside alphabet");
    cells_[idx(i, j)] = v;
}

std::vector<std::uint8_t> InputMatrix::column(int j) const {
    std::vector<std::uint8_t> col(k_);
    for (int i = 1; i <= k_; ++i) col[i - 1] = at(i, j);
    return col;
}

PlayerView::PlayerView(const InputMatrix& m, int hidden_row) : m_(&m), hidden_(hidden_row) {
    if (hidden_row < 1 || hidden_row > m.rows())
        throw std::invalid_argument("PlayerView: hidden row out of range");
}

std::uint8_t PlayerView::at(int i, int j) const {
    if (i == hidden_) throw std::logic_error("PlayerView: read of hidden row");
    return m_->at(i, j);
}

std::vector<std::uint8_t> PlayerView::visible_column(int j) const {
    std::vector<std::uint8_t> col;
    col.reserve(m_->rows() - 1);
    for (int i = 1; i <= m_->rows(); ++i)
        if (i != hidden_) col.push_back(m_->at(i, j));
    return col;
}

BlockMatrix::BlockMatrix(int k, int t, int n) : k_(k), t_(t), n_(n) {
    if (k < 1 || t < 1 || n < 0) throw std::invalid_argument("BlockMatrix: bad dimensions");
    bits_.assign(static_cast<std::size_t>(k) * t * n, 0);
}

void BlockMatrix::set_bit(int i, int c, std::uint8_t v) {
    if (v > 1) throw std::invalid_argument("BlockMatrix::set_bit: not a bit");
    bits_[bidx(i, c)] = v;
}

int BlockMatrix::block_value(int i, int j) const {
    int v = 0;
    for (int b = 1; b <= t_; ++b) v = (v << 1) | bit(i, (j - 1) * t_ + b);
    return v;
}

void BlockMatrix::set_block_value(int i, int j, int v) {
    if (v < 0 || v >= (1 << t_)) throw std::invalid_argument("BlockMatrix: value needs more bits");
    for (int b = t_; b >= 1; --b) {
        set_bit(i, (j - 1) * t_ + b, v & 1);
        v >>= 1;
    }
}

BlockMatrix boolean_encode(const InputMatrix& m, int t) {
    if (t < Alphabet::of(m.alphabet()).t)
        throw std::invalid_argument("boolean_encode: t too small for alphabet");
    BlockMatrix b(m.rows(), t, m.cols());
    for (int i = 1; i <= m.rows(); ++i)
        for (int j = 1; j <= m.cols(); ++j) b.set_block_value(i, j, m.at(i, j));
    return b;
}

InputMatrix boolean_decode(const BlockMatrix& b, int d) {
    InputMatrix m(b.rows(), b.blocks(), d);
    for (int i = 1; i <= b.rows(); ++i)
        for (int j = 1; j <= b.blocks(); ++j) {
            int v = b.block_value(i, j);
            if (v >= d) throw std::invalid_argument("boolean_decode: block value outside alphabet");
            m.set(i, j, static_cast<std::uint8_t>(v));
        }
    return m;
}

RowSplit restrict_rows(const BlockMatrix& b, int prefix_rows) {
    if (prefix_rows < 1 || prefix_rows > b.rows())
        throw std::invalid_argument("restrict_rows: prefix size out of range");
    RowSplit s{BlockMatrix(prefix_rows, b.bits_per_entry(), b.blocks()), {}};
    for (int i = 1; i <= prefix_rows; ++i)
        for (int c = 1; c <= b.bit_cols(); ++c) s.prefix.set_bit(i, c, b.bit(i, c));
    s.suffixes.resize(b.blocks());
    for (int j = 1; j <= b.blocks(); ++j)
        for (int i = prefix_rows + 1; i <= b.rows(); ++i)
            s.suffixes[j - 1].push_back(static_cast<std::uint8_t>(b.block_value(i, j)));
    return s;
}

BlockMatrix reassemble(const RowSplit& s) {
    int extra = s.suffixes.empty() ? 0 : static_cast<int>(s.suffixes[0].size());
    for (const auto& suf : s.suffixes)
        if (static_cast<int>(suf.size()) != extra)
            throw std::invalid_argument("reassemble: ragged suffixes");
    BlockMatrix b(s.prefix.rows() + extra, s.prefix.bits_per_entry(), s.prefix.blocks());
    for (int i = 1; i <= s.prefix.rows(); ++i)
        for (int c = 1; c <= s.prefix.bit_cols(); ++c) b.set_bit(i, c, s.prefix.bit(i, c));
    for (int j = 1; j <= b.blocks(); ++j)
        for (int r = 0; r < extra; ++r)
            b.set_block_value(s.prefix.rows() + 1 + r, j, s.suffixes[j - 1][r]);
    return b;
}

InputMatrix block_values(const BlockMatrix& b) {
    InputMatrix m(b.rows(), b.blocks(), 1 << b.bits_per_entry());
    for (int i = 1; i <= b.rows(); ++i)
        for (int j = 1; j <= b.blocks(); ++j)
            m.set(i, j, static_cast<std::uint8_t>(b.block_value(i, j)));
    return m;
}

ColumnType column_type(std::span<const std::uint8_t> column, int d) {
    if (d < 2) throw std::invalid_argument("column_type: d must be >= 2");
    ColumnType t(std::vector<int>(d - 1, 0));
    for (auto v : column) {
        if (v >= d) throw std::invalid_argument("column_type: symbol outside alphabet");
        if (v > 0) ++t.counts[v - 1];
    }
    return t;
}

ColumnType column_type(const InputMatrix& m, int j) {
    auto col = m.column(j);
    return column_type(col, m.alphabet());
}

ColumnType view_column_type(const PlayerView& v, int j) {
    auto col = v.visible_column(j);
    return column_type(col, v.alphabet());
}

}  // namespace noflab

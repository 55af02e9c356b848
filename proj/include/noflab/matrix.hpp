#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "noflab/types.hpp"

namespace noflab {

// Input alphabet Z_d together with the bit width of its boolean encoding.
struct Alphabet {
    int d;
    int t;  // ceil(log2 d)

    static Alphabet of(int d);
};

// k x n matrix with entries in {0,...,d-1}. Rows and columns are 1-indexed in
// every accessor; row i is the row player i cannot see.
class InputMatrix {
public:
    InputMatrix(int k, int n, int d);
    InputMatrix(int k, int n, int d, std::vector<std::uint8_t> row_major);

    int rows() const { return k_; }
    int cols() const { return n_; }
    int alphabet() const { return d_; }

    std::uint8_t at(int i, int j) const { return cells_[idx(i, j)]; }
    void set(int i, int j, std::uint8_t v);

    std::vector<std::uint8_t> column(int j) const;
    const std::vector<std::uint8_t>& raw() const { return cells_; }

    bool operator==(const InputMatrix& o) const = default;

private:
    std::size_t idx(int i, int j) const {
        if (i < 1 || i > k_ || j < 1 || j > n_)
            throw std::out_of_range("InputMatrix: index out of range");
        return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
    }
    int k_, n_, d_;
    std::vector<std::uint8_t> cells_;
};

// What player i is allowed to read: every row except row i. Constructed from
// the full matrix for simulation convenience; all protocol code that models a
// player must go through this class so the hidden row stays unreachable.
class PlayerView {
public:
    PlayerView(const InputMatrix& m, int hidden_row);

    int rows() const { return m_->rows(); }
    int cols() const { return m_->cols(); }
    int alphabet() const { return m_->alphabet(); }
    int hidden_row() const { return hidden_; }

    std::uint8_t at(int i, int j) const;
    // Visible entries of column j, in increasing row order, skipping the hidden row.
    std::vector<std::uint8_t> visible_column(int j) const;

private:
    const InputMatrix* m_;
    int hidden_;
};

// Boolean encoding of an InputMatrix: k x (t*n) bit matrix, block j occupying
// bit columns (j-1)*t+1 .. j*t, each entry written most significant bit first.
class BlockMatrix {
public:
    BlockMatrix(int k, int t, int n);

    int rows() const { return k_; }
    int blocks() const { return n_; }
    int bits_per_entry() const { return t_; }
    int bit_cols() const { return t_ * n_; }

    std::uint8_t bit(int i, int c) const { return bits_[bidx(i, c)]; }
    void set_bit(int i, int c, std::uint8_t v);

    // Integer value of the t bits of block j in row i (MSB first).
    int block_value(int i, int j) const;
    void set_block_value(int i, int j, int v);

    bool operator==(const BlockMatrix& o) const = default;

private:
    std::size_t bidx(int i, int c) const {
        if (i < 1 || i > k_ || c < 1 || c > t_ * n_)
            throw std::out_of_range("BlockMatrix: index out of range");
        return static_cast<std::size_t>(i - 1) * (t_ * n_) + (c - 1);
    }
    int k_, t_, n_;
    std::vector<std::uint8_t> bits_;
};

BlockMatrix boolean_encode(const InputMatrix& m, int t);
// Inverse of boolean_encode; every block value must be < d.
InputMatrix boolean_decode(const BlockMatrix& b, int d);

// Row split of a block matrix: the first `prefix_rows` rows as a BlockMatrix,
// plus, for each block j, the values of its remaining rows (top to bottom).
struct RowSplit {
    BlockMatrix prefix;
    std::vector<std::vector<std::uint8_t>> suffixes;  // [block][row - prefix_rows - 1]
};

RowSplit restrict_rows(const BlockMatrix& b, int prefix_rows);
BlockMatrix reassemble(const RowSplit& s);

// View of a block matrix as a k x n matrix over Z_{2^t} (entry = block value).
InputMatrix block_values(const BlockMatrix& b);

// Multiset signature of a column: counts of symbols 1..d-1.
ColumnType column_type(std::span<const std::uint8_t> column, int d);
ColumnType column_type(const InputMatrix& m, int j);
// Type of column j as seen by the view's player (k-1 visible entries).
ColumnType view_column_type(const PlayerView& v, int j);

}  // namespace noflab

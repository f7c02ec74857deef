#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matchparity/graph.hpp"

namespace mpar {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool b = true) {
        if (b) w_[i >> 6] |= (std::uint64_t{1} << (i & 63));
        else w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void flip(std::size_t i) { w_[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }
    BitVector& operator^=(const BitVector& o);
    bool any() const;
    std::size_t count() const;
    bool dot(const BitVector& o) const;
    std::vector<std::size_t> ones() const;
    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }
    bool operator==(const BitVector&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Dense matrix over Z/2Z with bit-packed rows.
class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

    static GF2Matrix identity(std::size_t n);
    static GF2Matrix from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool b = true) { rows_[r].set(c, b); }
    void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }
    const BitVector& row(std::size_t r) const { return rows_[r]; }
    BitVector& row(std::size_t r) { return rows_[r]; }

    BitVector apply(const BitVector& x) const;
    GF2Matrix transposed() const;
    bool operator==(const GF2Matrix&) const = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

struct Echelon {
    GF2Matrix reduced;
    std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form; pivots chosen leftmost column first, topmost row.
Echelon rref(GF2Matrix m);
std::size_t rank(const GF2Matrix& m);
std::size_t nullity(const GF2Matrix& m);
std::vector<BitVector> nullspace(const GF2Matrix& m);
int det_mod2(const GF2Matrix& m);
std::optional<BitVector> solve(const GF2Matrix& m, const BitVector& b);

GF2Matrix adjacency_mod2(const Graph& g);
// Rows are white vertices, columns black vertices, each in id order.
GF2Matrix bipartite_adjacency_mod2(const Graph& g);

std::string to_string(const GF2Matrix& m);

}  // namespace mpar

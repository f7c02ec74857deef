#include "matchparity/gf2.hpp"

#include <bit>

namespace mpar {

BitVector& BitVector::operator^=(const BitVector& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

bool BitVector::any() const {
    for (auto w : w_)
        if (w) return true;
    return false;
}

std::size_t BitVector::count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool BitVector::dot(const BitVector& o) const {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1;
}

std::vector<std::size_t> BitVector::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < w_.size(); ++k) {
        std::uint64_t w = w_[k];
        while (w) {
            out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

GF2Matrix GF2Matrix::identity(std::size_t n) {
    GF2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

GF2Matrix GF2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    GF2Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw PreconditionError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j] & 1);
    }
    return m;
}

BitVector GF2Matrix::apply(const BitVector& x) const {
    if (x.size() != cols_) throw PreconditionError("dimension mismatch in GF(2) product");
    BitVector out(rows());
    for (std::size_t i = 0; i < rows(); ++i) out.set(i, rows_[i].dot(x));
    return out;
}

GF2Matrix GF2Matrix::transposed() const {
    GF2Matrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j : rows_[i].ones()) t.set(j, i);
    return t;
}

Echelon rref(GF2Matrix m) {
    Echelon e;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && !m.get(p, c)) ++p;
        if (p == m.rows()) continue;
        std::swap(m.row(p), m.row(r));
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m.get(i, c)) m.row(i) ^= m.row(r);
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.reduced = std::move(m);
    return e;
}

std::size_t rank(const GF2Matrix& m) { return rref(m).pivot_cols.size(); }

std::size_t nullity(const GF2Matrix& m) { return m.cols() - rank(m); }

std::vector<BitVector> nullspace(const GF2Matrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVector v(m.cols());
        v.set(f);
        for (std::size_t k = 0; k < e.pivot_cols.size(); ++k)
            if (e.reduced.get(k, f)) v.set(e.pivot_cols[k]);
        basis.push_back(std::move(v));
    }
    return basis;
}

int det_mod2(const GF2Matrix& m) {
    if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
    return rank(m) == m.rows() ? 1 : 0;
}

std::optional<BitVector> solve(const GF2Matrix& m, const BitVector& b) {
    if (b.size() != m.rows()) throw PreconditionError("dimension mismatch in GF(2) solve");
    GF2Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j : m.row(i).ones()) aug.set(i, j);
        aug.set(i, m.cols(), b.get(i));
    }
    Echelon e = rref(std::move(aug));
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
    BitVector x(m.cols());
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k)
        x.set(e.pivot_cols[k], e.reduced.get(k, m.cols()));
    return x;
}

GF2Matrix adjacency_mod2(const Graph& g) {
    auto idx = g.index_map();
    GF2Matrix a(g.vertex_count(), g.vertex_count());
    for (const auto& e : g.edges()) {
        if (e.mult % 2 == 0) continue;
        auto i = static_cast<std::size_t>(idx[e.u]);
        auto j = static_cast<std::size_t>(idx[e.v]);
        a.set(i, j);
        a.set(j, i);
    }
    return a;
}

GF2Matrix bipartite_adjacency_mod2(const Graph& g) {
    check_coloring(g);
    auto whites = g.vertices_of(Color::White);
    auto blacks = g.vertices_of(Color::Black);
    std::map<int, std::size_t> col;
    for (std::size_t j = 0; j < blacks.size(); ++j) col[blacks[j]] = j;
    GF2Matrix b(whites.size(), blacks.size());
    for (std::size_t i = 0; i < whites.size(); ++i)
        for (auto [v, m] : g.neighbors(whites[i]))
            if (m % 2) b.set(i, col.at(v));
    return b;
}

std::string to_string(const GF2Matrix& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) s += m.get(i, j) ? '1' : '0';
        s += '\n';
    }
    return s;
}

}  // namespace mpar

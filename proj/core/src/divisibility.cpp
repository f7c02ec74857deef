#include "matchparity/divisibility.hpp"

#include <cstdio>

#include "matchparity/channels.hpp"
#include "matchparity/gf2.hpp"

namespace mpar {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : r_(rows.size()), c_(rows.size() ? rows.begin()->size() : 0) {
    a_.reserve(r_ * c_);
    for (const auto& row : rows) {
        if (row.size() != c_) throw PreconditionError("ragged matrix rows");
        for (long v : row) a_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (c_ != o.r_) throw PreconditionError("dimension mismatch in matrix product");
    IntMatrix out(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            const BigInt& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.c_; ++j) out(i, j) += x * o(k, j);
        }
    return out;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
    return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

std::vector<BigInt> SmithDecomposition::diagonal() const {
    std::vector<BigInt> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
}

namespace {

class SmithRunner {
public:
    explicit SmithRunner(const IntMatrix& a)
        : D(a), S(IntMatrix::identity(a.rows())), T(IntMatrix::identity(a.cols())) {}

    // row_i -= q * row_j
    void row_sub(std::size_t i, std::size_t j, const BigInt& q) {
        for (std::size_t c = 0; c < D.cols(); ++c) D(i, c) -= q * D(j, c);
        for (std::size_t r = 0; r < S.rows(); ++r) S(r, j) += q * S(r, i);
    }
    // col_j -= q * col_i
    void col_sub(std::size_t j, std::size_t i, const BigInt& q) {
        for (std::size_t r = 0; r < D.rows(); ++r) D(r, j) -= q * D(r, i);
        for (std::size_t c = 0; c < T.cols(); ++c) T(i, c) += q * T(j, c);
    }
    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < D.cols(); ++c) std::swap(D(i, c), D(j, c));
        for (std::size_t r = 0; r < S.rows(); ++r) std::swap(S(r, i), S(r, j));
    }
    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < D.rows(); ++r) std::swap(D(r, i), D(r, j));
        for (std::size_t c = 0; c < T.cols(); ++c) std::swap(T(i, c), T(j, c));
    }
    void row_negate(std::size_t i) {
        for (std::size_t c = 0; c < D.cols(); ++c) D(i, c) = -D(i, c);
        for (std::size_t r = 0; r < S.rows(); ++r) S(r, i) = -S(r, i);
    }

    bool place_min_pivot(std::size_t t) {
        std::size_t bi = 0, bj = 0;
        bool found = false;
        BigInt best;
        for (std::size_t i = t; i < D.rows(); ++i)
            for (std::size_t j = t; j < D.cols(); ++j) {
                if (D(i, j) == 0) continue;
                BigInt v = abs(D(i, j));
                if (!found || v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                    found = true;
                }
            }
        if (!found) return false;
        row_swap(t, bi);
        col_swap(t, bj);
        return true;
    }

    void run() {
        const std::size_t k = std::min(D.rows(), D.cols());
        for (std::size_t t = 0; t < k; ++t) {
            if (!place_min_pivot(t)) break;
            for (;;) {
                bool clean = true;
                BigInt q;
                for (std::size_t i = t + 1; i < D.rows(); ++i) {
                    if (D(i, t) == 0) continue;
                    mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
                    row_sub(i, t, q);
                    if (D(i, t) != 0) clean = false;
                }
                for (std::size_t j = t + 1; j < D.cols(); ++j) {
                    if (D(t, j) == 0) continue;
                    mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
                    col_sub(j, t, q);
                    if (D(t, j) != 0) clean = false;
                }
                if (!clean) {
                    place_min_pivot(t);
                    continue;
                }
                // Divisibility repair: pull an offending row into the pivot row.
                bool repaired = false;
                for (std::size_t i = t + 1; i < D.rows() && !repaired; ++i)
                    for (std::size_t j = t + 1; j < D.cols(); ++j)
                        if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
                            row_sub(t, i, -1);
                            repaired = true;
                            break;
                        }
                if (!repaired) break;
            }
            if (D(t, t) < 0) row_negate(t);
        }
    }

    IntMatrix D, S, T;
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    SmithRunner r(a);
    r.run();
    return {std::move(r.S), std::move(r.D), std::move(r.T)};
}

bool is_smith_form(const IntMatrix& d) {
    if (!d.is_diagonal()) return false;
    const std::size_t k = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < k; ++i) {
        if (d(i, i) < 0) return false;
        if (i + 1 < k) {
            if (d(i, i) == 0 && d(i + 1, i + 1) != 0) return false;
            if (d(i, i) != 0 && !mpz_divisible_p(d(i + 1, i + 1).get_mpz_t(), d(i, i).get_mpz_t()))
                return false;
        }
    }
    return true;
}

BigInt determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw PreconditionError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::size_t two_nullity(const IntMatrix& a) {
    GF2Matrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (mpz_odd_p(a(i, j).get_mpz_t())) m.set(i, j);
    return nullity(m);
}

std::size_t two_nullity_snf(const IntMatrix& a) {
    auto d = smith_normal_form(a).diagonal();
    std::size_t odd = 0;
    for (const auto& x : d)
        if (mpz_odd_p(x.get_mpz_t())) ++odd;
    return a.cols() - odd;
}

namespace {

bool every_bounded_face_is_a_cell(const GridRegion& r) {
    Graph g = r.graph();
    long v = static_cast<long>(r.size());
    long e = static_cast<long>(g.edge_count());
    long f = static_cast<long>(r.cells().size());
    return v - e + f == static_cast<long>(components(g).size());
}

}  // namespace

IntMatrix kasteleyn_sign_grid(const GridRegion& r) {
    std::vector<int> whites, blacks;
    std::map<int, std::size_t> row, col;
    for (std::size_t i = 0; i < r.size(); ++i) {
        int id = static_cast<int>(i);
        if (GridRegion::color(r.point(id)) == Color::White) {
            row[id] = whites.size();
            whites.push_back(id);
        } else {
            col[id] = blacks.size();
            blacks.push_back(id);
        }
    }
    if (whites.size() != blacks.size())
        throw PreconditionError("unbalanced coloring (" + std::to_string(blacks.size()) +
                                " black, " + std::to_string(whites.size()) +
                                " white): no square signed matrix");
    IntMatrix h(whites.size(), blacks.size());
    for (auto [a, b] : r.edges()) {
        Point p = r.point(a), q = r.point(b);
        int w = GridRegion::color(p) == Color::White ? a : b;
        int k = w == a ? b : a;
        int s = (p.y == q.y) ? 1 : ((p.x % 2 == 0) ? 1 : -1);
        h(row.at(w), col.at(k)) = s;
    }
    for (Point c : r.cells()) {
        int neg = 0;
        for (auto [p, q] : {std::pair{c, Point{c.x + 1, c.y}},
                            std::pair{Point{c.x, c.y + 1}, Point{c.x + 1, c.y + 1}},
                            std::pair{c, Point{c.x, c.y + 1}},
                            std::pair{Point{c.x + 1, c.y}, Point{c.x + 1, c.y + 1}}}) {
            int a = r.index(p), b = r.index(q);
            int w = GridRegion::color(p) == Color::White ? a : b;
            int k = w == a ? b : a;
            if (h(row.at(w), col.at(k)) < 0) ++neg;
        }
        if (neg % 2 == 0)
            throw std::logic_error("signing violates the odd-face condition at cell " +
                                   to_string(c));
    }
    return h;
}

BigInt count_matchings_kasteleyn(const GridRegion& r) {
    if (!every_bounded_face_is_a_cell(r))
        throw UnsupportedInput("region has a bounded face that is not a unit square; the "
                               "lattice signing is not certified there");
    std::size_t blacks = 0;
    for (Point p : r.points()) blacks += GridRegion::color(p) == Color::Black;
    if (2 * blacks != r.size()) return BigInt(0);
    return abs(determinant(kasteleyn_sign_grid(r)));
}

const char* status_name(GuaranteeStatus s) {
    switch (s) {
        case GuaranteeStatus::Proven: return "proven";
        case GuaranteeStatus::SigningAssumed: return "signing-assumed";
        case GuaranteeStatus::Verified: return "verified";
        case GuaranteeStatus::Invalid: return "INVALID";
        case GuaranteeStatus::Vacuous: return "vacuous";
    }
    return "proven";
}

namespace {

std::string hex_id(const char* prefix, std::uint64_t h) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(prefix) + buf;
}

void attach_count(DivisibilityReport& rep, const BigInt& m, std::string method) {
    rep.exact_count = m;
    rep.exact_valuation = two_adic_valuation(m);
    rep.count_method = std::move(method);
    if (m == 0) {
        rep.guaranteed_exponent.reset();
        rep.status = GuaranteeStatus::Vacuous;
    }
}

void judge(DivisibilityReport& rep) {
    if (!rep.exact_count || *rep.exact_count == 0 || !rep.guaranteed_exponent) return;
    std::size_t have = *rep.exact_valuation * (rep.target == "m_G^2" ? 2 : 1);
    bool ok = have >= *rep.guaranteed_exponent;
    if (rep.status == GuaranteeStatus::SigningAssumed)
        rep.status = ok ? GuaranteeStatus::Verified : GuaranteeStatus::Invalid;
    else if (!ok)
        throw std::logic_error("proven divisibility guarantee contradicted by exact count");
}

}  // namespace

DivisibilityReport divisibility_report(const GridRegion& r, const ReportOptions& opt) {
    Graph g = r.graph();
    DivisibilityReport rep;
    rep.graph_id = hex_id("grid:", g.fingerprint());
    rep.dim_C = channel_dimension(g);
    rep.dim_C_B = black_channel_dimension(g);
    rep.dim_C_W = white_channel_dimension(g);
    rep.guaranteed_exponent = rep.dim_C_B;
    rep.target = "m_G";
    bool lattice_ok = every_bounded_face_is_a_cell(r);
    rep.status = lattice_ok ? GuaranteeStatus::Proven : GuaranteeStatus::SigningAssumed;
    if (!lattice_ok)
        rep.caveat = "region has a non-square bounded face; lattice signing not certified";
    std::size_t blacks = g.vertices_of(Color::Black).size();
    if (2 * blacks != g.vertex_count()) {
        attach_count(rep, 0, "color-balance");
    } else if (lattice_ok) {
        attach_count(rep, count_matchings_kasteleyn(r), "kasteleyn");
    } else if (g.vertex_count() <= opt.count_cap.value_or(vertex_cap())) {
        attach_count(rep, count_matchings(g, opt.count_cap.value_or(vertex_cap())), "oracle");
    }
    judge(rep);
    return rep;
}

DivisibilityReport divisibility_report(const Graph& g, const ReportOptions& opt) {
    DivisibilityReport rep;
    rep.graph_id = hex_id("graph:", g.fingerprint());
    rep.dim_C = channel_dimension(g);
    bool colored = g.colored();
    if (colored) check_coloring(g);
    if (colored) {
        rep.dim_C_B = black_channel_dimension(g);
        rep.dim_C_W = white_channel_dimension(g);
        rep.guaranteed_exponent = rep.dim_C_B;
        rep.target = "m_G";
    } else {
        rep.guaranteed_exponent = rep.dim_C;
        rep.target = "m_G^2";
    }
    rep.status = GuaranteeStatus::SigningAssumed;
    rep.caveat = "requires a Kasteleyn signing; not established for general graphs";
    std::size_t cap = opt.count_cap.value_or(vertex_cap());
    if (g.vertex_count() % 2) {
        attach_count(rep, 0, "vertex-parity");
    } else if (colored && 2 * g.vertices_of(Color::Black).size() != g.vertex_count()) {
        attach_count(rep, 0, "color-balance");
    } else if (g.vertex_count() <= std::min(cap, kMaxMaskVertices)) {
        attach_count(rep, count_matchings(g, cap), "oracle");
    }
    judge(rep);
    return rep;
}

}  // namespace mpar

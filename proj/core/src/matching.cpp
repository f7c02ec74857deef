#include "matchparity/matching.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <unordered_map>

#include "matchparity/gf2.hpp"

namespace mpar {

std::string to_decimal(const BigInt& x) { return x.get_str(10); }

std::optional<std::size_t> two_adic_valuation(const BigInt& x) {
    if (x == 0) return std::nullopt;
    return mpz_scan1(x.get_mpz_t(), 0);
}

std::size_t vertex_cap() {
    if (const char* s = std::getenv("MATCHPARITY_MAX_VERTICES")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(s, &end, 10);
        if (end != s && *end == '\0') return static_cast<std::size_t>(v);
    }
    return kDefaultVertexCap;
}

namespace {

struct Packed {
    std::vector<int> ids;
    std::vector<std::uint64_t> nbr;
    std::vector<std::vector<int>> mult;
};

Packed pack(const Graph& g, std::size_t cap) {
    const std::size_t n = g.vertex_count();
    if (n > cap)
        throw CapExceeded("graph has " + std::to_string(n) + " vertices; matching cap is " +
                          std::to_string(cap));
    if (n > kMaxMaskVertices)
        throw CapExceeded("exact enumeration supports at most 64 vertices");
    Packed p;
    p.ids = g.vertices();
    auto idx = g.index_map();
    p.nbr.assign(n, 0);
    p.mult.assign(n, std::vector<int>(n, 0));
    for (const auto& e : g.edges()) {
        auto i = static_cast<std::size_t>(idx[e.u]);
        auto j = static_cast<std::size_t>(idx[e.v]);
        p.nbr[i] |= std::uint64_t{1} << j;
        p.nbr[j] |= std::uint64_t{1} << i;
        p.mult[i][j] = p.mult[j][i] = e.mult;
    }
    return p;
}

std::uint64_t full_mask(std::size_t n) {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Minimum remaining-degree vertex, ties by lowest index; -1 if some vertex is stranded.
int branch_vertex(const Packed& p, std::uint64_t mask) {
    int best = -1;
    int best_deg = 65;
    for (std::uint64_t m = mask; m; m &= m - 1) {
        int v = std::countr_zero(m);
        int d = std::popcount(p.nbr[static_cast<std::size_t>(v)] & mask);
        if (d == 0) return -1;
        if (d < best_deg) {
            best_deg = d;
            best = v;
        }
    }
    return best;
}

class Counter {
public:
    explicit Counter(Packed p) : p_(std::move(p)) {}

    BigInt count(std::uint64_t mask) {
        if (mask == 0) return 1;
        if (std::popcount(mask) % 2) return 0;
        if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
        BigInt total = 0;
        int v = branch_vertex(p_, mask);
        if (v >= 0) {
            auto vi = static_cast<std::size_t>(v);
            std::uint64_t rest = mask & ~(std::uint64_t{1} << v);
            for (std::uint64_t m = p_.nbr[vi] & mask; m; m &= m - 1) {
                int u = std::countr_zero(m);
                BigInt sub = count(rest & ~(std::uint64_t{1} << u));
                if (sub != 0) total += sub * p_.mult[vi][static_cast<std::size_t>(u)];
            }
        }
        memo_.emplace(mask, total);
        return total;
    }

private:
    Packed p_;
    std::unordered_map<std::uint64_t, BigInt> memo_;
};

void enumerate_rec(const Packed& p, std::uint64_t mask, Matching& cur,
                   std::vector<Matching>& out) {
    if (mask == 0) {
        Matching m = cur;
        std::sort(m.begin(), m.end());
        out.push_back(std::move(m));
        return;
    }
    if (std::popcount(mask) % 2) return;
    int v = branch_vertex(p, mask);
    if (v < 0) return;
    auto vi = static_cast<std::size_t>(v);
    std::uint64_t rest = mask & ~(std::uint64_t{1} << v);
    for (std::uint64_t m = p.nbr[vi] & mask; m; m &= m - 1) {
        int u = std::countr_zero(m);
        int a = p.ids[vi], b = p.ids[static_cast<std::size_t>(u)];
        if (a > b) std::swap(a, b);
        for (int k = 0; k < p.mult[vi][static_cast<std::size_t>(u)]; ++k) {
            cur.push_back({a, b, k});
            enumerate_rec(p, rest & ~(std::uint64_t{1} << u), cur, out);
            cur.pop_back();
        }
    }
}

}  // namespace

std::vector<Matching> enumerate_matchings(const Graph& g, std::optional<std::size_t> cap) {
    Packed p = pack(g, cap.value_or(vertex_cap()));
    std::vector<Matching> out;
    Matching cur;
    enumerate_rec(p, full_mask(p.ids.size()), cur, out);
    return out;
}

BigInt count_matchings(const Graph& g, std::optional<std::size_t> cap) {
    Packed p = pack(g, cap.value_or(vertex_cap()));
    std::uint64_t mask = full_mask(p.ids.size());
    Counter c(std::move(p));
    return c.count(mask);
}

bool is_perfect_matching(const Graph& g, const Matching& m) {
    std::map<int, int> hits;
    for (const auto& e : m) {
        if (e.u >= e.v || e.k < 0 || e.k >= g.multiplicity(e.u, e.v)) return false;
        ++hits[e.u];
        ++hits[e.v];
    }
    if (hits.size() != g.vertex_count()) return false;
    return std::all_of(hits.begin(), hits.end(), [](auto kv) { return kv.second == 1; });
}

const char* parity_name(Parity p) { return p == Parity::Odd ? "Odd" : "Even"; }

Parity matching_parity(const Graph& g) {
    return det_mod2(adjacency_mod2(g)) ? Parity::Odd : Parity::Even;
}

}  // namespace mpar

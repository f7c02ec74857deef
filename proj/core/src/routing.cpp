#include "matchparity/routing.hpp"

#include <algorithm>
#include <set>

#include "matchparity/gf2.hpp"
#include "matchparity/region.hpp"

namespace mpar {

namespace {

std::vector<int> xor_sets(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

bool has(const std::vector<int>& s, int v) { return std::binary_search(s.begin(), s.end(), v); }

bool monochrome(const Graph& g, const std::vector<int>& s, Color c) {
    return std::all_of(s.begin(), s.end(), [&](int v) { return g.color_of(v) == c; });
}

void require_edge(const Graph& g, int b, int w) {
    if (!g.has_vertex(b) || !g.has_vertex(w) || g.multiplicity(b, w) == 0)
        throw PreconditionError("no edge " + std::to_string(b) + "-" + std::to_string(w));
}

}  // namespace

RouteResult route_channel(const Graph& g, int b, int w, const Channel& witness) {
    check_coloring(g);
    if (!g.colored()) throw PreconditionError("channel routing needs a colored graph");
    require_edge(g, b, w);
    const Color x = g.color_of(b);
    Graph ge = g;
    ge.remove_edge(b, w, 1);
    const auto& B = witness.vertices;
    if (!std::is_sorted(B.begin(), B.end()) || !has(B, b) || !monochrome(g, B, x) ||
        !is_channel(ge, B))
        throw PreconditionError("witness is not a channel of g - e containing b");

    RouteResult out;
    out.reduced = g.without({b, w});
    out.source = color_channel_space(g, x);
    out.target = color_channel_space(out.reduced, x);
    const std::uint64_t host_g = g.fingerprint(), host_r = out.reduced.fingerprint();
    std::vector<int> nw;
    for (auto [v, m] : g.neighbors(w))
        if (m % 2) nw.push_back(v);

    auto f = [&](const std::vector<int>& c) {
        return Channel{host_r, has(c, b) ? xor_sets(B, c) : c};
    };
    auto gmap = [&](const std::vector<int>& d) {
        std::size_t k = 0;
        for (int v : d) k += has(nw, v);
        return Channel{host_g, k % 2 ? xor_sets(B, d) : d};
    };

    bool ok = out.source.dimension() == out.target.dimension();
    for (const auto& c : out.source.basis) {
        Channel fc = f(c.vertices);
        ok = ok && is_channel(out.reduced, fc.vertices) && gmap(fc.vertices).vertices == c.vertices;
        out.f_images.push_back(std::move(fc));
    }
    for (const auto& d : out.target.basis) {
        Channel gd = gmap(d.vertices);
        ok = ok && is_channel(g, gd.vertices) && f(gd.vertices).vertices == d.vertices;
        out.g_images.push_back(std::move(gd));
    }
    ok = ok && independent(out.reduced, out.f_images) && independent(g, out.g_images);
    out.bijective = ok;
    return out;
}

namespace {

Graph without_edges(const Graph& g, const std::vector<std::pair<int, int>>& edges) {
    std::set<int> ends;
    for (auto [b, w] : edges) {
        require_edge(g, b, w);
        if (!ends.insert(b).second || !ends.insert(w).second)
            throw PreconditionError("selected edges are not vertex disjoint");
    }
    Graph ge = g;
    for (auto [b, w] : edges) ge.remove_edge(b, w, 1);
    return ge;
}

Color edge_color(const Graph& g, const std::vector<std::pair<int, int>>& edges) {
    check_coloring(g);
    if (!g.colored()) throw PreconditionError("channel routing needs a colored graph");
    if (edges.empty()) throw PreconditionError("no edges selected");
    Color x = g.color_of(edges.front().first);
    for (auto [b, _] : edges)
        if (g.color_of(b) != x) throw PreconditionError("the b's do not share a color");
    return x;
}

}  // namespace

std::optional<std::vector<Channel>> find_witnesses(const Graph& g,
                                                   const std::vector<std::pair<int, int>>& edges) {
    const Color x = edge_color(g, edges);
    Graph ge = without_edges(g, edges);
    ChannelBasis k = color_channel_space(ge, x);
    GF2Matrix m(edges.size(), k.dimension());
    for (std::size_t j = 0; j < edges.size(); ++j)
        for (std::size_t l = 0; l < k.dimension(); ++l)
            m.set(j, l, k.basis[l].contains(edges[j].first));
    std::vector<Channel> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        BitVector target(edges.size());
        target.set(i);
        auto sol = solve(m, target);
        if (!sol) return std::nullopt;
        Channel c{ge.fingerprint(), {}};
        for (std::size_t l : sol->ones()) c.vertices = xor_sets(c.vertices, k.basis[l].vertices);
        out.push_back(std::move(c));
    }
    return out;
}

MultiRouteResult multi_route(const Graph& g, const std::vector<std::pair<int, int>>& edges,
                             const std::vector<Channel>& witnesses) {
    const Color x = edge_color(g, edges);
    for (auto [_, w] : edges)
        if (g.color_of(w) == x) throw PreconditionError("edge endpoints share a color");
    Graph ge = without_edges(g, edges);
    if (witnesses.size() != edges.size())
        throw PreconditionError("need one witness per selected edge");
    MultiRouteResult out;
    out.strict = true;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& B = witnesses[i].vertices;
        if (B.empty() || !std::is_sorted(B.begin(), B.end()) || !monochrome(g, B, x) ||
            !is_channel(ge, B))
            throw PreconditionError("witness " + std::to_string(i) +
                                    " is not a nonempty channel of g minus the edges");
        for (std::size_t j = 0; j < edges.size(); ++j)
            if (j != i && has(B, edges[j].first))
                throw PreconditionError("witness " + std::to_string(i) + " contains b_" +
                                        std::to_string(j));
        if (!has(B, edges[i].first)) out.strict = false;
    }
    std::vector<int> ends;
    for (auto [b, w] : edges) {
        ends.push_back(b);
        ends.push_back(w);
    }
    out.reduced = g.without(ends);
    out.parity_g = matching_parity(g);
    out.parity_reduced = matching_parity(out.reduced);
    out.parity_equal = out.parity_g == out.parity_reduced;
    auto dim = [&](const Graph& h) {
        return x == Color::Black ? black_channel_dimension(h) : white_channel_dimension(h);
    };
    out.dim_g = dim(g);
    out.dim_reduced = dim(out.reduced);
    out.dims_equal = out.dim_g == out.dim_reduced;
    return out;
}

namespace {

Parity times(Parity a, Parity b) {
    return a == Parity::Odd && b == Parity::Odd ? Parity::Odd : Parity::Even;
}

Parity replay(int m, int n, std::vector<RectangleStep>& steps) {
    if (m == 0 || n == 0) return Parity::Odd;
    if (m == n) return Parity::Even;
    if (m > n) std::swap(m, n);
    GridRegion r = GridRegion::rectangle(m, n);
    Graph g = r.graph();
    std::vector<std::pair<int, int>> edges;
    for (int y = 0; y < m; ++y)
        if (GridRegion::color({m - 1, y}) == Color::Black)
            edges.push_back({r.index({m - 1, y}), r.index({m, y})});
    auto witnesses = find_witnesses(g, edges);
    if (!witnesses) throw std::logic_error("no routing witnesses for R_" + std::to_string(m) +
                                           "x" + std::to_string(n));
    RectangleStep step;
    step.m = m;
    step.n = n;
    step.route = multi_route(g, edges, *witnesses);

    // Remaining vertices of the two dug columns pair up along forced bridges.
    Graph split = step.route.reduced;
    std::vector<int> bridge;
    for (int y = 0; y < m; ++y)
        if (GridRegion::color({m - 1, y}) == Color::White) {
            bridge.push_back(r.index({m - 1, y}));
            bridge.push_back(r.index({m, y}));
        }
    split = split.without(bridge);
    Graph left = GridRegion::rectangle(m, m - 1).graph();
    std::vector<Point> right_pts;
    for (int y = 0; y < m; ++y)
        for (int x = m + 1; x < n; ++x) right_pts.push_back({x, y});
    bool shape = split.vertex_count() == left.vertex_count() + right_pts.size() &&
                 split.edge_count() == left.edge_count() + GridRegion(right_pts).edge_count();
    step.bridges_forced = shape && matching_parity(split) == step.route.parity_reduced;
    steps.push_back(step);
    return times(replay(m, m - 1, steps), replay(m, n - m - 1, steps));
}

}  // namespace

RectangleReplay rectangle_parity_replay(int m, int n) {
    if (m < 0 || n < 0) throw PreconditionError("rectangle dimensions must be nonnegative");
    RectangleReplay out;
    out.parity = replay(m, n, out.steps);
    return out;
}

EdgeEnd PairingFunction::apply(int v, EdgeEnd e) const {
    auto it = at.find(v);
    if (it == at.end() || !it->second.count(e))
        throw PreconditionError("edge end is outside the pairing domain at " + std::to_string(v));
    return it->second.at(e);
}

bool PairingFunction::valid() const {
    for (const auto& [v, f] : at)
        for (const auto& [e, img] : f) {
            if (img == e) return false;
            auto back = f.find(img);
            if (back == f.end() || !(back->second == e)) return false;
        }
    return true;
}

PairingFunction canonical_pairing(const Graph& g, const Channel& c) {
    if (!is_channel(g, c.vertices)) throw PreconditionError("vertex set is not a channel");
    PairingFunction p;
    for (int v : g.vertices()) {
        std::vector<EdgeEnd> ends;
        for (auto [w, m] : g.neighbors(v))
            if (c.contains(w))
                for (int k = 0; k < m; ++k) ends.push_back({w, k});
        auto& f = p.at[v];
        for (std::size_t i = 0; i + 1 < ends.size(); i += 2) {
            f[ends[i]] = ends[i + 1];
            f[ends[i + 1]] = ends[i];
        }
    }
    return p;
}

namespace {

MatchedEdge normal(int a, int b, int k) { return {std::min(a, b), std::max(a, b), k}; }

}  // namespace

CycleFlip cycle_flip(const Graph& g, const Matching& mu, const Channel& c, std::optional<int> v0,
                     const PairingFunction* pairing) {
    check_coloring(g);
    if (!g.colored()) throw PreconditionError("cycle flip needs a bipartite graph");
    if (!is_perfect_matching(g, mu)) throw PreconditionError("mu is not a perfect matching");
    if (c.empty()) throw PreconditionError("channel is empty");
    if (!is_channel(g, c.vertices)) throw PreconditionError("vertex set is not a channel");
    int start = v0.value_or(c.vertices.front());
    if (!c.contains(start)) throw PreconditionError("v0 is not in the channel");
    PairingFunction own;
    if (!pairing) {
        own = canonical_pairing(g, c);
        pairing = &own;
    }

    std::map<int, MatchedEdge> partner;
    for (const auto& e : mu) {
        partner[e.u] = e;
        partner[e.v] = e;
    }
    CycleFlip out;
    std::vector<MatchedEdge> edges;
    std::map<int, std::size_t> first;
    int v = start;
    first[v] = 0;
    out.walk.push_back(v);
    std::size_t n0 = 0;
    for (std::size_t n = 0;; ++n) {
        MatchedEdge e;
        int next;
        if (n % 2 == 0) {
            e = partner.at(v);
            next = e.u == v ? e.v : e.u;
        } else {
            const MatchedEdge& prev = edges.back();
            EdgeEnd img = pairing->apply(v, {prev.u == v ? prev.v : prev.u, prev.k});
            e = normal(v, img.nbr, img.k);
            next = img.nbr;
        }
        edges.push_back(e);
        auto it = first.find(next);
        if (it != first.end()) {
            n0 = it->second;
            break;
        }
        first[next] = n + 1;
        out.walk.push_back(next);
        v = next;
    }
    out.cycle.assign(edges.begin() + static_cast<std::ptrdiff_t>(n0), edges.end());

    std::set<MatchedEdge> in_mu(mu.begin(), mu.end());
    std::size_t matched = 0;
    const bool lead = in_mu.count(out.cycle.front()) != 0;
    for (std::size_t i = 0; i < out.cycle.size(); ++i) {
        bool m = in_mu.count(out.cycle[i]) != 0;
        matched += m;
        if (m != (lead == (i % 2 == 0))) throw std::logic_error("cycle does not alternate with mu");
    }
    if (out.cycle.size() % 2 || 2 * matched != out.cycle.size())
        throw std::logic_error("cycle has odd length");
    std::set<MatchedEdge> flipped = in_mu;
    for (const auto& e : out.cycle)
        if (!flipped.erase(e)) flipped.insert(e);
    out.flipped.assign(flipped.begin(), flipped.end());
    if (!is_perfect_matching(g, out.flipped)) throw std::logic_error("flip is not a matching");
    return out;
}

}  // namespace mpar

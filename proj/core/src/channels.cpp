#include "matchparity/channels.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "matchparity/gf2.hpp"

namespace mpar {

const char* restriction_name(ColorRestriction r) {
    switch (r) {
        case ColorRestriction::All: return "All";
        case ColorRestriction::BlackOnly: return "BlackOnly";
        case ColorRestriction::WhiteOnly: return "WhiteOnly";
    }
    return "All";
}

bool Channel::contains(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

Channel make_channel(const Graph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (int v : vertices)
        if (!g.has_vertex(v)) throw PreconditionError("unknown vertex " + std::to_string(v));
    return Channel{g.fingerprint(), std::move(vertices)};
}

int channel_degree(const Graph& g, int v, const std::vector<int>& c) {
    int d = 0;
    for (auto [w, m] : g.neighbors(v))
        if (std::binary_search(c.begin(), c.end(), w)) d += m;
    return d;
}

bool is_channel(const Graph& g, const std::vector<int>& c) {
    std::vector<int> s(c);
    std::sort(s.begin(), s.end());
    for (int v : s)
        if (!g.has_vertex(v)) throw PreconditionError("unknown vertex " + std::to_string(v));
    std::set<int> touched;
    for (int v : s)
        for (auto [w, _] : g.neighbors(v)) touched.insert(w);
    for (int v : touched)
        if (channel_degree(g, v, s) % 2) return false;
    return true;
}

bool is_channel(const Graph& g, const Channel& c) { return is_channel(g, c.vertices); }

namespace {

ChannelBasis basis_from_kernel(const Graph& g, const GF2Matrix& m, const std::vector<int>& ids,
                               ColorRestriction r) {
    ChannelBasis cb;
    cb.host = g.fingerprint();
    cb.restriction = r;
    for (const auto& v : nullspace(m)) {
        Channel c{cb.host, {}};
        for (auto i : v.ones()) c.vertices.push_back(ids[i]);
        std::sort(c.vertices.begin(), c.vertices.end());
        cb.basis.push_back(std::move(c));
    }
    return cb;
}

}  // namespace

ChannelBasis channel_space(const Graph& g) {
    return basis_from_kernel(g, adjacency_mod2(g), g.vertices(), ColorRestriction::All);
}

ChannelBasis black_channel_space(const Graph& g) {
    return basis_from_kernel(g, bipartite_adjacency_mod2(g), g.vertices_of(Color::Black),
                             ColorRestriction::BlackOnly);
}

ChannelBasis white_channel_space(const Graph& g) {
    return basis_from_kernel(g, bipartite_adjacency_mod2(g).transposed(),
                             g.vertices_of(Color::White), ColorRestriction::WhiteOnly);
}

ChannelBasis color_channel_space(const Graph& g, Color c) {
    return c == Color::Black ? black_channel_space(g) : white_channel_space(g);
}

std::size_t channel_dimension(const Graph& g) { return nullity(adjacency_mod2(g)); }

std::size_t black_channel_dimension(const Graph& g) {
    return nullity(bipartite_adjacency_mod2(g));
}

std::size_t white_channel_dimension(const Graph& g) {
    return nullity(bipartite_adjacency_mod2(g).transposed());
}

Channel channel_sum(const Channel& a, const Channel& b) {
    if (a.host != b.host) throw PreconditionError("channels belong to different host graphs");
    Channel out{a.host, {}};
    std::set_symmetric_difference(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                                  b.vertices.end(), std::back_inserter(out.vertices));
    return out;
}

std::pair<Channel, Channel> split_by_color(const Graph& g, const Channel& c) {
    if (!g.colored()) throw PreconditionError("graph is not colored");
    Channel b{c.host, {}}, w{c.host, {}};
    for (int v : c.vertices) (g.color_of(v) == Color::Black ? b : w).vertices.push_back(v);
    return {b, w};
}

bool dimension_identity_check(const Graph& g) {
    auto nb = static_cast<long>(black_channel_dimension(g));
    auto nw = static_cast<long>(white_channel_dimension(g));
    auto vb = static_cast<long>(g.vertices_of(Color::Black).size());
    auto vw = static_cast<long>(g.vertices_of(Color::White).size());
    return nb - nw == vb - vw;
}

bool independent(const Graph& g, const std::vector<Channel>& cs) {
    auto idx = g.index_map();
    GF2Matrix m(g.vertex_count(), cs.size());
    for (std::size_t j = 0; j < cs.size(); ++j)
        for (int v : cs[j].vertices) m.set(static_cast<std::size_t>(idx.at(v)), j);
    return rank(m) == cs.size();
}

StepDiagonal step_diagonal_channels(int r) {
    if (r < 1) throw PreconditionError("step-diagonal size must be positive");
    const int n = 2 * r;
    StepDiagonal sd;
    sd.host = GridRegion::rectangle(n, n);
    for (int j = 0; j < r; ++j) {
        std::vector<Point> ch;
        for (Point p : sd.host.points()) {
            int s = p.x + p.y;
            int t = p.y - p.x;
            if (s == 2 * j || s == 2 * (n - 1 - j) || t == 2 * (j + 1) || t == -2 * (j + 1))
                ch.push_back(p);
        }
        sd.channels.push_back(std::move(ch));
        sd.edges.push_back({{j, j}, {j + 1, j}});
    }
    return sd;
}

}  // namespace mpar

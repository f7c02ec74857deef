#include "matchparity/billiards.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dsu.hpp"
#include "matchparity/channels.hpp"

namespace mpar {

namespace {

void fill_classes(BilliardHost& h) {
    auto ext = h.faces.external_vertices();
    std::set<int> e(ext.begin(), ext.end());
    for (int v : h.g.vertices()) (e.count(v) ? h.external_vertices : h.internal_vertices).push_back(v);
}

}  // namespace

BilliardHost BilliardHost::from_region(const GridRegion& r) {
    BilliardHost h;
    if (r.size() == 0) throw PreconditionError("empty region");
    h.g = r.graph();
    if (!is_connected(h.g)) throw PreconditionError("region is disconnected");
    h.rot = grid_rotation(r);
    GridFaces gf = grid_faces(r);
    h.faces = std::move(gf.faces);
    h.cell = std::move(gf.cell);
    fill_classes(h);
    return h;
}

BilliardHost BilliardHost::from_graph(Graph g, RotationSystem rot) {
    check_coloring(g);
    if (g.vertex_count() == 0 || !is_connected(g))
        throw PreconditionError("billiard host must be a nonempty connected graph");
    BilliardHost h;
    h.g = std::move(g);
    h.rot = std::move(rot);
    h.faces = trace_faces(h.g, h.rot);
    h.cell.assign(h.faces.faces.size(), std::nullopt);
    fill_classes(h);
    return h;
}

bool BilliardHost::is_internal(int v) const {
    return std::binary_search(internal_vertices.begin(), internal_vertices.end(), v);
}

bool is_inner_semi_eulerian(const BilliardHost& h) {
    for (int v : h.internal_vertices)
        if (h.g.color_of(v) == Color::Black && h.g.degree(v) % 2) return false;
    return true;
}

void check_pinches(const BilliardHost& h) {
    for (int v : h.internal_vertices) {
        if (h.g.color_of(v) != Color::Black) continue;
        auto slots = h.faces.around(h.rot, v);
        std::set<int> seen;
        for (int f : slots)
            if (!seen.insert(f).second)
                throw UnsupportedInput("vertex " + h.g.name(v) + " meets face " +
                                       std::to_string(f) + " more than once (pinch)");
    }
}

namespace {

std::vector<char> membership(const BilliardHost& h, const std::vector<int>& nest) {
    std::vector<char> in(h.faces.faces.size(), 0);
    for (int f : nest) {
        if (f < 0 || f >= static_cast<int>(in.size()) || f == h.faces.external)
            throw PreconditionError("unknown internal face " + std::to_string(f));
        in[static_cast<std::size_t>(f)] = 1;
    }
    return in;
}

void require_host(const BilliardHost& h) {
    if (!is_inner_semi_eulerian(h))
        throw PreconditionError("host is not inner semi-Eulerian");
    check_pinches(h);
}

}  // namespace

bool validate_nest(const BilliardHost& h, const std::vector<int>& nest) {
    require_host(h);
    auto in = membership(h, nest);
    for (int v : h.g.vertices()) {
        if (h.g.color_of(v) != Color::Black) continue;
        auto slots = h.faces.around(h.rot, v);
        if (h.is_internal(v)) {
            std::size_t k = 0;
            for (int f : slots) k += static_cast<std::size_t>(in[static_cast<std::size_t>(f)]);
            if (k == 0 || k == slots.size()) continue;
            for (std::size_t i = 0; i < slots.size(); ++i)
                if (in[static_cast<std::size_t>(slots[i])] ==
                    in[static_cast<std::size_t>(slots[(i + 1) % slots.size()])])
                    return false;
        } else {
            int any = -1;
            for (int f : slots) {
                if (f == h.faces.external) continue;
                int b = in[static_cast<std::size_t>(f)];
                if (any >= 0 && b != any) return false;
                any = b;
            }
        }
    }
    return true;
}

BilliardPathBasis path_basis(const BilliardHost& h) {
    require_host(h);
    const std::size_t nf = h.faces.faces.size();
    detail::DisjointSets ds(nf);
    std::set<std::pair<int, int>> links;
    auto link = [&](int a, int b) {
        if (a == b) return;
        ds.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
        links.insert({std::min(a, b), std::max(a, b)});
    };
    for (int v : h.g.vertices()) {
        if (h.g.color_of(v) != Color::Black) continue;
        auto slots = h.faces.around(h.rot, v);
        if (h.is_internal(v)) {
            for (std::size_t i = 0; i < slots.size(); ++i)
                link(slots[i], slots[(i + 2) % slots.size()]);
        } else {
            int prev = -1;
            for (int f : slots) {
                if (f == h.faces.external) continue;
                if (prev >= 0) link(prev, f);
                prev = f;
            }
        }
    }
    std::map<std::size_t, std::vector<int>> groups;
    for (int f : h.faces.internal()) groups[ds.find(static_cast<std::size_t>(f))].push_back(f);
    BilliardPathBasis out;
    for (auto& [_, fs] : groups) out.paths.push_back(std::move(fs));
    std::sort(out.paths.begin(), out.paths.end());
    out.links.assign(links.begin(), links.end());
    return out;
}

BilliardPathBasis path_basis(const Graph& g, const RotationSystem& rot) {
    return path_basis(BilliardHost::from_graph(g, rot));
}

Channel nest_to_channel(const BilliardHost& h, const std::vector<int>& nest) {
    if (!validate_nest(h, nest)) throw PreconditionError("face set is not a billiard nest");
    auto in = membership(h, nest);
    Graph inner = h.inner();
    std::vector<int> ch;
    for (int v : h.internal_vertices) {
        if (h.g.color_of(v) != Color::Black) continue;
        auto slots = h.faces.around(h.rot, v);
        std::size_t k = 0;
        for (int f : slots) k += static_cast<std::size_t>(in[static_cast<std::size_t>(f)]);
        if (!slots.empty() && 2 * k == slots.size()) ch.push_back(v);
    }
    return make_channel(inner, std::move(ch));
}

bool bounce_check(const BilliardHost& h) {
    return path_basis(h).size() == black_channel_dimension(h.inner()) + 1;
}

Completion outer_completion(const Graph& h, const RotationSystem& rot) {
    check_coloring(h);
    if (h.vertex_count() == 0 || !is_connected(h))
        throw PreconditionError("outer completion needs a nonempty connected graph");
    Completion c;
    c.g = h;
    c.rot = rot;
    const int base = h.vertices().back() + 1;

    if (h.edge_count() == 0) {
        // A lone vertex: pad Y to a 4-cycle around it, no spokes.
        int v = h.vertices().front();
        Color cv = h.color_of(v);
        for (int i = 0; i < 4; ++i) c.g.add_vertex_with_id(base + i, i % 2 ? cv : opposite(cv));
        for (int i = 0; i < 4; ++i) {
            c.g.add_edge(base + i, base + (i + 1) % 4);
            c.rot.order[base + i] = {base + (i + 3) % 4, base + (i + 1) % 4};
            c.cycle.push_back(base + i);
        }
        c.rot.order[v] = {};
        c.rot.outer = Dart{base, base + 1};
        return c;
    }

    BilliardHost hh = BilliardHost::from_graph(h, rot);
    if (!is_inner_semi_eulerian(hh)) throw PreconditionError("h is not inner semi-Eulerian");
    const auto& walk = hh.faces.faces.at(static_cast<std::size_t>(hh.faces.external));
    const std::size_t n0 = walk.size();
    const std::size_t reps = n0 < 4 ? (4 + n0 - 1) / n0 : 1;
    const std::size_t n = n0 * reps;
    auto u = [&](std::size_t i) { return walk[i % n0].first; };

    std::vector<char> spoke(n, 0);
    std::set<int> seen;
    bool any = false;
    for (std::size_t i = 0; i < n; ++i)
        if (seen.insert(u(i)).second && h.degree(u(i)) % 2) spoke[i] = any = true;
    if (!any) {
        // All external degrees even: one spoke at a white vertex keeps H connected.
        for (std::size_t i = 0; i < n; ++i)
            if (h.color_of(u(i)) == Color::White) {
                spoke[i] = 1;
                break;
            }
    }

    auto y = [&](std::size_t i) { return base + static_cast<int>(i % n); };
    for (std::size_t i = 0; i < n; ++i) {
        c.g.add_vertex_with_id(y(i), opposite(h.color_of(u(i))));
        c.cycle.push_back(y(i));
    }
    for (std::size_t i = 0; i < n; ++i) c.g.add_edge(y(i), y(i + 1));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> ring{y(i + n - 1)};
        if (spoke[i]) {
            c.g.add_edge(u(i), y(i));
            ring.push_back(u(i));
            auto& r = c.rot.order[u(i)];
            auto at = std::find(r.begin(), r.end(), u(i + 1));
            r.insert(at + 1, y(i));
        }
        ring.push_back(y(i + 1));
        c.rot.order[y(i)] = ring;
    }
    c.rot.outer = Dart{y(0), y(1)};

    BilliardHost out = BilliardHost::from_graph(c.g, c.rot);
    std::vector<int> ext = out.faces.external_vertices();
    std::vector<int> ys(c.cycle);
    std::sort(ys.begin(), ys.end());
    if (ext != ys || out.faces.faces[static_cast<std::size_t>(out.faces.external)].size() != n)
        throw std::logic_error("outer completion: Y is not the external face");
    if (out.internal_vertices != h.vertices())
        throw std::logic_error("outer completion: internal vertices differ from h");
    if (!is_inner_semi_eulerian(out))
        throw std::logic_error("outer completion is not inner semi-Eulerian");
    if (!(out.inner() == h)) throw std::logic_error("outer completion: inner subgraph differs");
    if (!outer_subgraph_is_simple_cycle(c.g, ys))
        throw std::logic_error("outer completion: outer subgraph is not a simple cycle");
    long v = static_cast<long>(c.g.vertex_count()), e = static_cast<long>(c.g.edge_count());
    if (v - e + static_cast<long>(out.faces.faces.size()) != 2)
        throw std::logic_error("outer completion: embedding is not planar");
    return c;
}

RectangleFormulas rectangle_formulas(int m, int n) {
    if (m < 1 || n < 1) throw PreconditionError("rectangle parameters must be positive");
    RectangleFormulas f;
    f.m = m;
    f.n = n;
    long g = std::gcd(m, n);
    if (static_cast<long>(m + 1) * (n + 1) % 2 == 0) f.path_basis_size = (g + 1) / 2;
    if (m >= 2 && n >= 2 && static_cast<long>(m - 1) * (n - 1) % 2 == 0) {
        f.black_channel_dim = (g - 1) / 2;
        f.guaranteed_valuation = f.black_channel_dim;
    }
    f.parity = g == 1 ? Parity::Odd : Parity::Even;
    return f;
}

}  // namespace mpar

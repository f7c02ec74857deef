#include "matchparity/moves.hpp"

#include <algorithm>
#include <set>

namespace mpar {

const char* move_name(MoveKind k) {
    switch (k) {
        case MoveKind::VC: return "VC";
        case MoveKind::ED: return "ED";
        case MoveKind::FV: return "FV";
        case MoveKind::IsolatedRemoval: return "IsolatedRemoval";
        case MoveKind::DiagonalContraction: return "DiagonalContraction";
    }
    return "?";
}

namespace {

void require_vertex(const Graph& g, int v) {
    if (!g.has_vertex(v)) throw PreconditionError("unknown vertex " + std::to_string(v));
}

void put(Move* record, Move m) {
    if (record) *record = std::move(m);
}

}  // namespace

Graph apply_vc(const Graph& g, int v, Move* record) {
    require_vertex(g, v);
    const auto& nb = g.neighbors(v);
    if (g.degree(v) != 2 || nb.size() != 2)
        throw PreconditionError("VC needs a degree-2 vertex with distinct neighbors at " +
                                g.name(v));
    int a = nb.begin()->first, b = std::next(nb.begin())->first;
    int kept = std::min(a, b), gone = std::max(a, b);
    Graph h = g;
    h.remove_vertex(v);
    std::vector<std::pair<int, int>> moved(h.neighbors(gone).begin(), h.neighbors(gone).end());
    int loops = h.multiplicity(kept, gone);
    h.remove_vertex(gone);
    for (auto [w, m] : moved)
        if (w != kept) h.add_edge(kept, w, m);
    put(record, {MoveKind::VC, {v, kept, gone}, -2, -2 - loops});
    return h;
}

Graph apply_ed(const Graph& g, int u, int w, Move* record) {
    require_vertex(g, u);
    require_vertex(g, w);
    if (g.multiplicity(u, w) < 2)
        throw PreconditionError("ED needs a doubled edge " + g.name(u) + "-" + g.name(w));
    Graph h = g;
    h.remove_edge(u, w, 2);
    put(record, {MoveKind::ED, {std::min(u, w), std::max(u, w)}, 0, -2});
    return h;
}

Graph apply_fv(const Graph& g, int v1, int v2, Move* record) {
    require_vertex(g, v1);
    require_vertex(g, v2);
    if (g.degree(v1) != 1 || g.multiplicity(v1, v2) != 1)
        throw PreconditionError("FV needs a degree-1 vertex " + g.name(v1) +
                                " adjacent to " + g.name(v2));
    int removed = g.degree(v2);
    Graph h = g.without({v1, v2});
    put(record, {MoveKind::FV, {v1, v2}, -2, -removed});
    return h;
}

Graph apply_isolated_removal(const Graph& g, int v, Move* record) {
    require_vertex(g, v);
    if (g.degree(v) != 0) throw PreconditionError("vertex " + g.name(v) + " is not isolated");
    Graph h = g.without({v});
    put(record, {MoveKind::IsolatedRemoval, {v}, -1, 0});
    return h;
}

Graph apply_move(const Graph& g, const Move& m) {
    auto arg = [&](std::size_t i) {
        if (m.args.size() <= i) throw PreconditionError("move is missing arguments");
        return m.args[i];
    };
    switch (m.kind) {
        case MoveKind::VC: {
            Move got;
            Graph h = apply_vc(g, arg(0), &got);
            if (m.args.size() >= 3 && (got.args[1] != m.args[1] || got.args[2] != m.args[2]))
                throw PreconditionError("VC merge does not match the recorded move");
            return h;
        }
        case MoveKind::ED: return apply_ed(g, arg(0), arg(1));
        case MoveKind::FV: return apply_fv(g, arg(0), arg(1));
        case MoveKind::IsolatedRemoval: return apply_isolated_removal(g, arg(0));
        case MoveKind::DiagonalContraction: return g;
    }
    return g;
}

Graph replay(const Graph& initial, const std::vector<Move>& moves) {
    Graph g = initial;
    for (const auto& m : moves) g = apply_move(g, m);
    return g;
}

std::optional<std::size_t> ReductionTrace::dimension() const {
    if (!fully_reduced()) return std::nullopt;
    return terminal.vertex_count() + static_cast<std::size_t>(black_delta + white_delta);
}

namespace {

std::optional<Move> next_move(const Graph& g) {
    for (int v : g.vertices())
        if (g.degree(v) == 1) return Move{MoveKind::FV, {v, g.neighbors(v).begin()->first}};
    for (const auto& e : g.edges())
        if (e.mult >= 2) return Move{MoveKind::ED, {e.u, e.v}};
    for (int v : g.vertices())
        if (g.degree(v) == 2 && g.neighbors(v).size() == 2) return Move{MoveKind::VC, {v}};
    return std::nullopt;
}

}  // namespace

ReductionTrace reduce(const Graph& g) {
    ReductionTrace t;
    t.initial = g;
    Graph cur = g;
    while (auto m = next_move(cur)) {
        Move rec;
        switch (m->kind) {
            case MoveKind::FV: cur = apply_fv(cur, m->args[0], m->args[1], &rec); break;
            case MoveKind::ED: cur = apply_ed(cur, m->args[0], m->args[1], &rec); break;
            default: cur = apply_vc(cur, m->args[0], &rec); break;
        }
        t.moves.push_back(std::move(rec));
    }
    t.terminal = std::move(cur);
    return t;
}

namespace {

struct PlaneData {
    FaceSet faces;
    std::vector<int> external;
};

PlaneData plane_host(const Graph& g, const RotationSystem& rot) {
    if (g.vertex_count() < 2 || !is_connected(g))
        throw PreconditionError("need a connected plane graph with at least 2 vertices");
    PlaneData d{trace_faces(g, rot), {}};
    d.external = d.faces.external_vertices();
    std::set<int> ext(d.external.begin(), d.external.end());
    for (int v : g.vertices())
        if (!ext.count(v) && g.degree(v) < 4)
            throw PreconditionError("internal vertex " + g.name(v) + " has degree " +
                                    std::to_string(g.degree(v)));
    for (int f : d.faces.internal())
        if (d.faces.faces[static_cast<std::size_t>(f)].size() < 4)
            throw PreconditionError("internal face through " +
                                    g.name(d.faces.faces[static_cast<std::size_t>(f)][0].first) +
                                    " has degree below 4");
    return d;
}

}  // namespace

int find_low_degree_external(const Graph& g, const RotationSystem& rot) {
    PlaneData d = plane_host(g, rot);
    for (int v : d.external)
        if (g.degree(v) <= 2) return v;
    throw std::logic_error("no external vertex of degree at most 2");
}

Point find_low_degree_external(const GridRegion& r) {
    return r.point(find_low_degree_external(r.graph(), grid_rotation(r)));
}

CornerStats corner_stats(const Graph& g, const RotationSystem& rot) {
    PlaneData d = plane_host(g, rot);
    CornerStats s;
    s.b = d.external.size();
    long total = 0;
    for (int v : d.external) total += g.degree(v);
    s.average_degree = static_cast<double>(total) / static_cast<double>(s.b);
    s.bound = 3.0 - 4.0 / static_cast<double>(s.b);
    return s;
}

CornerStats corner_stats(const GridRegion& r) { return corner_stats(r.graph(), grid_rotation(r)); }

PlacedGraph placed(const GridRegion& r) {
    PlacedGraph pg{r.graph(), {}};
    for (std::size_t i = 0; i < r.size(); ++i)
        pg.pos[static_cast<int>(i)] = r.point(static_cast<int>(i));
    return pg;
}

std::optional<GridRegion> as_region(const PlacedGraph& pg) {
    std::map<Point, int, RowMajor> at;
    for (int v : pg.g.vertices()) {
        auto it = pg.pos.find(v);
        if (it == pg.pos.end() || !at.emplace(it->second, v).second) return std::nullopt;
    }
    std::size_t unit = 0;
    for (auto [p, v] : at)
        for (Point q : {Point{p.x + 1, p.y}, Point{p.x, p.y + 1}}) {
            auto it = at.find(q);
            if (it == at.end()) continue;
            if (pg.g.multiplicity(v, it->second) != 1) return std::nullopt;
            ++unit;
        }
    if (unit != pg.g.edge_count()) return std::nullopt;
    std::vector<Point> pts;
    for (auto [p, _] : at) pts.push_back(p);
    return GridRegion(std::move(pts));
}

Contraction diagonal_contract(const PlacedGraph& pg, int corner) {
    const Graph& g = pg.g;
    check_coloring(g);
    if (!g.colored()) throw PreconditionError("diagonal contraction needs a colored graph");
    require_vertex(g, corner);
    const auto& nb = g.neighbors(corner);
    if (g.degree(corner) != 2 || nb.size() != 2)
        throw PreconditionError("corner " + g.name(corner) + " does not have degree 2");

    std::map<Point, int, RowMajor> at;
    for (int v : g.vertices())
        if (!at.emplace(pg.pos.at(v), v).second)
            throw PreconditionError("two vertices share position " + to_string(pg.pos.at(v)));
    const Point c0 = pg.pos.at(corner);
    Point dp = pg.pos.at(nb.begin()->first) - c0;
    Point dq = pg.pos.at(std::next(nb.begin())->first) - c0;
    auto unit = [](Point p) { return std::abs(p.x) + std::abs(p.y) == 1; };
    if (!unit(dp) || !unit(dq) || dp.x * dq.x + dp.y * dq.y != 0)
        throw UnsupportedInput("corner " + g.name(corner) +
                               " does not meet two perpendicular lattice edges");
    const Point d = dp + dq;

    Contraction out;
    out.affected = g.color_of(corner);
    Graph h = g;
    std::map<int, int> merged_into;
    int cur = corner;
    for (;;) {
        out.diagonal.push_back(cur);
        Move m;
        h = apply_vc(h, cur, &m);
        out.moves.push_back(m);
        int kept = m.args[1];
        merged_into[m.args[2]] = kept;
        auto it = at.find(pg.pos.at(cur) + d);
        if (it == at.end() || !h.has_vertex(it->second)) {
            out.end_degree = g.degree(cur);
            break;
        }
        int nxt = it->second;
        if (h.multiplicity(kept, nxt) < 2)
            throw PreconditionError("diagonal not contractible: no internal face between " +
                                    g.name(cur) + " and " + g.name(nxt));
        h = apply_ed(h, kept, nxt, &m);
        out.moves.push_back(m);
        int left = h.degree(nxt);
        if (left == 2) {
            cur = nxt;
            continue;
        }
        out.diagonal.push_back(nxt);
        out.end_degree = g.degree(nxt);
        if (left == 1) {
            h = apply_fv(h, nxt, h.neighbors(nxt).begin()->first, &m);
        } else if (left == 0) {
            h = apply_isolated_removal(h, nxt, &m);
            out.delta = 1;
        } else {
            throw PreconditionError("diagonal not contractible at " + g.name(nxt) +
                                    " (degree " + std::to_string(g.degree(nxt)) + ")");
        }
        out.moves.push_back(m);
        break;
    }

    Move marker{MoveKind::DiagonalContraction, {corner, out.end_degree}, 0, 0};
    for (const auto& m : out.moves) {
        marker.vertex_delta += m.vertex_delta;
        marker.edge_delta += m.edge_delta;
    }
    out.moves.insert(out.moves.begin(), marker);

    // Fold the negative side of the diagonal line onto the positive side.
    const Point normal{-d.y, d.x};
    auto fold = [&](Point p) {
        Point r = p - c0;
        long cross = static_cast<long>(d.x) * r.y - static_cast<long>(d.y) * r.x;
        return cross < 0 ? p + normal : p;
    };
    std::map<int, std::vector<int>> members;
    for (int v : h.vertices()) members[v].push_back(v);
    for (auto [gone, kept] : merged_into) {
        int root = kept;
        while (merged_into.count(root)) root = merged_into.at(root);
        if (h.has_vertex(root)) members[root].push_back(gone);
    }
    out.result.g = h;
    bool consistent = true;
    for (auto& [v, ms] : members) {
        Point p = fold(pg.pos.at(ms.front()));
        for (int m : ms)
            if (!(fold(pg.pos.at(m)) == p)) consistent = false;
        out.result.pos[v] = p;
    }
    if (consistent) out.region = as_region(out.result);
    return out;
}

Contraction diagonal_contract(const GridRegion& r, Point corner) {
    int c = r.index(corner);
    if (c < 0) throw PreconditionError("corner " + to_string(corner) + " is not in the region");
    Contraction out = diagonal_contract(placed(r), c);
    if (!out.region)
        throw UnsupportedInput("contracted graph at " + to_string(corner) +
                               " does not embed as a lattice region");
    return out;
}

ParityRecord parity_theorem(const GridRegion& r, const std::vector<Point>& v,
                            std::optional<std::size_t> cap) {
    if (v.size() != 4) throw PreconditionError("parity theorem needs four vertices");
    Point step = v[1] - v[0];
    if (std::abs(step.x) + std::abs(step.y) != 1)
        throw PreconditionError("v1 and v2 are not adjacent");
    for (std::size_t i = 0; i < 4; ++i) {
        if (!r.contains(v[i])) throw PreconditionError(to_string(v[i]) + " is not in the region");
        if (i > 0 && !(v[i] - v[i - 1] == step))
            throw PreconditionError("v1..v4 are not consecutive collinear vertices");
    }
    auto cls = classify_vertices(r);
    for (Point p : v)
        if (std::find(cls.external.begin(), cls.external.end(), p) == cls.external.end())
            throw PreconditionError(to_string(p) + " is not external");
    for (std::size_t i : {1u, 2u})
        if (r.degree(v[i]) != 3)
            throw PreconditionError(to_string(v[i]) + " does not have degree 3");

    const int i1 = r.index(v[0]), i2 = r.index(v[1]), i3 = r.index(v[2]);
    PlacedGraph base = placed(r);
    PlacedGraph ge = base;
    ge.g.remove_edge(i1, i2);
    PlacedGraph gv = base;
    gv.g = base.g.without({i1, i2});
    gv.pos.erase(i1);
    gv.pos.erase(i2);

    ParityRecord rec;
    rec.ge = diagonal_contract(ge, i2);
    rec.gv = diagonal_contract(gv, i3);
    rec.delta_e = rec.ge.delta;
    rec.delta_v = rec.gv.delta;
    rec.m_G = count_matchings(base.g, cap);
    rec.m_Ge = count_matchings(ge.g, cap);
    rec.m_Gv = count_matchings(gv.g, cap);
    rec.m_Ge_prime = count_matchings(rec.ge.result.g, cap);
    rec.m_Gv_prime = count_matchings(rec.gv.result.g, cap);
    rec.split_holds = rec.m_G == rec.m_Ge + rec.m_Gv;
    BigInt rhs = (rec.m_Ge_prime << rec.delta_e) + (rec.m_Gv_prime << rec.delta_v);
    rec.congruence_holds = mpz_even_p(BigInt(rec.m_G - rhs).get_mpz_t()) != 0;
    return rec;
}

}  // namespace mpar

#include <algorithm>
#include <map>
#include <set>

#include "dsu.hpp"
#include "matchparity/billiards.hpp"

namespace mpar {

void check_lattice_disk(const GridRegion& r) {
    if (r.size() == 0) throw PreconditionError("empty region");
    if (!is_connected(r.graph())) throw PreconditionError("region is disconnected");
    if (r.cells().empty()) throw PreconditionError("region has no internal face");
    for (auto [a, b] : r.edges()) {
        Point p = r.point(a), q = r.point(b);
        bool ok = p.y == q.y ? (r.has_cell(p) || r.has_cell({p.x, p.y - 1}))
                             : (r.has_cell(p) || r.has_cell({p.x - 1, p.y}));
        if (!ok)
            throw PreconditionError("edge " + to_string(p) + "-" + to_string(q) +
                                    " borders no internal face");
    }
    for (Point p : r.points()) {
        bool ur = r.has_cell(p), ul = r.has_cell({p.x - 1, p.y});
        bool ll = r.has_cell({p.x - 1, p.y - 1}), lr = r.has_cell({p.x, p.y - 1});
        if ((ur && ll && !ul && !lr) || (ul && lr && !ur && !ll))
            throw PreconditionError("pinched vertex " + to_string(p));
    }
    long v = static_cast<long>(r.size());
    long e = static_cast<long>(r.edge_count());
    long f = static_cast<long>(r.cells().size());
    if (v - e + f != 1) {
        GridFaces gf = grid_faces(r);
        for (std::size_t i = 0; i < gf.faces.faces.size(); ++i)
            if (static_cast<int>(i) != gf.faces.external && !gf.cell[i])
                throw PreconditionError(
                    "bounded face at " + to_string(r.point(gf.faces.faces[i][0].first)) +
                    " is not a unit square (hole)");
        throw PreconditionError("region boundary is not a simple cycle");
    }
}

namespace {

struct Entry {
    Point p;
    int bp;  // y - x
    int bm;  // y + x
    std::size_t id;
};

std::vector<Entry> external_black(const GridRegion& r) {
    std::vector<Entry> out;
    for (Point p : r.points()) {
        if (GridRegion::color(p) != Color::Black) continue;
        bool internal = r.has_cell(p) && r.has_cell({p.x - 1, p.y}) &&
                        r.has_cell({p.x, p.y - 1}) && r.has_cell({p.x - 1, p.y - 1});
        if (!internal) out.push_back({p, p.y - p.x, p.y + p.x, out.size()});
    }
    return out;
}

// Calls link(a, b) for each consecutive pair joined by a diagonal run of cells.
template <class Link>
void sweep_tables(const GridRegion& r, std::vector<Entry> es, Link link) {
    std::sort(es.begin(), es.end(), [](const Entry& a, const Entry& b) {
        return a.bp != b.bp ? a.bp < b.bp : a.bm < b.bm;
    });
    for (std::size_t k = 0; k < es.size(); ++k) {
        if (k + 1 < es.size() && es[k].bp == es[k + 1].bp && es[k].bm == es[k + 1].bm)
            throw std::logic_error("duplicate (b+, b-) key");
        if (!r.has_cell(es[k].p)) continue;
        if (k + 1 == es.size() || es[k + 1].bp != es[k].bp)
            throw std::logic_error("diagonal run from " + to_string(es[k].p) + " has no end");
        link(es[k], es[k + 1], true);
    }
    std::sort(es.begin(), es.end(), [](const Entry& a, const Entry& b) {
        return a.bm != b.bm ? a.bm < b.bm : a.bp < b.bp;
    });
    for (std::size_t k = 0; k < es.size(); ++k) {
        if (!r.has_cell({es[k].p.x - 1, es[k].p.y})) continue;
        if (k + 1 == es.size() || es[k + 1].bm != es[k].bm)
            throw std::logic_error("anti-diagonal run from " + to_string(es[k].p) +
                                   " has no end");
        link(es[k], es[k + 1], false);
    }
}

}  // namespace

FastPathResult fast_path_basis(const GridRegion& r) {
    check_lattice_disk(r);
    auto es = external_black(r);
    detail::DisjointSets ds(es.size());
    sweep_tables(r, es, [&](const Entry& a, const Entry& b, bool) { ds.unite(a.id, b.id); });
    std::map<std::size_t, std::vector<Point>> groups;
    for (const auto& e : es) groups[ds.find(e.id)].push_back(e.p);
    FastPathResult out;
    for (auto& [_, ps] : groups) out.classes.push_back(std::move(ps));
    out.components = out.classes.size();
    return out;
}

std::size_t fast_path_basis_outer(const GridRegion& r) {
    check_lattice_disk(r);
    GridFaces gf = grid_faces(r);
    RotationSystem rot = grid_rotation(r);
    const FaceSet& fs = gf.faces;
    const auto& walk = fs.faces.at(static_cast<std::size_t>(fs.external));
    const std::size_t n = walk.size();

    std::map<int, std::size_t> at_walk;
    for (std::size_t i = 0; i < n; ++i)
        if (!at_walk.emplace(walk[i].first, i).second)
            throw PreconditionError("boundary revisits vertex " +
                                    to_string(r.point(walk[i].first)));

    // Spokes of the completion sit at odd-degree boundary vertices; ring faces lie between.
    std::vector<std::size_t> spokes;
    for (std::size_t i = 0; i < n; ++i)
        if (r.degree(r.point(walk[i].first)) % 2) spokes.push_back(i);
    const std::size_t t = spokes.size();
    const std::size_t rings = std::max<std::size_t>(t, 1);
    const std::size_t nf = fs.faces.size();
    auto ring = [&](std::size_t k) { return nf + k % rings; };
    auto segment = [&](std::size_t i) -> std::size_t {
        if (t == 0) return 0;
        auto it = std::upper_bound(spokes.begin(), spokes.end(), i);
        return it == spokes.begin() ? t - 1 : static_cast<std::size_t>(it - spokes.begin()) - 1;
    };

    std::map<Point, std::size_t, RowMajor> cell_face;
    for (std::size_t f = 0; f < nf; ++f)
        if (gf.cell[f]) cell_face[*gf.cell[f]] = f;
    auto face_at = [&](Point ll) { return cell_face.at(ll); };

    detail::DisjointSets ds(nf + rings);
    std::set<std::size_t> nodes;
    for (std::size_t k = 0; k < rings; ++k) nodes.insert(ring(k));

    auto es = external_black(r);
    for (const auto& e : es) {
        int v = r.index(e.p);
        std::size_t i = at_walk.at(v);
        int prev = walk[(i + n - 1) % n].first;
        const auto& order = rot.order.at(v);
        auto slots = fs.around(rot, v);
        std::size_t j0 = static_cast<std::size_t>(
            std::find(order.begin(), order.end(), prev) - order.begin());
        std::vector<std::size_t> around;
        for (std::size_t s = 0; s + 1 < slots.size(); ++s) {
            int f = slots[(j0 + s) % slots.size()];
            if (f == fs.external || !gf.cell[static_cast<std::size_t>(f)])
                throw std::logic_error("unexpected face order at " + to_string(e.p));
            around.push_back(static_cast<std::size_t>(f));
        }
        if (slots[(j0 + slots.size() - 1) % slots.size()] != fs.external)
            throw std::logic_error("external sector misplaced at " + to_string(e.p));
        auto sp = std::lower_bound(spokes.begin(), spokes.end(), i);
        if (sp != spokes.end() && *sp == i) {
            std::size_t k = static_cast<std::size_t>(sp - spokes.begin());
            around.push_back(ring(k));
            around.push_back(ring(k + t - 1));
        } else {
            around.push_back(ring(segment(i)));
        }
        if (around.size() % 2) throw std::logic_error("odd completed degree at " + to_string(e.p));
        for (std::size_t s = 0; s < around.size(); ++s) {
            nodes.insert(around[s]);
            ds.unite(around[s], around[(s + 2) % around.size()]);
        }
    }
    // Black vertices of Y sit opposite white spoke vertices and join the rings beside them.
    for (std::size_t k = 0; k < t; ++k)
        if (GridRegion::color(r.point(walk[spokes[k]].first)) == Color::White)
            ds.unite(ring(k), ring(k + t - 1));

    sweep_tables(r, es, [&](const Entry& a, const Entry& b, bool diag) {
        if (diag)
            ds.unite(face_at(a.p), face_at({b.p.x - 1, b.p.y - 1}));
        else
            ds.unite(face_at({a.p.x - 1, a.p.y}), face_at({b.p.x, b.p.y - 1}));
    });

    std::set<std::size_t> roots;
    for (auto x : nodes) roots.insert(ds.find(x));
    return roots.size();
}

}  // namespace mpar

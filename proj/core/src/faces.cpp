#include "matchparity/faces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace mpar {

namespace {

std::size_t position(const std::vector<int>& ring, int v, int w) {
    auto it = std::find(ring.begin(), ring.end(), w);
    if (it == ring.end())
        throw PreconditionError("rotation at " + std::to_string(v) + " lacks neighbor " +
                                std::to_string(w));
    return static_cast<std::size_t>(it - ring.begin());
}

}  // namespace

int RotationSystem::next_ccw(int v, int w) const {
    const auto& ring = order.at(v);
    return ring[(position(ring, v, w) + 1) % ring.size()];
}

int RotationSystem::prev_ccw(int v, int w) const {
    const auto& ring = order.at(v);
    return ring[(position(ring, v, w) + ring.size() - 1) % ring.size()];
}

void check_rotation(const Graph& g, const RotationSystem& rot) {
    for (int v : g.vertices()) {
        auto it = rot.order.find(v);
        std::vector<int> ring = it == rot.order.end() ? std::vector<int>{} : it->second;
        std::vector<int> sorted = ring;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> nbrs;
        for (auto [w, m] : g.neighbors(v)) {
            if (m != 1)
                throw UnsupportedInput("rotation systems require a simple graph; edge " +
                                       g.name(v) + "-" + g.name(w) + " is parallel");
            nbrs.push_back(w);
        }
        if (sorted != nbrs)
            throw PreconditionError("rotation at " + g.name(v) + " does not list its neighbors");
    }
    if (g.edge_count() > 0) {
        if (!rot.outer) throw PreconditionError("rotation system has no outer dart");
        if (g.multiplicity(rot.outer->first, rot.outer->second) == 0)
            throw PreconditionError("outer dart is not an edge");
    }
}

FaceSet trace_faces(const Graph& g, const RotationSystem& rot) {
    check_rotation(g, rot);
    FaceSet fs;
    for (int u : g.vertices()) {
        for (int v : rot.order.count(u) ? rot.order.at(u) : std::vector<int>{}) {
            Dart start{u, v};
            if (fs.face_of.count(start)) continue;
            int id = static_cast<int>(fs.faces.size());
            std::vector<Dart> walk;
            Dart d = start;
            do {
                fs.face_of[d] = id;
                walk.push_back(d);
                int w = rot.prev_ccw(d.second, d.first);
                d = {d.second, w};
            } while (d != start);
            fs.faces.push_back(std::move(walk));
        }
    }
    if (rot.outer) fs.external = fs.face_of.at(*rot.outer);
    return fs;
}

std::vector<int> FaceSet::internal() const {
    std::vector<int> out;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
        if (f != external) out.push_back(f);
    return out;
}

std::vector<int> FaceSet::walk(int f) const {
    std::vector<int> out;
    for (auto [a, _] : faces.at(static_cast<std::size_t>(f))) out.push_back(a);
    return out;
}

std::vector<int> FaceSet::around(const RotationSystem& rot, int v) const {
    std::vector<int> out;
    auto it = rot.order.find(v);
    if (it == rot.order.end()) return out;
    for (int w : it->second) out.push_back(face_of.at({v, w}));
    return out;
}

std::vector<int> FaceSet::external_vertices() const {
    std::set<int> s;
    if (external >= 0)
        for (auto [a, _] : faces.at(static_cast<std::size_t>(external))) s.insert(a);
    return {s.begin(), s.end()};
}

RotationSystem rotation_from_positions(const Graph& g,
                                       const std::map<int, std::pair<double, double>>& pos) {
    RotationSystem rot;
    auto angle = [&](int v, int w) {
        auto [x0, y0] = pos.at(v);
        auto [x1, y1] = pos.at(w);
        return std::atan2(y1 - y0, x1 - x0);
    };
    for (int v : g.vertices()) {
        auto& ring = rot.order[v];
        for (auto [w, _] : g.neighbors(v)) ring.push_back(w);
        std::sort(ring.begin(), ring.end(),
                  [&](int a, int b) { return angle(v, a) < angle(v, b); });
    }
    int low = -1;
    for (int v : g.vertices()) {
        if (g.neighbors(v).empty()) continue;
        if (low < 0) { low = v; continue; }
        auto [x, y] = pos.at(v);
        auto [bx, by] = pos.at(low);
        if (y < by || (y == by && x < bx)) low = v;
    }
    if (low >= 0) {
        // First neighbor counterclockwise from straight down.
        const double down = -std::numbers::pi / 2;
        int first = -1;
        double best = 0;
        for (int w : rot.order[low]) {
            double a = angle(low, w) - down;
            while (a <= 0) a += 2 * std::numbers::pi;
            if (first < 0 || a < best) {
                first = w;
                best = a;
            }
        }
        rot.outer = Dart{first, low};
    }
    return rot;
}

RotationSystem grid_rotation(const GridRegion& r) {
    RotationSystem rot;
    for (std::size_t i = 0; i < r.size(); ++i) {
        Point p = r.point(static_cast<int>(i));
        auto& ring = rot.order[static_cast<int>(i)];
        for (Point q : {Point{p.x + 1, p.y}, Point{p.x, p.y + 1}, Point{p.x - 1, p.y},
                        Point{p.x, p.y - 1}}) {
            int j = r.index(q);
            if (j >= 0) ring.push_back(j);
        }
    }
    if (r.size() > 0) {
        // Point 0 is bottom-most then left-most: nothing lies below or to its left.
        Point p = r.point(0);
        int east = r.index({p.x + 1, p.y});
        int north = r.index({p.x, p.y + 1});
        if (east >= 0)
            rot.outer = Dart{east, 0};
        else if (north >= 0)
            rot.outer = Dart{north, 0};
    }
    return rot;
}

GridFaces grid_faces(const GridRegion& r) {
    if (!is_connected(r.graph())) throw PreconditionError("region is disconnected");
    GridFaces out;
    Graph g = r.graph();
    out.faces = trace_faces(g, grid_rotation(r));
    for (std::size_t f = 0; f < out.faces.faces.size(); ++f) {
        const auto& walk = out.faces.faces[f];
        std::optional<Point> cell;
        if (static_cast<int>(f) != out.faces.external && walk.size() == 4) {
            Point ll = r.point(walk[0].first);
            for (auto [a, _] : walk) {
                Point p = r.point(a);
                if (p.y < ll.y || (p.y == ll.y && p.x < ll.x)) ll = p;
            }
            if (r.has_cell(ll)) cell = ll;
        }
        out.cell.push_back(cell);
    }
    return out;
}

}  // namespace mpar

#include "matchparity/generators.hpp"

#include <algorithm>
#include <set>

namespace mpar {

namespace {

using Cells = std::set<Point, RowMajor>;

GridRegion from_cells(const Cells& cells) {
    std::vector<Point> pts;
    for (Point c : cells)
        for (Point d : {Point{0, 0}, Point{1, 0}, Point{0, 1}, Point{1, 1}}) pts.push_back(c + d);
    return GridRegion(std::move(pts));
}

// Cells of the bounding box not reachable from outside it through empty cells.
void fill_holes(Cells& cells) {
    int x0 = cells.begin()->x, x1 = x0, y0 = cells.begin()->y, y1 = y0;
    for (Point c : cells) {
        x0 = std::min(x0, c.x);
        x1 = std::max(x1, c.x);
        y0 = std::min(y0, c.y);
        y1 = std::max(y1, c.y);
    }
    Cells outside;
    std::vector<Point> stack{{x0 - 1, y0 - 1}};
    outside.insert(stack.back());
    while (!stack.empty()) {
        Point p = stack.back();
        stack.pop_back();
        for (Point d : {Point{1, 0}, Point{-1, 0}, Point{0, 1}, Point{0, -1}}) {
            Point q = p + d;
            if (q.x < x0 - 1 || q.x > x1 + 1 || q.y < y0 - 1 || q.y > y1 + 1) continue;
            if (cells.count(q) || outside.count(q)) continue;
            outside.insert(q);
            stack.push_back(q);
        }
    }
    for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x)
            if (!outside.count({x, y})) cells.insert({x, y});
}

// Adds one cell that repairs a defect; false when the region is already clean.
bool repair(Cells& cells, Rng& rng) {
    GridRegion r = from_cells(cells);
    for (Point p : r.points()) {
        bool ur = cells.count(p), ul = cells.count({p.x - 1, p.y});
        bool ll = cells.count({p.x - 1, p.y - 1}), lr = cells.count({p.x, p.y - 1});
        if (ur && ll && !ul && !lr) {
            cells.insert(rng() % 2 ? Point{p.x - 1, p.y} : Point{p.x, p.y - 1});
            return true;
        }
        if (ul && lr && !ur && !ll) {
            cells.insert(rng() % 2 ? p : Point{p.x - 1, p.y - 1});
            return true;
        }
    }
    for (auto [a, b] : r.edges()) {
        Point p = r.point(a), q = r.point(b);
        Point c1 = p, c2 = p.y == q.y ? Point{p.x, p.y - 1} : Point{p.x - 1, p.y};
        if (!cells.count(c1) && !cells.count(c2)) {
            cells.insert(rng() % 2 ? c1 : c2);
            return true;
        }
    }
    return false;
}

}  // namespace

GridRegion random_lattice_disk(Rng& rng, int cells, int max_side) {
    if (cells < 1 || max_side < 1) throw PreconditionError("need a positive cell budget");
    Cells cs{{0, 0}};
    std::vector<Point> list{{0, 0}};
    const Point dirs[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    int guard = 0;
    while (static_cast<int>(cs.size()) < cells && guard++ < 50 * cells) {
        Point c = list[rng() % list.size()] + dirs[rng() % 4];
        if (c.x < 0 || c.y < 0 || c.x >= max_side || c.y >= max_side) continue;
        if (cs.insert(c).second) list.push_back(c);
    }
    for (int round = 0;; ++round) {
        if (round > 100 * cells + 1000) throw std::logic_error("disk repair did not settle");
        fill_holes(cs);
        if (!repair(cs, rng)) break;
    }
    return from_cells(cs);
}

GridRegion random_point_region(Rng& rng, int w, int h, double density) {
    std::bernoulli_distribution keep(density);
    std::vector<Point> pts;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (keep(rng)) pts.push_back({x, y});
    if (pts.empty()) pts.push_back({0, 0});
    return GridRegion(std::move(pts));
}

Graph random_multigraph(Rng& rng, int n, int m, bool colored) {
    if (n < 2) throw PreconditionError("need at least two vertices");
    Graph g;
    std::vector<Color> side;
    for (int i = 0; i < n; ++i) {
        Color c = i == 0 ? Color::Black : i == 1 ? Color::White
                                                 : (rng() % 2 ? Color::Black : Color::White);
        side.push_back(c);
        if (colored) g.add_vertex(c);
        else g.add_vertex();
    }
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int added = 0, guard = 0; added < m && guard < 100 * (m + 1); ++guard) {
        int u = pick(rng), v = pick(rng);
        if (u == v || (colored && side[static_cast<std::size_t>(u)] == side[static_cast<std::size_t>(v)]))
            continue;
        g.add_edge(u, v);
        ++added;
    }
    return g;
}

Graph random_bipartite(Rng& rng, int blacks, int whites, double p) {
    Graph g;
    for (int i = 0; i < blacks; ++i) g.add_vertex(Color::Black);
    for (int j = 0; j < whites; ++j) g.add_vertex(Color::White);
    std::bernoulli_distribution edge(p);
    for (int i = 0; i < blacks; ++i)
        for (int j = 0; j < whites; ++j)
            if (edge(rng)) g.add_edge(i, blacks + j);
    return g;
}

IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    std::uniform_int_distribution<long> pick(lo, hi);
    IntMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a(i, j) = pick(rng);
    return a;
}

}  // namespace mpar

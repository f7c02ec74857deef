#pragma once

#include <matchparity/faces.hpp>
#include <matchparity/graph.hpp>
#include <matchparity/matching.hpp>
#include <matchparity/region.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fixtures {

using mpar::Color;
using mpar::Graph;
using mpar::GridRegion;
using mpar::Point;

inline GridRegion box(int x0, int x1, int y0, int y1, std::vector<Point> extra = {}) {
    for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x) extra.push_back({x, y});
    return GridRegion(std::move(extra));
}

inline GridRegion merge(const GridRegion& a, const GridRegion& b) {
    std::vector<Point> pts = a.points();
    pts.insert(pts.end(), b.points().begin(), b.points().end());
    return GridRegion(std::move(pts));
}

// 5 x 4 block plus a column of four on the right: 24 vertices, 15 cells.
inline GridRegion notched_block() { return merge(box(0, 3, 0, 4), box(4, 4, 1, 4)); }

// 6 x 4 block with a 4 x 2 block beside its lower half.
inline GridRegion l_shape() { return merge(box(0, 3, 0, 5), box(4, 5, 0, 3)); }

// Six vertices a..f, not bipartite, two independent channels.
inline Graph six_vertex_example() {
    Graph g;
    for (const char* s : {"a", "b", "c", "d", "e", "f"}) g.add_vertex(std::nullopt, s);
    for (auto [u, v] : std::vector<std::pair<int, int>>{
             {0, 2}, {2, 3}, {3, 0}, {0, 1}, {1, 2}, {1, 5}, {4, 5}, {5, 3}})
        g.add_edge(u, v);
    return g;
}

inline Graph cube() {
    Graph g;
    for (int i = 0; i < 8; ++i)
        g.add_vertex(__builtin_popcount(static_cast<unsigned>(i)) % 2 ? Color::White : Color::Black);
    for (int i = 0; i < 8; ++i)
        for (int b = 1; b < 8; b <<= 1)
            if (i < (i ^ b)) g.add_edge(i, i ^ b);
    return g;
}

struct Placed {
    Graph g;
    std::map<int, std::pair<double, double>> pos;
};

// Two unit squares joined by a two-edge bridge with a stem at its middle vertex.
inline Placed dumbbell() {
    Placed p;
    std::map<std::pair<int, int>, int> id;
    auto v = [&](int x, int y) {
        auto [it, fresh] = id.emplace(std::pair{x, y}, 0);
        if (fresh) {
            it->second = p.g.add_vertex((x + y) % 2 ? Color::White : Color::Black);
            p.pos[it->second] = {x, y};
        }
        return it->second;
    };
    auto e = [&](int x0, int y0, int x1, int y1) { p.g.add_edge(v(x0, y0), v(x1, y1)); };
    e(0, 0, 1, 0), e(1, 0, 1, 1), e(1, 1, 0, 1), e(0, 1, 0, 0);
    e(3, 0, 4, 0), e(4, 0, 4, 1), e(4, 1, 3, 1), e(3, 1, 3, 0);
    e(1, 1, 2, 1), e(2, 1, 3, 1), e(2, 1, 2, 2);
    return p;
}

// Host, channel and matching for a 14-vertex cycle-flip walk on R_{4x9}.
struct FlipExample {
    GridRegion host = GridRegion::rectangle(4, 9);
    std::vector<Point> channel{{0, 1}, {1, 0}, {2, 3}, {3, 2}, {0, 3}, {3, 0},
                               {7, 0}, {8, 1}, {5, 2}, {6, 3}, {8, 3}, {5, 0}};
    Point v0{3, 0};
    std::vector<std::pair<Point, Point>> matching{
        {{3, 1}, {3, 2}}, {{4, 1}, {4, 2}}, {{3, 3}, {4, 3}}, {{7, 1}, {7, 2}},
        {{0, 0}, {0, 1}}, {{1, 0}, {2, 0}}, {{1, 1}, {2, 1}}, {{2, 2}, {2, 3}},
        {{0, 2}, {1, 2}}, {{0, 3}, {1, 3}}, {{6, 2}, {6, 1}}, {{3, 0}, {4, 0}},
        {{5, 0}, {6, 0}}, {{7, 0}, {8, 0}}, {{8, 1}, {8, 2}}, {{8, 3}, {7, 3}},
        {{5, 3}, {6, 3}}, {{5, 1}, {5, 2}}};

    mpar::Matching mu() const {
        mpar::Matching m;
        for (auto [p, q] : matching) {
            int a = host.index(p), b = host.index(q);
            m.push_back({std::min(a, b), std::max(a, b), 0});
        }
        std::sort(m.begin(), m.end());
        return m;
    }
    std::vector<int> channel_ids() const {
        std::vector<int> out;
        for (Point p : channel) out.push_back(host.index(p));
        std::sort(out.begin(), out.end());
        return out;
    }
    // Boundary of the block x 5..8, y 0..3.
    std::vector<std::pair<Point, Point>> expected_cycle() const {
        std::vector<std::pair<Point, Point>> out;
        for (int x = 5; x < 8; ++x) out.push_back({{x, 0}, {x + 1, 0}}), out.push_back({{x, 3}, {x + 1, 3}});
        for (int y = 0; y < 3; ++y) out.push_back({{5, y}, {5, y + 1}}), out.push_back({{8, y}, {8, y + 1}});
        return out;
    }
};

}  // namespace fixtures

#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "matchparity/graph.hpp"

namespace mpar {

struct Point {
    int x = 0;
    int y = 0;
    bool operator==(const Point&) const = default;
    Point operator+(Point o) const { return {x + o.x, y + o.y}; }
    Point operator-(Point o) const { return {x - o.x, y - o.y}; }
};

// Row-major: bottom row first, left to right.
struct RowMajor {
    bool operator()(Point a, Point b) const {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    }
};

std::string to_string(Point p);

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line, int column);
    int line;
    int column;
};

// Finite set of lattice points; edges are all unit-distance pairs.
class GridRegion {
public:
    GridRegion() = default;
    explicit GridRegion(std::vector<Point> pts);

    static GridRegion rectangle(int rows, int cols);
    static Color color(Point p) { return ((p.x + p.y) % 2 == 0) ? Color::Black : Color::White; }

    const std::vector<Point>& points() const { return pts_; }
    std::size_t size() const { return pts_.size(); }
    bool contains(Point p) const { return index_.count(p) != 0; }
    int index(Point p) const;
    Point point(int i) const { return pts_.at(static_cast<std::size_t>(i)); }

    std::vector<std::pair<int, int>> edges() const;
    std::size_t edge_count() const { return edges().size(); }
    bool has_cell(Point lower_left) const;
    std::vector<Point> cells() const;
    int degree(Point p) const;

    // Vertex ids are row-major indices; labels are "(x,y)".
    Graph graph() const;
    GridRegion translated(Point by) const;
    GridRegion normalized() const;
    std::string to_text() const;

    bool operator==(const GridRegion& o) const { return pts_ == o.pts_; }

private:
    std::vector<Point> pts_;
    std::map<Point, int, RowMajor> index_;
};

GridRegion from_region_file(std::string_view text);
std::string to_region_file(const GridRegion& r);

struct VertexClasses {
    std::vector<Point> internal;
    std::vector<Point> external;
};

VertexClasses classify_vertices(const GridRegion& r);
GridRegion inner_region(const GridRegion& r);
bool outer_subgraph_is_simple_cycle(const GridRegion& r);

// Induced subgraph on the given internal vertices, coloring inherited.
Graph inner_subgraph(const Graph& g, const std::vector<int>& internal);
bool outer_subgraph_is_simple_cycle(const Graph& g, const std::vector<int>& external);

GridRegion aztec_diamond(int n);

}  // namespace mpar

#include "matchparity/region.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace mpar {

std::string to_string(Point p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

ParseError::ParseError(const std::string& what, int l, int c)
    : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " +
                         what),
      line(l),
      column(c) {}

GridRegion::GridRegion(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), RowMajor{});
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    pts_ = std::move(pts);
    for (std::size_t i = 0; i < pts_.size(); ++i) index_[pts_[i]] = static_cast<int>(i);
}

GridRegion GridRegion::rectangle(int rows, int cols) {
    std::vector<Point> pts;
    for (int y = 0; y < rows; ++y)
        for (int x = 0; x < cols; ++x) pts.push_back({x, y});
    return GridRegion(std::move(pts));
}

int GridRegion::index(Point p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

std::vector<std::pair<int, int>> GridRegion::edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < pts_.size(); ++i) {
        Point p = pts_[i];
        for (Point q : {Point{p.x + 1, p.y}, Point{p.x, p.y + 1}}) {
            int j = index(q);
            if (j >= 0) out.emplace_back(static_cast<int>(i), j);
        }
    }
    return out;
}

bool GridRegion::has_cell(Point p) const {
    return contains(p) && contains({p.x + 1, p.y}) && contains({p.x, p.y + 1}) &&
           contains({p.x + 1, p.y + 1});
}

std::vector<Point> GridRegion::cells() const {
    std::vector<Point> out;
    for (Point p : pts_)
        if (has_cell(p)) out.push_back(p);
    std::sort(out.begin(), out.end(),
              [](Point a, Point b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
    return out;
}

int GridRegion::degree(Point p) const {
    int d = 0;
    for (Point q : {Point{p.x + 1, p.y}, Point{p.x, p.y + 1}, Point{p.x - 1, p.y},
                    Point{p.x, p.y - 1}})
        d += contains(q);
    return d;
}

Graph GridRegion::graph() const {
    Graph g;
    for (Point p : pts_) g.add_vertex(color(p), to_string(p));
    for (auto [a, b] : edges()) g.add_edge(a, b);
    return g;
}

GridRegion GridRegion::translated(Point by) const {
    std::vector<Point> pts;
    for (Point p : pts_) pts.push_back(p + by);
    return GridRegion(std::move(pts));
}

GridRegion GridRegion::normalized() const {
    if (pts_.empty()) return *this;
    int mx = pts_[0].x, my = pts_[0].y;
    for (Point p : pts_) {
        mx = std::min(mx, p.x);
        my = std::min(my, p.y);
    }
    return translated({-mx, -my});
}

std::string GridRegion::to_text() const { return to_region_file(*this); }

GridRegion from_region_file(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    const int L = static_cast<int>(lines.size());
    std::vector<Point> pts;
    for (int r = 0; r < L; ++r) {
        std::string_view line = lines[static_cast<std::size_t>(r)];
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        for (std::size_t c = 0; c < line.size(); ++c) {
            char ch = line[c];
            if (ch == '#')
                pts.push_back({static_cast<int>(c), L - 1 - r});
            else if (ch != '.')
                throw ParseError(std::string("illegal character '") + ch + "'", r + 1,
                                 static_cast<int>(c) + 1);
        }
    }
    if (pts.empty()) throw ParseError("region contains no '#' cells", L == 0 ? 1 : L, 1);
    return GridRegion(std::move(pts));
}

std::string to_region_file(const GridRegion& r) {
    if (r.size() == 0) return {};
    const auto& pts = r.points();
    int x0 = pts[0].x, x1 = pts[0].x, y0 = pts[0].y, y1 = pts[0].y;
    for (Point p : pts) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    std::string out;
    for (int y = y1; y >= y0; --y) {
        for (int x = x0; x <= x1; ++x) out += r.contains({x, y}) ? '#' : '.';
        if (y != y0) out += '\n';
    }
    return out;
}

VertexClasses classify_vertices(const GridRegion& r) {
    if (!is_connected(r.graph()))
        throw PreconditionError("region is disconnected; vertex classification is ambiguous");
    VertexClasses out;
    for (Point p : r.points()) {
        bool internal = r.has_cell(p) && r.has_cell({p.x - 1, p.y}) &&
                        r.has_cell({p.x, p.y - 1}) && r.has_cell({p.x - 1, p.y - 1});
        (internal ? out.internal : out.external).push_back(p);
    }
    return out;
}

GridRegion inner_region(const GridRegion& r) { return GridRegion(classify_vertices(r).internal); }

bool outer_subgraph_is_simple_cycle(const GridRegion& r) {
    auto cls = classify_vertices(r);
    Graph g = r.graph();
    std::vector<int> ext;
    for (Point p : cls.external) ext.push_back(r.index(p));
    return outer_subgraph_is_simple_cycle(g, ext);
}

Graph inner_subgraph(const Graph& g, const std::vector<int>& internal) {
    return g.induced(internal);
}

bool outer_subgraph_is_simple_cycle(const Graph& g, const std::vector<int>& external) {
    if (external.size() < 3) return false;
    Graph h = g.induced(external);
    for (int v : h.vertices())
        if (h.degree(v) != 2 || h.neighbors(v).size() != 2) return false;
    return is_connected(h);
}

GridRegion aztec_diamond(int n) {
    if (n < 1) throw PreconditionError("Aztec diamond order must be positive");
    std::vector<Point> pts;
    for (int y = -n + 1; y <= n; ++y)
        for (int x = -n + 1; x <= n; ++x)
            if (std::abs(2 * x - 1) + std::abs(2 * y - 1) <= 2 * n) pts.push_back({x, y});
    return GridRegion(std::move(pts));
}

}  // namespace mpar

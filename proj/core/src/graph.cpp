#include "matchparity/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace mpar {

const char* color_name(Color c) { return c == Color::Black ? "B" : "W"; }

Graph::Graph(int n) {
    for (int i = 0; i < n; ++i) add_vertex_with_id(i);
}

int Graph::add_vertex(std::optional<Color> color, std::string label) {
    int id = verts_.empty() ? 0 : verts_.rbegin()->first + 1;
    add_vertex_with_id(id, color, std::move(label));
    return id;
}

void Graph::add_vertex_with_id(int id, std::optional<Color> color, std::string label) {
    if (verts_.count(id)) throw PreconditionError("duplicate vertex id " + std::to_string(id));
    verts_[id] = Vertex{{}, color, std::move(label)};
}

const Graph::Vertex& Graph::at(int v) const {
    auto it = verts_.find(v);
    if (it == verts_.end()) throw PreconditionError("unknown vertex " + std::to_string(v));
    return it->second;
}

Graph::Vertex& Graph::at(int v) {
    auto it = verts_.find(v);
    if (it == verts_.end()) throw PreconditionError("unknown vertex " + std::to_string(v));
    return it->second;
}

void Graph::add_edge(int u, int v, int mult) {
    if (u == v) throw PreconditionError("self-loop at " + std::to_string(u));
    if (mult <= 0) throw PreconditionError("edge multiplicity must be positive");
    auto& a = at(u);
    auto& b = at(v);
    if (a.color && b.color && *a.color == *b.color)
        throw PreconditionError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                " joins two vertices of the same color");
    a.nbr[v] += mult;
    b.nbr[u] += mult;
    edges_ += static_cast<std::size_t>(mult);
}

void Graph::remove_edge(int u, int v, int mult) {
    auto& a = at(u);
    auto it = a.nbr.find(v);
    if (it == a.nbr.end() || it->second < mult)
        throw PreconditionError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                " not present with multiplicity " + std::to_string(mult));
    auto& b = at(v);
    if ((it->second -= mult) == 0) a.nbr.erase(it);
    if ((b.nbr[u] -= mult) == 0) b.nbr.erase(u);
    edges_ -= static_cast<std::size_t>(mult);
}

void Graph::remove_vertex(int v) {
    auto& a = at(v);
    for (auto [w, m] : a.nbr) {
        verts_.at(w).nbr.erase(v);
        edges_ -= static_cast<std::size_t>(m);
    }
    verts_.erase(v);
}

std::vector<int> Graph::vertices() const {
    std::vector<int> out;
    out.reserve(verts_.size());
    for (const auto& [id, _] : verts_) out.push_back(id);
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (const auto& [u, vx] : verts_)
        for (auto [v, m] : vx.nbr)
            if (u < v) out.push_back({u, v, m});
    return out;
}

const std::map<int, int>& Graph::neighbors(int v) const { return at(v).nbr; }

int Graph::degree(int v) const {
    int d = 0;
    for (auto [_, m] : at(v).nbr) d += m;
    return d;
}

int Graph::multiplicity(int u, int v) const {
    const auto& n = at(u).nbr;
    auto it = n.find(v);
    return it == n.end() ? 0 : it->second;
}

bool Graph::colored() const {
    return std::all_of(verts_.begin(), verts_.end(),
                       [](const auto& kv) { return kv.second.color.has_value(); });
}

std::optional<Color> Graph::color(int v) const { return at(v).color; }

Color Graph::color_of(int v) const {
    auto c = at(v).color;
    if (!c) throw PreconditionError("vertex " + name(v) + " has no color");
    return *c;
}

void Graph::set_color(int v, Color c) { at(v).color = c; }

std::vector<int> Graph::vertices_of(Color c) const {
    std::vector<int> out;
    for (const auto& [id, vx] : verts_) {
        if (!vx.color) throw PreconditionError("graph is not colored");
        if (*vx.color == c) out.push_back(id);
    }
    return out;
}

const std::string& Graph::label(int v) const { return at(v).label; }
void Graph::set_label(int v, std::string label) { at(v).label = std::move(label); }

std::string Graph::name(int v) const {
    const auto& l = at(v).label;
    return l.empty() ? std::to_string(v) : l;
}

Graph Graph::induced(const std::vector<int>& keep) const {
    std::set<int> k(keep.begin(), keep.end());
    Graph h;
    for (int v : k) {
        const auto& vx = at(v);
        h.add_vertex_with_id(v, vx.color, vx.label);
    }
    for (int u : k)
        for (auto [v, m] : at(u).nbr)
            if (u < v && k.count(v)) h.add_edge(u, v, m);
    return h;
}

Graph Graph::without(const std::vector<int>& drop) const {
    std::set<int> d(drop.begin(), drop.end());
    std::vector<int> keep;
    for (const auto& [id, _] : verts_)
        if (!d.count(id)) keep.push_back(id);
    return induced(keep);
}

std::map<int, int> Graph::index_map() const {
    std::map<int, int> out;
    int i = 0;
    for (const auto& [id, _] : verts_) out[id] = i++;
    return out;
}

std::uint64_t Graph::fingerprint() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    for (const auto& [id, vx] : verts_) {
        mix(static_cast<std::uint64_t>(id));
        mix(vx.color ? static_cast<std::uint64_t>(*vx.color) + 1 : 0);
    }
    mix(0xfeedull);
    for (const auto& e : edges()) {
        mix(static_cast<std::uint64_t>(e.u));
        mix(static_cast<std::uint64_t>(e.v));
        mix(static_cast<std::uint64_t>(e.mult));
    }
    return h;
}

bool Graph::operator==(const Graph& o) const {
    if (verts_.size() != o.verts_.size() || edges_ != o.edges_) return false;
    auto a = verts_.begin();
    auto b = o.verts_.begin();
    for (; a != verts_.end(); ++a, ++b)
        if (a->first != b->first || a->second.color != b->second.color ||
            a->second.nbr != b->second.nbr)
            return false;
    return true;
}

void check_coloring(const Graph& g) {
    if (!g.colored()) throw PreconditionError("graph is not colored");
    for (const auto& e : g.edges())
        if (g.color_of(e.u) == g.color_of(e.v))
            throw PreconditionError("monochromatic edge " + g.name(e.u) + "-" + g.name(e.v));
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::set<int> seen;
    for (int s : g.vertices()) {
        if (seen.count(s)) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen.insert(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (auto [w, _] : g.neighbors(v))
                if (seen.insert(w).second) q.push(w);
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

Graph complete_bipartite(int a, int b) {
    Graph g;
    for (int i = 0; i < a; ++i) g.add_vertex(Color::Black);
    for (int j = 0; j < b; ++j) g.add_vertex(Color::White);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph cycle_graph(int n, bool colored) {
    if (colored && n % 2) throw PreconditionError("odd cycle cannot be 2-colored");
    Graph g;
    for (int i = 0; i < n; ++i)
        g.add_vertex(colored ? std::optional<Color>(i % 2 ? Color::White : Color::Black)
                             : std::nullopt);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n, bool colored) {
    Graph g;
    for (int i = 0; i < n; ++i)
        g.add_vertex(colored ? std::optional<Color>(i % 2 ? Color::White : Color::Black)
                             : std::nullopt);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

}  // namespace mpar

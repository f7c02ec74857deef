#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpar {

enum class Color : std::uint8_t { Black, White };

inline Color opposite(Color c) { return c == Color::Black ? Color::White : Color::Black; }
const char* color_name(Color c);

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnsupportedInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Edge {
    int u;
    int v;
    int mult;
    bool operator==(const Edge&) const = default;
};

// Undirected multigraph with stable, ordered integer vertex ids.
// Parallel edges are stored as a multiplicity; self-loops are rejected.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int add_vertex(std::optional<Color> color = std::nullopt, std::string label = {});
    void add_vertex_with_id(int id, std::optional<Color> color = std::nullopt,
                            std::string label = {});
    void add_edge(int u, int v, int mult = 1);
    void remove_edge(int u, int v, int mult = 1);
    void remove_vertex(int v);

    bool has_vertex(int v) const { return verts_.count(v) != 0; }
    std::size_t vertex_count() const { return verts_.size(); }
    std::size_t edge_count() const { return edges_; }
    std::vector<int> vertices() const;
    std::vector<Edge> edges() const;

    const std::map<int, int>& neighbors(int v) const;
    int degree(int v) const;
    int multiplicity(int u, int v) const;

    bool colored() const;
    std::optional<Color> color(int v) const;
    Color color_of(int v) const;
    void set_color(int v, Color c);
    std::vector<int> vertices_of(Color c) const;

    const std::string& label(int v) const;
    void set_label(int v, std::string label);
    std::string name(int v) const;

    Graph induced(const std::vector<int>& keep) const;
    Graph without(const std::vector<int>& drop) const;

    // Position of v in ascending id order.
    std::map<int, int> index_map() const;
    std::uint64_t fingerprint() const;

    bool operator==(const Graph& o) const;

private:
    struct Vertex {
        std::map<int, int> nbr;
        std::optional<Color> color;
        std::string label;
    };
    const Vertex& at(int v) const;
    Vertex& at(int v);

    std::map<int, Vertex> verts_;
    std::size_t edges_ = 0;
};

// Wraps a graph with a bipartition; throws if an edge is monochromatic.
void check_coloring(const Graph& g);
bool is_connected(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);

Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n, bool colored = true);
Graph path_graph(int n, bool colored = true);

}  // namespace mpar

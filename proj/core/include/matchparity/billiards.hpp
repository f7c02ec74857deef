#pragma once

#include <optional>
#include <vector>

#include "matchparity/channels.hpp"
#include "matchparity/faces.hpp"
#include "matchparity/graph.hpp"
#include "matchparity/matching.hpp"
#include "matchparity/region.hpp"

namespace mpar {

// Connected plane bipartite graph with traced faces.
struct BilliardHost {
    Graph g;
    RotationSystem rot;
    FaceSet faces;
    std::vector<int> internal_vertices;
    std::vector<int> external_vertices;
    std::vector<std::optional<Point>> cell;  // grid hosts only

    static BilliardHost from_region(const GridRegion& r);
    static BilliardHost from_graph(Graph g, RotationSystem rot);

    std::vector<int> internal_faces() const { return faces.internal(); }
    bool is_internal(int v) const;
    Graph inner() const { return g.induced(internal_vertices); }
};

bool is_inner_semi_eulerian(const BilliardHost& h);
// Throws UnsupportedInput when an internal black vertex meets one face twice.
void check_pinches(const BilliardHost& h);

bool validate_nest(const BilliardHost& h, const std::vector<int>& nest);

struct BilliardPathBasis {
    std::vector<std::vector<int>> paths;  // face ids, each sorted; ordered by first face
    std::size_t size() const { return paths.size(); }
    std::vector<std::pair<int, int>> links;  // G_B edges, for drawing
};

BilliardPathBasis path_basis(const BilliardHost& h);
BilliardPathBasis path_basis(const Graph& g, const RotationSystem& rot);

// ch: black internal vertices meeting exactly half of their faces in the nest.
Channel nest_to_channel(const BilliardHost& h, const std::vector<int>& nest);

bool bounce_check(const BilliardHost& h);

// Throws PreconditionError naming the offending edge, vertex or face unless the
// region is a lattice disk: connected, every edge on a cell, no pinch, no hole.
void check_lattice_disk(const GridRegion& r);

struct FastPathResult {
    std::size_t components = 0;
    std::vector<std::vector<Point>> classes;  // external black vertices per component
};

FastPathResult fast_path_basis(const GridRegion& r);
std::size_t fast_path_basis_outer(const GridRegion& r);

struct Completion {
    Graph g;
    RotationSystem rot;
    std::vector<int> cycle;  // Y, in walk order
};

Completion outer_completion(const Graph& h, const RotationSystem& rot);

struct RectangleFormulas {
    int m = 0, n = 0;
    std::optional<long> path_basis_size;    // R_{m+1 x n+1}
    std::optional<long> black_channel_dim;  // R_{m-1 x n-1}
    std::optional<long> guaranteed_valuation;
    Parity parity = Parity::Even;           // R_{m-1 x n-1}
};

RectangleFormulas rectangle_formulas(int m, int n);

}  // namespace mpar

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matchparity/faces.hpp"
#include "matchparity/graph.hpp"
#include "matchparity/matching.hpp"
#include "matchparity/region.hpp"

namespace mpar {

enum class MoveKind { VC, ED, FV, IsolatedRemoval, DiagonalContraction };
const char* move_name(MoveKind k);

// VC: {v, kept, merged}. ED: {u, w}. FV: {v1, v2}. IsolatedRemoval: {v}.
// DiagonalContraction: {corner, end_degree}, a marker preceding its elementary moves.
struct Move {
    MoveKind kind = MoveKind::VC;
    std::vector<int> args;
    int vertex_delta = 0;
    int edge_delta = 0;
    bool operator==(const Move&) const = default;
};

Graph apply_vc(const Graph& g, int v, Move* record = nullptr);
Graph apply_ed(const Graph& g, int u, int w, Move* record = nullptr);
Graph apply_fv(const Graph& g, int v1, int v2, Move* record = nullptr);
Graph apply_isolated_removal(const Graph& g, int v, Move* record = nullptr);
Graph apply_move(const Graph& g, const Move& m);

struct ReductionTrace {
    Graph initial;
    std::vector<Move> moves;
    Graph terminal;
    int black_delta = 0;  // channel dimension lost to isolated removals, by color
    int white_delta = 0;
    bool fully_reduced() const { return terminal.edge_count() == 0; }
    // dim C(initial) when fully reduced.
    std::optional<std::size_t> dimension() const;
};

Graph replay(const Graph& initial, const std::vector<Move>& moves);

// Applies FV, then ED, then VC, scanning in id order, until none applies.
ReductionTrace reduce(const Graph& g);

// An external vertex of degree at most 2 (minimum id). Requires a connected plane
// graph with at least 2 vertices whose internal vertices and faces have degree >= 4.
int find_low_degree_external(const Graph& g, const RotationSystem& rot);
Point find_low_degree_external(const GridRegion& r);

struct CornerStats {
    std::size_t b = 0;  // external vertices
    double average_degree = 0;
    double bound = 0;   // 3 - 4/b
};
CornerStats corner_stats(const Graph& g, const RotationSystem& rot);
CornerStats corner_stats(const GridRegion& r);

struct PlacedGraph {
    Graph g;
    std::map<int, Point> pos;
};
PlacedGraph placed(const GridRegion& r);
// The lattice region spanned by the positions when the graph is exactly its unit-distance graph.
std::optional<GridRegion> as_region(const PlacedGraph& pg);

struct Contraction {
    PlacedGraph result;
    int delta = 0;
    Color affected = Color::Black;  // color class whose channel dimension drops by delta
    int end_degree = 0;             // degree of the last diagonal vertex in the input
    std::vector<int> diagonal;      // removed vertices, from the corner
    std::vector<Move> moves;        // marker first, then elementary moves
    std::optional<GridRegion> region;
};

Contraction diagonal_contract(const PlacedGraph& pg, int corner);
Contraction diagonal_contract(const GridRegion& r, Point corner);

struct ParityRecord {
    BigInt m_G, m_Ge, m_Gv, m_Ge_prime, m_Gv_prime;
    int delta_e = 0, delta_v = 0;
    Contraction ge, gv;
    bool split_holds = false;       // m_G = m_Ge + m_Gv
    bool congruence_holds = false;  // m_G = 2^de m_Ge' + 2^dv m_Gv' mod 2
};

ParityRecord parity_theorem(const GridRegion& r, const std::vector<Point>& v,
                            std::optional<std::size_t> cap = std::nullopt);

}  // namespace mpar

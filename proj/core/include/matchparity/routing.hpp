#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "matchparity/channels.hpp"
#include "matchparity/graph.hpp"
#include "matchparity/matching.hpp"

namespace mpar {

struct RouteResult {
    Graph reduced;  // g - {b, w}
    ChannelBasis source, target;
    std::vector<Channel> f_images;  // f applied to the source basis
    std::vector<Channel> g_images;  // g applied to the target basis
    bool bijective = false;         // f, g well defined and mutually inverse on both bases
};

// e = (b, w); the witness is a channel of g - e containing b, all of b's color.
RouteResult route_channel(const Graph& g, int b, int w, const Channel& witness);

struct MultiRouteResult {
    Graph reduced;  // g minus every endpoint
    bool strict = false;  // every witness meets the b's exactly in its own b
    Parity parity_g = Parity::Even, parity_reduced = Parity::Even;
    bool parity_equal = false;
    std::size_t dim_g = 0, dim_reduced = 0;  // channel dimension of b's color
    bool dims_equal = false;
};

// Channels B_i of g minus the edges with B_i meeting the b's exactly in b_i, if any exist.
std::optional<std::vector<Channel>> find_witnesses(const Graph& g,
                                                   const std::vector<std::pair<int, int>>& edges);

MultiRouteResult multi_route(const Graph& g, const std::vector<std::pair<int, int>>& edges,
                             const std::vector<Channel>& witnesses);

// Rectangle parity by channel digging: R_{m x n} has the parity of R_{m x (m-1)} times
// R_{m x (n-m-1)} when m < n.
struct RectangleStep {
    int m = 0, n = 0;
    MultiRouteResult route;
    bool bridges_forced = false;
};
struct RectangleReplay {
    Parity parity = Parity::Even;
    std::vector<RectangleStep> steps;
};
RectangleReplay rectangle_parity_replay(int m, int n);

// One edge end at a vertex: the neighbor and the parallel-copy index.
struct EdgeEnd {
    int nbr = 0;
    int k = 0;
    auto operator<=>(const EdgeEnd&) const = default;
};

struct PairingFunction {
    std::map<int, std::map<EdgeEnd, EdgeEnd>> at;
    EdgeEnd apply(int v, EdgeEnd e) const;
    bool valid() const;  // fixed-point-free involutions
};

PairingFunction canonical_pairing(const Graph& g, const Channel& c);

struct CycleFlip {
    std::vector<MatchedEdge> cycle;  // S, in walk order
    Matching flipped;
    std::vector<int> walk;           // v_0, v_1, ... up to the first repeat
};

CycleFlip cycle_flip(const Graph& g, const Matching& mu, const Channel& c,
                     std::optional<int> v0 = std::nullopt,
                     const PairingFunction* pairing = nullptr);

}  // namespace mpar

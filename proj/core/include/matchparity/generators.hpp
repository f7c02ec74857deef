#pragma once

#include <cstdint>
#include <random>

#include "matchparity/divisibility.hpp"
#include "matchparity/graph.hpp"
#include "matchparity/region.hpp"

namespace mpar {

using Rng = std::mt19937_64;

// Random lattice disk: a simply connected union of about `cells` unit squares, no pinches.
GridRegion random_lattice_disk(Rng& rng, int cells, int max_side = 8);

// Random point set inside a w x h box; no shape guarantees.
GridRegion random_point_region(Rng& rng, int w, int h, double density = 0.7);

// Multigraph on n vertices with m edge copies; bipartite and colored when `colored`.
Graph random_multigraph(Rng& rng, int n, int m, bool colored);

// Simple bipartite graph with each black-white pair present with probability p.
Graph random_bipartite(Rng& rng, int blacks, int whites, double p);

IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi);

}  // namespace mpar

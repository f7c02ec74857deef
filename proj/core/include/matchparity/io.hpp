#pragma once

#include <string>
#include <string_view>

#include "matchparity/billiards.hpp"
#include "matchparity/channels.hpp"
#include "matchparity/divisibility.hpp"
#include "matchparity/graph.hpp"
#include "matchparity/moves.hpp"
#include "matchparity/region.hpp"

namespace mpar {

// All numbers are written as decimal strings. Output is deterministic.
std::string to_json(const ChannelBasis& b);
std::string to_json(const DivisibilityReport& r);
std::string to_json(const ReductionTrace& t);
std::string to_json(const Graph& g);

// {"vertices": [id...], "colors": {id: "B"|"W"}, "edges": [[id, id, mult]...]}.
// Ids are strings or integers; multiplicity is optional. Internal ids follow input
// order and labels keep the given id. Throws ParseError on malformed input.
Graph parse_graph_json(std::string_view text);

// Moves only; the initial graph comes from the caller.
std::vector<Move> parse_trace_json(std::string_view text);

// Region, billiard paths through face centers, and black/white vertex discs.
std::string billiards_svg(const GridRegion& r, const BilliardPathBasis& basis,
                          const BilliardHost& host);

}  // namespace mpar

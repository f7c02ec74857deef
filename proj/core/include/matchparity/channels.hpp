#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "matchparity/graph.hpp"
#include "matchparity/region.hpp"

namespace mpar {

enum class ColorRestriction { All, BlackOnly, WhiteOnly };
const char* restriction_name(ColorRestriction r);

struct Channel {
    std::uint64_t host = 0;
    std::vector<int> vertices;  // sorted ids

    bool empty() const { return vertices.empty(); }
    bool contains(int v) const;
    bool operator==(const Channel&) const = default;
};

Channel make_channel(const Graph& g, std::vector<int> vertices);

struct ChannelBasis {
    std::uint64_t host = 0;
    ColorRestriction restriction = ColorRestriction::All;
    std::vector<Channel> basis;

    std::size_t dimension() const { return basis.size(); }
};

// Number of neighbors of v inside c, counted with edge multiplicity.
int channel_degree(const Graph& g, int v, const std::vector<int>& c);
bool is_channel(const Graph& g, const std::vector<int>& c);
bool is_channel(const Graph& g, const Channel& c);

ChannelBasis channel_space(const Graph& g);
ChannelBasis black_channel_space(const Graph& g);
ChannelBasis white_channel_space(const Graph& g);
ChannelBasis color_channel_space(const Graph& g, Color c);

std::size_t channel_dimension(const Graph& g);
std::size_t black_channel_dimension(const Graph& g);
std::size_t white_channel_dimension(const Graph& g);

Channel channel_sum(const Channel& a, const Channel& b);
std::pair<Channel, Channel> split_by_color(const Graph& g, const Channel& c);
bool dimension_identity_check(const Graph& g);
bool independent(const Graph& g, const std::vector<Channel>& cs);

struct StepDiagonal {
    GridRegion host;                           // R_{2r x 2r}
    std::vector<std::vector<Point>> channels;  // channel j contains (j, j)
    std::vector<std::pair<Point, Point>> edges;  // edge j = (j,j)-(j+1,j)
};

StepDiagonal step_diagonal_channels(int r);

}  // namespace mpar

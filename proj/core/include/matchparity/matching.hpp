#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "matchparity/graph.hpp"

namespace mpar {

using BigInt = mpz_class;

std::string to_decimal(const BigInt& x);
// Exponent of 2 in x; nullopt for x = 0.
std::optional<std::size_t> two_adic_valuation(const BigInt& x);

// One edge of a perfect matching; k selects among parallel copies of {u, v}.
struct MatchedEdge {
    int u;
    int v;
    int k = 0;
    auto operator<=>(const MatchedEdge&) const = default;
};

using Matching = std::vector<MatchedEdge>;  // sorted, u < v

struct CapExceeded : std::length_error {
    using std::length_error::length_error;
};

inline constexpr std::size_t kDefaultVertexCap = 36;
inline constexpr std::size_t kMaxMaskVertices = 64;

// kDefaultVertexCap unless MATCHPARITY_MAX_VERTICES is set.
std::size_t vertex_cap();

std::vector<Matching> enumerate_matchings(const Graph& g,
                                          std::optional<std::size_t> cap = std::nullopt);
BigInt count_matchings(const Graph& g, std::optional<std::size_t> cap = std::nullopt);
bool is_perfect_matching(const Graph& g, const Matching& m);

enum class Parity { Even, Odd };
const char* parity_name(Parity p);
Parity matching_parity(const Graph& g);

}  // namespace mpar

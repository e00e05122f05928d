#pragma once

#include <cstdint>
#include <limits>

#include "referee/execution.hpp"
#include "referee/graph.hpp"

namespace referee {

/// Distances are hop counts; kInfiniteDistance sorts above every finite one.
using Distance = std::uint64_t;
inline constexpr Distance kInfiniteDistance = std::numeric_limits<Distance>::max();

/// C4 as a subgraph, not necessarily induced.
bool has_square(const LabelledGraph& g);
bool has_triangle(const LabelledGraph& g);

/// Largest shortest-path distance over all pairs, kInfiniteDistance when g is
/// disconnected. One BFS per source; sources are spread over threads.
Distance diameter(const LabelledGraph& g, Execution exec = Execution::parallel);

/// True when no edge joins two vertices of {1..split} or two of {split+1..n}.
bool is_bipartite_with_split(const LabelledGraph& g, std::size_t split);

}  // namespace referee

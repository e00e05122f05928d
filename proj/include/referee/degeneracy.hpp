#pragma once

#include <optional>
#include <vector>

#include "referee/graph.hpp"

namespace referee {

/// A permutation (r_1, ..., r_n) of the vertices such that every r_i has at
/// most k neighbours among r_1, ..., r_{i-1}. Peeling removes r_n first.
struct EliminationOrder {
  std::vector<VertexId> order;
  std::size_t k = 0;
};

/// Peels a vertex of current degree <= k, always the lowest ID available.
/// Returns nullopt when the peeling gets stuck, i.e. degeneracy(g) > k.
std::optional<EliminationOrder> degeneracy_order(const LabelledGraph& g, std::size_t k);

/// Smallest k for which degeneracy_order(g, k) succeeds (min-degree peeling).
std::size_t degeneracy(const LabelledGraph& g);

/// Recounts, for every position i, the neighbours of r_i among earlier
/// entries. Also rejects anything that is not a permutation of 1..n.
bool is_valid_elimination_order(const LabelledGraph& g, const EliminationOrder& order);

/// Like degeneracy_order, but a vertex may also be peeled when it has at most
/// k non-neighbours among the remaining vertices.
std::optional<EliminationOrder> generalized_degeneracy_order(const LabelledGraph& g,
                                                             std::size_t k);

bool is_valid_generalized_elimination_order(const LabelledGraph& g,
                                            const EliminationOrder& order);

}  // namespace referee

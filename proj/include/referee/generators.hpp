#pragma once

#include <cstdint>

#include "referee/graph.hpp"

namespace referee {

/// Random graph of degeneracy <= k: vertices arrive in a random order and each
/// picks between 0 and k random earlier vertices as neighbours. Deterministic
/// per seed and independent of the standard library's distributions.
LabelledGraph gen_k_degenerate(std::size_t n, std::size_t k, std::uint64_t seed);

LabelledGraph path_graph(std::size_t n);
LabelledGraph cycle_graph(std::size_t n);
LabelledGraph complete_graph(std::size_t n);
LabelledGraph star_graph(std::size_t n);

}  // namespace referee

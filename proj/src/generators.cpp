#include "referee/generators.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <vector>

namespace referee {

namespace {

// Uniform draw in [0, bound) by rejection on raw engine output. std::mt19937_64
// output is fully specified, so graphs are identical across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

}  // namespace

LabelledGraph gen_k_degenerate(std::size_t n, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<VertexId> arrival(n);
  for (std::size_t i = 0; i < n; ++i) arrival[i] = static_cast<VertexId>(i + 1);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(arrival[i - 1], arrival[uniform_below(rng, i)]);
  }

  std::vector<Edge> edges;
  std::vector<std::size_t> picked;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t count = uniform_below(rng, std::min(k, i) + 1);
    // Floyd's sampling of `count` distinct positions among the i earlier ones.
    picked.clear();
    for (std::size_t j = i - count; j < i; ++j) {
      const std::size_t t = uniform_below(rng, j + 1);
      const bool taken = std::find(picked.begin(), picked.end(), t) != picked.end();
      picked.push_back(taken ? j : t);
    }
    for (std::size_t pos : picked) edges.emplace_back(arrival[i], arrival[pos]);
  }
  return LabelledGraph(n, edges);
}

LabelledGraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return LabelledGraph(n, edges);
}

LabelledGraph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  if (n >= 3) edges.emplace_back(1, static_cast<VertexId>(n));
  return LabelledGraph(n, edges);
}

LabelledGraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  }
  return LabelledGraph(n, edges);
}

LabelledGraph star_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 2; v <= n; ++v) edges.emplace_back(1, v);
  return LabelledGraph(n, edges);
}

}  // namespace referee

#include "referee/graph.hpp"

#include <algorithm>
#include <string>

namespace referee {

LabelledGraph::LabelledGraph(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw GraphError("graph must have at least one vertex");
  adjacency_.resize(n);
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw GraphError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} has an endpoint outside 1.." + std::to_string(n));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    adjacency_[u - 1].push_back(v);
    adjacency_[v - 1].push_back(u);
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto& nbrs = adjacency_[i];
    std::sort(nbrs.begin(), nbrs.end());
    auto dup = std::adjacent_find(nbrs.begin(), nbrs.end());
    if (dup != nbrs.end()) {
      throw GraphError("duplicate edge {" + std::to_string(i + 1) + "," + std::to_string(*dup) + "}");
    }
  }
  num_edges_ = edges.size();
}

LabelledGraph::LabelledGraph(std::size_t n, std::initializer_list<Edge> edges)
    : LabelledGraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

LabelledGraph LabelledGraph::edgeless(std::size_t n) { return LabelledGraph(n, std::span<const Edge>{}); }

bool LabelledGraph::has_edge(VertexId u, VertexId v) const {
  if (u < 1 || u > n() || v < 1 || v > n()) return false;
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> LabelledGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (std::size_t i = 0; i < adjacency_.size(); ++i) {
    const auto u = static_cast<VertexId>(i + 1);
    for (VertexId v : adjacency_[i]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace referee

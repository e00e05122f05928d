#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace referee {

/// Vertex identifiers run from 1 to n; 0 is never a valid vertex.
using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on the vertex set {1, ..., n}.
///
/// Neighbourhoods are kept as sorted ID vectors, so `neighbors(v)` is the
/// exact set N(v) in increasing order. Values are immutable once built.
class LabelledGraph {
 public:
  /// Edges may be given in either orientation. Throws GraphError on n == 0,
  /// an endpoint outside 1..n, a self-loop or a repeated edge.
  LabelledGraph(std::size_t n, std::span<const Edge> edges);
  LabelledGraph(std::size_t n, std::initializer_list<Edge> edges);

  static LabelledGraph edgeless(std::size_t n);

  std::size_t n() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v - 1); }
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  bool has_edge(VertexId u, VertexId v) const;

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const LabelledGraph&, const LabelledGraph&) = default;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t num_edges_ = 0;
};

}  // namespace referee

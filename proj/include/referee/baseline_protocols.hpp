#pragma once

#include <vector>

#include "referee/protocol.hpp"

namespace referee {

/// Every node sends the empty message; the referee answers `true`.
class SilentProtocol final : public Protocol {
 public:
  std::string name() const override { return "silent"; }
  Message local(std::size_t, VertexId, std::span<const VertexId>) const override { return {}; }
  Output global(std::size_t, std::span<const Message>) const override { return true; }
  std::optional<std::size_t> fixed_message_bits(std::size_t) const override { return 0; }
};

/// How a whole neighbourhood is written into a message.
///  - id_list: each neighbour ID in bits_for(n) bits; deg(v) * ceil(log2(n+1)) bits.
///  - incidence_vector: bit i-1 set iff i is a neighbour; exactly n bits.
enum class NeighborhoodEncoding { id_list, incidence_vector };

Message encode_neighborhood(NeighborhoodEncoding encoding, std::size_t n,
                            std::span<const VertexId> neighborhood);
std::vector<VertexId> decode_neighborhood(NeighborhoodEncoding encoding, std::size_t n,
                                          const Message& message);

/// Rebuilds the graph from the adjacency lists; throws if the lists of two
/// nodes disagree about an edge.
LabelledGraph graph_from_neighborhood_messages(NeighborhoodEncoding encoding, std::size_t n,
                                               std::span<const Message> messages);

/// Each node ships its whole neighbourhood and the referee outputs the graph.
/// Not frugal: a star centre needs (n-1) * ceil(log2(n+1)) bits.
class FullNeighborhoodProtocol final : public Protocol {
 public:
  explicit FullNeighborhoodProtocol(NeighborhoodEncoding encoding) : encoding_(encoding) {}

  std::string name() const override;
  Message local(std::size_t n, VertexId id, std::span<const VertexId> neighborhood) const override;
  Output global(std::size_t n, std::span<const Message> messages) const override;
  std::optional<std::size_t> fixed_message_bits(std::size_t n) const override;

 private:
  NeighborhoodEncoding encoding_;
};

}  // namespace referee

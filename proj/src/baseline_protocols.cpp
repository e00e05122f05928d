#include "referee/baseline_protocols.hpp"

#include <algorithm>

namespace referee {

Message encode_neighborhood(NeighborhoodEncoding encoding, std::size_t n,
                            std::span<const VertexId> neighborhood) {
  Message m;
  if (encoding == NeighborhoodEncoding::id_list) {
    const std::size_t width = bits_for(n);
    for (VertexId w : neighborhood) m.append_uint(w, width);
    return m;
  }
  auto it = neighborhood.begin();
  for (VertexId i = 1; i <= n; ++i) {
    const bool present = it != neighborhood.end() && *it == i;
    if (present) ++it;
    m.push_back(present);
  }
  if (it != neighborhood.end()) throw BitError("neighbour ID outside 1..n");
  return m;
}

std::vector<VertexId> decode_neighborhood(NeighborhoodEncoding encoding, std::size_t n,
                                          const Message& message) {
  std::vector<VertexId> out;
  if (encoding == NeighborhoodEncoding::id_list) {
    const std::size_t width = bits_for(n);
    if (message.size() % width != 0) throw BitError("id list length is not a multiple of the ID width");
    BitReader reader(message);
    while (reader.remaining() > 0) {
      const auto id = reader.read_uint(width);
      if (id < 1 || id > n) throw BitError("neighbour ID outside 1..n");
      out.push_back(static_cast<VertexId>(id));
    }
    return out;
  }
  if (message.size() != n) throw BitError("incidence vector must have exactly n bits");
  for (VertexId i = 1; i <= n; ++i) {
    if (message.bit(i - 1)) out.push_back(i);
  }
  return out;
}

LabelledGraph graph_from_neighborhood_messages(NeighborhoodEncoding encoding, std::size_t n,
                                               std::span<const Message> messages) {
  if (messages.size() != n) throw std::invalid_argument("expected one message per node");
  std::vector<std::vector<VertexId>> lists(n + 1);
  for (VertexId v = 1; v <= n; ++v) {
    lists[v] = decode_neighborhood(encoding, n, messages[v - 1]);
    std::sort(lists[v].begin(), lists[v].end());
  }
  std::vector<Edge> edges;
  for (VertexId v = 1; v <= n; ++v) {
    for (VertexId w : lists[v]) {
      if (!std::binary_search(lists[w].begin(), lists[w].end(), v)) {
        throw std::invalid_argument("asymmetric adjacency between " + std::to_string(v) + " and " +
                                    std::to_string(w));
      }
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return LabelledGraph(n, edges);
}

std::string FullNeighborhoodProtocol::name() const {
  return encoding_ == NeighborhoodEncoding::id_list ? "neighbors" : "incidence";
}

Message FullNeighborhoodProtocol::local(std::size_t n, VertexId,
                                        std::span<const VertexId> neighborhood) const {
  return encode_neighborhood(encoding_, n, neighborhood);
}

Output FullNeighborhoodProtocol::global(std::size_t n, std::span<const Message> messages) const {
  return graph_from_neighborhood_messages(encoding_, n, messages);
}

std::optional<std::size_t> FullNeighborhoodProtocol::fixed_message_bits(std::size_t n) const {
  if (encoding_ == NeighborhoodEncoding::incidence_vector) return n;
  return std::nullopt;
}

}  // namespace referee

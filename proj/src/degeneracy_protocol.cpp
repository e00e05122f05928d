#include "referee/degeneracy_protocol.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace referee {

namespace {

Rejection inconsistent() { return Rejection{rejection_reason::kInconsistentMessages}; }

void require_one_message_per_node(std::size_t n, std::span<const Message> messages) {
  if (messages.size() != n) {
    throw std::invalid_argument("expected " + std::to_string(n) + " messages, got " +
                                std::to_string(messages.size()));
  }
}

LabelledGraph assemble(std::size_t n, std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end());
  return LabelledGraph(n, edges);
}

}  // namespace

Output reconstruct_from_messages(std::size_t n, std::span<const Message> messages, std::size_t k,
                                 const PruneObserver& observer) {
  require_one_message_per_node(n, messages);
  std::vector<PowerSumSummary> summaries;
  summaries.reserve(n);
  try {
    for (std::size_t i = 0; i < n; ++i) {
      summaries.push_back(deserialize(messages[i], n, k));
      if (summaries.back().id != i + 1) return inconsistent();
    }
  } catch (const CodecError&) {
    return inconsistent();
  }

  std::vector<char> live(n + 1, 1);
  live[0] = 0;
  // Degrees only decrease, so each vertex is queued once, when it first
  // reaches degree <= k.
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 1; v <= n; ++v) {
    if (summaries[v - 1].degree <= k) ready.push(v);
  }

  std::vector<Edge> edges;
  std::size_t retired = 0;
  while (!ready.empty()) {
    const VertexId x = ready.top();
    ready.pop();
    std::vector<VertexId> neighbors;
    try {
      neighbors = decode(summaries[x - 1], n);
      for (VertexId w : neighbors) {
        if (!live[w]) return inconsistent();
      }
      for (VertexId w : neighbors) {
        auto& s = summaries[w - 1];
        s = without_neighbor(s, x);
        if (s.degree == k) ready.push(w);
        edges.emplace_back(std::min(x, w), std::max(x, w));
      }
    } catch (const CodecError&) {
      return inconsistent();
    }
    live[x] = 0;
    ++retired;
    if (observer) observer(PruneStep{x, std::move(neighbors), false, live, summaries, {}});
  }
  if (retired < n) return Rejection{rejection_reason::kDegeneracyExceeded};
  return assemble(n, edges);
}

Output generalized_reconstruct_from_messages(std::size_t n, std::span<const Message> messages,
                                             std::size_t k, const PruneObserver& observer) {
  require_one_message_per_node(n, messages);
  const std::size_t half = wire_bits(n, k);
  std::vector<PowerSumSummary> summaries;
  std::vector<BigInt> totals = power_sums_of_range(n, k);  // over live vertices
  summaries.reserve(n);
  try {
    for (std::size_t i = 0; i < n; ++i) {
      const auto parts = unpack_parts(messages[i], 2, &half);
      auto inner = deserialize(parts[0], n, k);
      auto outer = deserialize(parts[1], n, k);
      const auto id = static_cast<VertexId>(i + 1);
      if (inner.id != id || outer.id != id || inner.degree + outer.degree != n - 1) {
        return inconsistent();
      }
      // The two summaries must partition {1..n} \ {id}. Given that identity,
      // the non-neighbourhood summary of a live vertex always equals
      // totals - id^p - (its neighbourhood summary), so only the latter is
      // updated explicitly during pruning.
      BigInt power = 1;
      for (std::size_t p = 0; p < k; ++p) {
        power *= id;
        if (inner.sums[p] + outer.sums[p] + power != totals[p]) return inconsistent();
      }
      summaries.push_back(std::move(inner));
    }
  } catch (const CodecError&) {
    return inconsistent();
  } catch (const BitError&) {
    return inconsistent();
  }

  auto complement_of = [&](VertexId v, std::size_t live_count) {
    const auto& s = summaries[v - 1];
    PowerSumSummary c{v, live_count - 1 - s.degree, totals};
    BigInt power = 1;
    for (std::size_t p = 0; p < k; ++p) {
      power *= v;
      c.sums[p] -= power + s.sums[p];
    }
    return c;
  };

  std::vector<char> live(n + 1, 1);
  live[0] = 0;
  std::vector<Edge> edges;
  std::vector<PowerSumSummary> complements;
  for (std::size_t live_count = n; live_count > 0; --live_count) {
    VertexId x = 0;
    for (VertexId v = 1; v <= n; ++v) {
      if (!live[v]) continue;
      const std::size_t degree = summaries[v - 1].degree;
      if (degree <= k || live_count - 1 - degree <= k) {
        x = v;
        break;
      }
    }
    if (x == 0) return Rejection{rejection_reason::kGeneralizedDegeneracyExceeded};

    const bool via_complement = summaries[x - 1].degree > k;
    std::vector<VertexId> neighbors;
    try {
      if (!via_complement) {
        neighbors = decode(summaries[x - 1], n);
        for (VertexId w : neighbors) {
          if (!live[w]) return inconsistent();
        }
      } else {
        const auto others = decode(complement_of(x, live_count), n);
        for (VertexId w : others) {
          if (!live[w]) return inconsistent();
        }
        for (VertexId v = 1; v <= n; ++v) {
          if (live[v] && v != x && !std::binary_search(others.begin(), others.end(), v)) {
            neighbors.push_back(v);
          }
        }
        if (neighbors.size() != summaries[x - 1].degree) return inconsistent();
      }
      for (VertexId w : neighbors) {
        summaries[w - 1] = without_neighbor(summaries[w - 1], x);
        edges.emplace_back(std::min(x, w), std::max(x, w));
      }
    } catch (const CodecError&) {
      return inconsistent();
    }
    BigInt power = 1;
    for (std::size_t p = 0; p < k; ++p) {
      power *= x;
      totals[p] -= power;
    }
    live[x] = 0;

    if (observer) {
      complements.assign(n, PowerSumSummary{});
      for (VertexId v = 1; v <= n; ++v) {
        if (live[v]) complements[v - 1] = complement_of(v, live_count - 1);
      }
      observer(PruneStep{x, std::move(neighbors), via_complement, live, summaries, complements});
    }
  }
  return assemble(n, edges);
}

bool recognize(std::size_t n, std::span<const Message> messages,
               const DegeneracyProtocolConfig& config) {
  const Output out = config.generalized
                         ? generalized_reconstruct_from_messages(n, messages, config.k)
                         : reconstruct_from_messages(n, messages, config.k);
  return std::holds_alternative<LabelledGraph>(out);
}

std::string DegeneracyProtocol::name() const {
  std::string out = "degen:k=" + std::to_string(config_.k);
  if (config_.generalized) out += ",generalized";
  if (config_.mode == DegeneracyMode::recognize) out += ",recognize";
  return out;
}

Message DegeneracyProtocol::local(std::size_t n, VertexId id,
                                  std::span<const VertexId> neighborhood) const {
  Message m = serialize(encode(id, neighborhood, n, config_.k), n, config_.k);
  if (config_.generalized) m.append(serialize(encode_complement(id, neighborhood, n, config_.k), n, config_.k));
  return m;
}

Output DegeneracyProtocol::global(std::size_t n, std::span<const Message> messages) const {
  if (config_.mode == DegeneracyMode::recognize) return recognize(n, messages, config_);
  return config_.generalized ? generalized_reconstruct_from_messages(n, messages, config_.k)
                             : reconstruct_from_messages(n, messages, config_.k);
}

std::optional<std::size_t> DegeneracyProtocol::fixed_message_bits(std::size_t n) const {
  return (config_.generalized ? 2 : 1) * wire_bits(n, config_.k);
}

}  // namespace referee

#include "referee/reductions.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "referee/oracles.hpp"

namespace referee {

std::string to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::square: return "square";
    case GadgetKind::diameter: return "diameter";
    case GadgetKind::triangle: return "triangle";
  }
  return "?";
}

std::optional<GadgetKind> parse_gadget_kind(std::string_view text) {
  if (text == "square") return GadgetKind::square;
  if (text == "diameter") return GadgetKind::diameter;
  if (text == "triangle") return GadgetKind::triangle;
  return std::nullopt;
}

Property property_for(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::square: return Property::square;
    case GadgetKind::diameter: return Property::diameter_at_most_3;
    case GadgetKind::triangle: return Property::triangle;
  }
  throw std::logic_error("unknown gadget kind");
}

std::size_t gadget_size(GadgetKind kind, std::size_t n) {
  switch (kind) {
    case GadgetKind::square: return 2 * n;
    case GadgetKind::diameter: return n + 3;
    case GadgetKind::triangle: return n + 1;
  }
  throw std::logic_error("unknown gadget kind");
}

std::size_t parts_per_message(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::square: return 1;
    case GadgetKind::diameter: return 3;
    case GadgetKind::triangle: return 2;
  }
  throw std::logic_error("unknown gadget kind");
}

GadgetGraph build_gadget(const LabelledGraph& g, GadgetKind kind, VertexId s, VertexId t) {
  const auto n = static_cast<VertexId>(g.n());
  if (s < 1 || t > n || s >= t) {
    throw std::invalid_argument("gadget pair must satisfy 1 <= s < t <= n");
  }
  std::vector<Edge> edges = g.edges();
  switch (kind) {
    case GadgetKind::square:
      for (VertexId i = 1; i <= n; ++i) edges.emplace_back(i, n + i);
      edges.emplace_back(n + s, n + t);
      break;
    case GadgetKind::diameter:
      edges.emplace_back(s, n + 1);
      edges.emplace_back(t, n + 2);
      for (VertexId v = 1; v <= n; ++v) edges.emplace_back(v, n + 3);
      break;
    case GadgetKind::triangle:
      edges.emplace_back(s, n + 1);
      edges.emplace_back(t, n + 1);
      break;
  }
  return GadgetGraph{g.n(), kind, s, t, LabelledGraph(gadget_size(kind, n), edges)};
}

bool exact_property(Property property, const LabelledGraph& g) {
  switch (property) {
    case Property::square: return has_square(g);
    case Property::triangle: return has_triangle(g);
    case Property::diameter_at_most_3: return diameter(g, Execution::serial) <= 3;
  }
  throw std::logic_error("unknown property");
}

std::optional<std::string> reduction_precondition_violation(GadgetKind kind, const LabelledGraph& g) {
  switch (kind) {
    case GadgetKind::square:
      if (has_square(g)) return "input graph contains a square";
      break;
    case GadgetKind::triangle:
      if (!is_bipartite_with_split(g, g.n() / 2)) {
        return "input graph has an edge inside part {1.." + std::to_string(g.n() / 2) + "} or {" +
               std::to_string(g.n() / 2 + 1) + ".." + std::to_string(g.n()) + "}";
      }
      break;
    case GadgetKind::diameter:
      break;
  }
  return std::nullopt;
}

std::vector<Edge> query_pairs(GadgetKind kind, std::size_t n) {
  std::vector<Edge> pairs;
  const auto last = static_cast<VertexId>(n);
  const auto split = static_cast<VertexId>(n / 2);
  for (VertexId s = 1; s <= last; ++s) {
    for (VertexId t = s + 1; t <= last; ++t) {
      if (kind == GadgetKind::triangle && !(s <= split && t > split)) continue;
      pairs.emplace_back(s, t);
    }
  }
  return pairs;
}

bool gadget_iff_holds(const LabelledGraph& g, GadgetKind kind, VertexId s, VertexId t) {
  const GadgetGraph gadget = build_gadget(g, kind, s, t);
  return exact_property(property_for(kind), gadget.graph) == g.has_edge(s, t);
}

bool gadget_iff_check(const LabelledGraph& g, GadgetKind kind, Execution exec) {
  if (auto why = reduction_precondition_violation(kind, g)) throw PreconditionError(*why);
  const auto pairs = query_pairs(kind, g.n());
  const auto failures = parallel_count(exec, pairs.size(), [&](std::uint64_t i) {
    return !gadget_iff_holds(g, kind, pairs[i].first, pairs[i].second);
  });
  return failures == 0;
}

namespace {

std::string property_name(Property property) {
  switch (property) {
    case Property::square: return "square";
    case Property::triangle: return "triangle";
    case Property::diameter_at_most_3: return "diameter<=3";
  }
  return "?";
}

class OracleDecider final : public Protocol {
 public:
  OracleDecider(Property property, NeighborhoodEncoding encoding)
      : property_(property), encoding_(encoding) {}

  std::string name() const override {
    return "oracle:" + property_name(property_) +
           (encoding_ == NeighborhoodEncoding::incidence_vector ? ",incidence" : "");
  }
  Message local(std::size_t n, VertexId, std::span<const VertexId> neighborhood) const override {
    return encode_neighborhood(encoding_, n, neighborhood);
  }
  Output global(std::size_t n, std::span<const Message> messages) const override {
    return exact_property(property_, graph_from_neighborhood_messages(encoding_, n, messages));
  }
  std::optional<std::size_t> fixed_message_bits(std::size_t n) const override {
    if (encoding_ == NeighborhoodEncoding::incidence_vector) return n;
    return std::nullopt;
  }

 private:
  Property property_;
  NeighborhoodEncoding encoding_;
};

std::vector<VertexId> with_extra(std::span<const VertexId> neighborhood,
                                 std::initializer_list<VertexId> extra) {
  std::vector<VertexId> out(neighborhood.begin(), neighborhood.end());
  out.insert(out.end(), extra);
  std::sort(out.begin(), out.end());
  return out;
}

class ReductionProtocol final : public Protocol {
 public:
  ReductionProtocol(GadgetKind kind, DeciderProtocol gamma, Execution exec)
      : kind_(kind), gamma_(std::move(gamma)), exec_(exec) {
    if (!gamma_.protocol) throw std::invalid_argument("reduction needs a decider protocol");
    if (gamma_.property != property_for(kind_)) {
      throw std::invalid_argument("decider property does not match the " + to_string(kind_) + " reduction");
    }
  }

  std::string name() const override { return "delta-" + to_string(kind_) + "(" + gamma_.protocol->name() + ")"; }

  Message local(std::size_t n, VertexId id, std::span<const VertexId> neighborhood) const override {
    const Protocol& gamma = *gamma_.protocol;
    const std::size_t size = gadget_size(kind_, n);
    const auto top = static_cast<VertexId>(n);
    switch (kind_) {
      case GadgetKind::square:
        return gamma.local(size, id, with_extra(neighborhood, {id + top}));
      case GadgetKind::diameter: {
        const Message parts[] = {
            gamma.local(size, id, with_extra(neighborhood, {top + 3})),
            gamma.local(size, id, with_extra(neighborhood, {top + 1, top + 3})),
            gamma.local(size, id, with_extra(neighborhood, {top + 2, top + 3})),
        };
        return pack(size, parts);
      }
      case GadgetKind::triangle: {
        const Message parts[] = {
            gamma.local(size, id, neighborhood),
            gamma.local(size, id, with_extra(neighborhood, {top + 1})),
        };
        return pack(size, parts);
      }
    }
    throw std::logic_error("unknown gadget kind");
  }

  Output global(std::size_t n, std::span<const Message> messages) const override {
    if (messages.size() != n) throw std::invalid_argument("expected one message per node");
    const Protocol& gamma = *gamma_.protocol;
    const std::size_t size = gadget_size(kind_, n);
    const auto top = static_cast<VertexId>(n);
    const std::size_t parts = parts_per_message(kind_);
    const auto fixed = gamma.fixed_message_bits(size);

    // received[p][i]: part p of the message from node i + 1.
    std::vector<std::vector<Message>> received(parts, std::vector<Message>(n));
    for (std::size_t i = 0; i < n; ++i) {
      if (parts == 1) {
        received[0][i] = messages[i];
        continue;
      }
      auto split = unpack_parts(messages[i], parts, fixed ? &*fixed : nullptr);
      for (std::size_t p = 0; p < parts; ++p) received[p][i] = std::move(split[p]);
    }

    // Messages of the added vertices that do not depend on G or on the pair.
    std::vector<Message> pendant;
    Message hub;
    if (kind_ == GadgetKind::square) {
      pendant.resize(n);
      for (VertexId j = 1; j <= top; ++j) {
        const VertexId only[] = {j};
        pendant[j - 1] = gamma.local(size, top + j, only);
      }
    } else if (kind_ == GadgetKind::diameter) {
      std::vector<VertexId> everyone(n);
      for (VertexId v = 1; v <= top; ++v) everyone[v - 1] = v;
      hub = gamma.local(size, top + 3, everyone);
    }

    const auto pairs = query_pairs(kind_, n);
    std::vector<char> adjacent(pairs.size(), 0);
    parallel_for(exec_, pairs.size(), [&](std::size_t index) {
      const auto [s, t] = pairs[index];
      std::vector<Message> vec;
      vec.reserve(size);
      switch (kind_) {
        case GadgetKind::square: {
          vec.insert(vec.end(), received[0].begin(), received[0].end());
          vec.insert(vec.end(), pendant.begin(), pendant.end());
          const VertexId around_s[] = {s, top + t};
          const VertexId around_t[] = {t, top + s};
          vec[top + s - 1] = gamma.local(size, top + s, around_s);
          vec[top + t - 1] = gamma.local(size, top + t, around_t);
          break;
        }
        case GadgetKind::diameter: {
          vec.insert(vec.end(), received[0].begin(), received[0].end());
          vec[s - 1] = received[1][s - 1];
          vec[t - 1] = received[2][t - 1];
          const VertexId only_s[] = {s};
          const VertexId only_t[] = {t};
          vec.push_back(gamma.local(size, top + 1, only_s));
          vec.push_back(gamma.local(size, top + 2, only_t));
          vec.push_back(hub);
          break;
        }
        case GadgetKind::triangle: {
          vec.insert(vec.end(), received[0].begin(), received[0].end());
          vec[s - 1] = received[1][s - 1];
          vec[t - 1] = received[1][t - 1];
          const VertexId both[] = {s, t};
          vec.push_back(gamma.local(size, top + 1, both));
          break;
        }
      }
      const Output verdict = gamma.global(size, vec);
      const bool* yes = std::get_if<bool>(&verdict);
      if (!yes) throw std::logic_error("decider returned something other than a verdict");
      adjacent[index] = *yes ? 1 : 0;
    });

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (adjacent[i]) edges.push_back(pairs[i]);
    }
    return LabelledGraph(n, edges);
  }

  std::optional<std::size_t> fixed_message_bits(std::size_t n) const override {
    const auto part = gamma_.protocol->fixed_message_bits(gadget_size(kind_, n));
    if (!part) return std::nullopt;
    return parts_per_message(kind_) * *part;
  }

 private:
  Message pack(std::size_t size, std::span<const Message> parts) const {
    const auto fixed = gamma_.protocol->fixed_message_bits(size);
    return pack_parts(parts, fixed ? &*fixed : nullptr);
  }

  GadgetKind kind_;
  DeciderProtocol gamma_;
  Execution exec_;
};

}  // namespace

DeciderProtocol oracle_decider(Property property, NeighborhoodEncoding encoding) {
  return DeciderProtocol{std::make_shared<OracleDecider>(property, encoding), property};
}

std::shared_ptr<const Protocol> make_reduction(GadgetKind kind, DeciderProtocol gamma, Execution exec) {
  return std::make_shared<ReductionProtocol>(kind, std::move(gamma), exec);
}

std::shared_ptr<const Protocol> delta_square(DeciderProtocol gamma, Execution exec) {
  return make_reduction(GadgetKind::square, std::move(gamma), exec);
}

std::shared_ptr<const Protocol> delta_diameter(DeciderProtocol gamma, Execution exec) {
  return make_reduction(GadgetKind::diameter, std::move(gamma), exec);
}

std::shared_ptr<const Protocol> delta_triangle(DeciderProtocol gamma, Execution exec) {
  return make_reduction(GadgetKind::triangle, std::move(gamma), exec);
}

std::vector<Message> split_reduction_message(GadgetKind kind, const DeciderProtocol& gamma,
                                             std::size_t n, const Message& message) {
  const std::size_t parts = parts_per_message(kind);
  if (parts == 1) return {message};
  const auto fixed = gamma.protocol->fixed_message_bits(gadget_size(kind, n));
  return unpack_parts(message, parts, fixed ? &*fixed : nullptr);
}

Transcript reconstruct_via_reduction(GadgetKind kind, const DeciderProtocol& gamma,
                                     const LabelledGraph& g, Execution exec) {
  if (auto why = reduction_precondition_violation(kind, g)) throw PreconditionError(*why);
  const auto protocol = make_reduction(kind, gamma, exec);
  return run(*protocol, g, exec);
}

std::uint64_t count_square_free(std::size_t n, Execution exec) {
  if (n == 0) throw std::domain_error("n must be at least 1");
  if (n > 7) throw std::domain_error("count_square_free enumerates 2^(n(n-1)/2) graphs; refusing n > 7");
  std::vector<std::pair<unsigned, unsigned>> slots;
  for (unsigned u = 0; u < n; ++u) {
    for (unsigned v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  return parallel_count(exec, total, [&](std::uint64_t mask) {
    std::uint8_t adj[7] = {};
    for (std::size_t e = 0; e < slots.size(); ++e) {
      if (mask >> e & 1u) {
        adj[slots[e].first] |= static_cast<std::uint8_t>(1u << slots[e].second);
        adj[slots[e].second] |= static_cast<std::uint8_t>(1u << slots[e].first);
      }
    }
    for (unsigned u = 0; u < n; ++u) {
      for (unsigned w = u + 1; w < n; ++w) {
        if (std::popcount(static_cast<unsigned>(adj[u] & adj[w])) >= 2) return false;
      }
    }
    return true;
  });
}

}  // namespace referee

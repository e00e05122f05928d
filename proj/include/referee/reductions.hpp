#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "referee/baseline_protocols.hpp"
#include "referee/protocol.hpp"

namespace referee {

// Each reduction turns a one-round decider for a property into a one-round
// protocol that reconstructs a whole graph family. For every pair s < t the
// referee simulates the decider on a gadget graph G'_{s,t} that has the
// property iff {s, t} is an edge of G:
//
//   square    2n vertices: G, pendant edges {i, n+i}, and {n+s, n+t}.
//             Family: square-free graphs.
//   diameter  n+3 vertices: G, {s, n+1}, {t, n+2}, {v, n+3} for all v <= n.
//             Property: diameter <= 3. Family: all graphs.
//   triangle  n+1 vertices: G, {s, n+1}, {t, n+1}.
//             Family: bipartite graphs with parts {1..n/2}, {n/2+1..n}.

enum class GadgetKind { square, diameter, triangle };
enum class Property { square, diameter_at_most_3, triangle };

std::string to_string(GadgetKind kind);
std::optional<GadgetKind> parse_gadget_kind(std::string_view text);
Property property_for(GadgetKind kind);

struct GadgetGraph {
  std::size_t base_n = 0;
  GadgetKind kind = GadgetKind::square;
  VertexId s = 0;
  VertexId t = 0;
  LabelledGraph graph;
};

/// Requires 1 <= s < t <= n; throws std::invalid_argument otherwise.
GadgetGraph build_gadget(const LabelledGraph& g, GadgetKind kind, VertexId s, VertexId t);

/// Exact verdict of the brute-force oracles in graph_core.
bool exact_property(Property property, const LabelledGraph& g);

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Reason g lies outside the family the reduction reconstructs, if it does:
/// a square for the square kind, an edge inside a part for the triangle kind.
std::optional<std::string> reduction_precondition_violation(GadgetKind kind, const LabelledGraph& g);

/// Pairs the reduction queries: all s < t, or only s <= n/2 < t for triangle.
std::vector<Edge> query_pairs(GadgetKind kind, std::size_t n);

/// exact_property(gadget(s, t)) == ({s, t} in E(g)) for one pair.
bool gadget_iff_holds(const LabelledGraph& g, GadgetKind kind, VertexId s, VertexId t);

/// gadget_iff_holds over every query pair. Throws PreconditionError when g is
/// outside the reduction's family.
bool gadget_iff_check(const LabelledGraph& g, GadgetKind kind, Execution exec = Execution::parallel);

/// A one-round protocol whose referee outputs a verdict for `property`.
struct DeciderProtocol {
  std::shared_ptr<const Protocol> protocol;
  Property property = Property::square;
};

/// Stand-in decider: each node ships its whole neighbourhood, the referee
/// rebuilds the graph and runs the exact oracle. Correct on every graph and
/// deliberately not frugal. With incidence_vector every message is exactly
/// n bits, which makes size bookkeeping exact.
DeciderProtocol oracle_decider(Property property,
                               NeighborhoodEncoding encoding = NeighborhoodEncoding::id_list);

/// Reconstruction protocols built from any decider. The referee evaluates the
/// decider's global function once per query pair; `exec` selects the serial
/// or parallel pair loop.
///
/// Message sizes, for a decider with messages of k(N) bits at size N:
///   delta_square    one decider message at size 2n           -> k(2n)
///   delta_diameter  three decider messages at size n+3        -> 3 k(n+3)
///   delta_triangle  two decider messages at size n+1          -> 2 k(n+1)
/// Parts are concatenated as-is when the decider has a fixed message length,
/// and Elias-gamma length-prefixed otherwise.
std::shared_ptr<const Protocol> delta_square(DeciderProtocol gamma, Execution exec = Execution::parallel);
std::shared_ptr<const Protocol> delta_diameter(DeciderProtocol gamma, Execution exec = Execution::parallel);
std::shared_ptr<const Protocol> delta_triangle(DeciderProtocol gamma, Execution exec = Execution::parallel);
std::shared_ptr<const Protocol> make_reduction(GadgetKind kind, DeciderProtocol gamma,
                                               Execution exec = Execution::parallel);

/// Size of the decider instances a reduction simulates for an n-vertex input.
std::size_t gadget_size(GadgetKind kind, std::size_t n);
/// Number of decider messages packed into each reduction message.
std::size_t parts_per_message(GadgetKind kind);

/// Splits one reduction message back into its decider messages.
std::vector<Message> split_reduction_message(GadgetKind kind, const DeciderProtocol& gamma,
                                             std::size_t n, const Message& message);

/// Runs the reduction protocol on g after checking the family precondition;
/// throws PreconditionError rather than returning a meaningless graph.
Transcript reconstruct_via_reduction(GadgetKind kind, const DeciderProtocol& gamma,
                                     const LabelledGraph& g, Execution exec = Execution::parallel);

/// Exact number of square-free labelled graphs on {1..n}, by enumerating all
/// 2^{n(n-1)/2} edge sets. Throws std::domain_error for n > 7.
std::uint64_t count_square_free(std::size_t n, Execution exec = Execution::parallel);

}  // namespace referee

#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "referee/powersum.hpp"
#include "referee/protocol.hpp"

namespace referee {

enum class DegeneracyMode { reconstruct, recognize };

/// k is shared configuration: every node and the referee know it, it is
/// never transmitted.
struct DegeneracyProtocolConfig {
  std::size_t k = 1;
  DegeneracyMode mode = DegeneracyMode::reconstruct;
  /// Also ship the non-neighbourhood summary, so a vertex can be pruned when
  /// it has at most k non-neighbours among the remaining vertices.
  bool generalized = false;
};

namespace rejection_reason {
inline constexpr const char* kDegeneracyExceeded = "degeneracy exceeds k";
inline constexpr const char* kGeneralizedDegeneracyExceeded = "generalized degeneracy exceeds k";
inline constexpr const char* kInconsistentMessages = "inconsistent messages";
}  // namespace rejection_reason

/// Snapshot handed to a PruneObserver right after a vertex is retired.
struct PruneStep {
  VertexId retired = 0;
  std::vector<VertexId> neighbors;  // live neighbours at retirement time
  bool via_complement = false;
  std::span<const char> live;                   // indexed by ID, slot 0 unused
  std::span<const PowerSumSummary> summaries;   // indexed by ID - 1
  /// Non-neighbourhood summaries of the live vertices (generalized mode only,
  /// indexed by ID - 1; entries of retired vertices are stale).
  std::span<const PowerSumSummary> complements;
};

using PruneObserver = std::function<void(const PruneStep&)>;

/// Referee side of the plain protocol. Repeatedly takes the lowest live ID
/// whose current degree is <= k, decodes its live neighbourhood, records those
/// edges, subtracts its powers from each neighbour's summary and retires it.
///
/// Returns the graph, Rejection{"degeneracy exceeds k"} when every live
/// summary has degree > k, or Rejection{"inconsistent messages"} when a
/// message does not parse or a decode or update fails.
Output reconstruct_from_messages(std::size_t n, std::span<const Message> messages, std::size_t k,
                                 const PruneObserver& observer = {});

/// Generalized variant: each message is the neighbourhood summary followed by
/// the non-neighbourhood summary, W(n, k) bits each. A live vertex is taken
/// when its live degree or its live co-degree is <= k (degree preferred).
Output generalized_reconstruct_from_messages(std::size_t n, std::span<const Message> messages,
                                             std::size_t k, const PruneObserver& observer = {});

/// True iff the referee reconstructs without any rejection.
bool recognize(std::size_t n, std::span<const Message> messages, const DegeneracyProtocolConfig& config);

class DegeneracyProtocol final : public Protocol {
 public:
  explicit DegeneracyProtocol(DegeneracyProtocolConfig config) : config_(config) {}

  const DegeneracyProtocolConfig& config() const { return config_; }

  /// "degen:k=<K>" plus ",generalized" and/or ",recognize".
  std::string name() const override;
  Message local(std::size_t n, VertexId id, std::span<const VertexId> neighborhood) const override;
  /// Reconstruct mode: graph or rejection. Recognize mode: a boolean verdict.
  Output global(std::size_t n, std::span<const Message> messages) const override;
  std::optional<std::size_t> fixed_message_bits(std::size_t n) const override;

 private:
  DegeneracyProtocolConfig config_;
};

}  // namespace referee

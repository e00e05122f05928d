#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "referee/bits.hpp"
#include "referee/execution.hpp"
#include "referee/graph.hpp"

namespace referee {

struct Rejection {
  std::string reason;
  friend bool operator==(const Rejection&, const Rejection&) = default;
};

/// Escape hatch for protocols whose referee answer is not a verdict or a graph.
struct RawOutput {
  Message bits;
  friend bool operator==(const RawOutput&, const RawOutput&) = default;
};

/// What the referee's global function returns.
using Output = std::variant<bool, LabelledGraph, Rejection, RawOutput>;

/// A one-round protocol for graphs of every size n: a local function that maps
/// (n, id, N(id)) to a message, and a global function that maps the n messages,
/// indexed by sender ID, to an output.
///
/// Implementations must be pure and safe to call concurrently: `local` may
/// depend on nothing but its arguments, and it must accept any neighbourhood
/// N subset of {1..n} \ {id}, not only those arising from a concrete graph.
class Protocol {
 public:
  virtual ~Protocol() = default;

  virtual std::string name() const = 0;

  /// `neighborhood` is sorted ascending without duplicates.
  virtual Message local(std::size_t n, VertexId id, std::span<const VertexId> neighborhood) const = 0;

  /// `messages[i]` is the message of node i + 1.
  virtual Output global(std::size_t n, std::span<const Message> messages) const = 0;

  /// Exact length of every local message for size n, when the protocol
  /// guarantees one.
  virtual std::optional<std::size_t> fixed_message_bits(std::size_t /*n*/) const {
    return std::nullopt;
  }
};

/// A failed local or global evaluation during run(). `node()` is empty when
/// the referee failed.
class RunError : public std::runtime_error {
 public:
  RunError(std::optional<VertexId> node, const std::string& what);
  std::optional<VertexId> node() const { return node_; }

 private:
  std::optional<VertexId> node_;
};

struct Transcript {
  std::size_t n = 0;
  std::vector<Message> messages;
  Output output;

  /// max_i |m_i|, recomputed from the messages.
  std::size_t max_bits() const;
};

/// Evaluates the local function of every node of g. Evaluation order is not
/// observable; the parallel and serial paths give identical vectors.
std::vector<Message> message_vector(const Protocol& protocol, const LabelledGraph& g,
                                    Execution exec = Execution::parallel);

/// Message vector, then the global function once.
Transcript run(const Protocol& protocol, const LabelledGraph& g,
               Execution exec = Execution::parallel);

/// "verdict true", "graph n 3 m 2 edges 1-2 2-3", "reject <reason>" or
/// "raw bits <len> hex <payload>".
std::string describe_output(const Output& output);

/// Line-oriented export:
///   n <n>
///   id <i> bits <len> hex <payload>     one line per node, i ascending
///   max_bits <max>
///   output <describe_output>
std::string export_transcript(const Transcript& transcript);

}  // namespace referee

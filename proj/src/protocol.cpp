#include "referee/protocol.hpp"

#include <algorithm>
#include <exception>

namespace referee {

RunError::RunError(std::optional<VertexId> node, const std::string& what)
    : std::runtime_error((node ? "node " + std::to_string(*node) : std::string("referee")) + ": " +
                         what),
      node_(node) {}

std::size_t Transcript::max_bits() const {
  std::size_t best = 0;
  for (const Message& m : messages) best = std::max(best, m.size());
  return best;
}

std::vector<Message> message_vector(const Protocol& protocol, const LabelledGraph& g,
                                    Execution exec) {
  const std::size_t n = g.n();
  std::vector<Message> messages(n);
  parallel_for(exec, n, [&](std::size_t i) {
    const auto id = static_cast<VertexId>(i + 1);
    try {
      messages[i] = protocol.local(n, id, g.neighbors(id));
    } catch (const RunError&) {
      throw;
    } catch (const std::exception& e) {
      throw RunError(id, e.what());
    }
  });
  return messages;
}

Transcript run(const Protocol& protocol, const LabelledGraph& g, Execution exec) {
  Transcript t;
  t.n = g.n();
  t.messages = message_vector(protocol, g, exec);
  try {
    t.output = protocol.global(t.n, t.messages);
  } catch (const std::exception& e) {
    throw RunError(std::nullopt, e.what());
  }
  return t;
}

namespace {

struct Describe {
  std::string operator()(bool verdict) const { return verdict ? "verdict true" : "verdict false"; }
  std::string operator()(const LabelledGraph& g) const {
    std::string out = "graph n " + std::to_string(g.n()) + " m " + std::to_string(g.num_edges()) +
                      " edges";
    for (auto [u, v] : g.edges()) out += " " + std::to_string(u) + "-" + std::to_string(v);
    return out;
  }
  std::string operator()(const Rejection& r) const { return "reject " + r.reason; }
  std::string operator()(const RawOutput& raw) const {
    return "raw bits " + std::to_string(raw.bits.size()) + " hex " + raw.bits.to_hex();
  }
};

}  // namespace

std::string describe_output(const Output& output) { return std::visit(Describe{}, output); }

std::string export_transcript(const Transcript& transcript) {
  std::string out = "n " + std::to_string(transcript.n) + "\n";
  for (std::size_t i = 0; i < transcript.messages.size(); ++i) {
    const Message& m = transcript.messages[i];
    out += "id " + std::to_string(i + 1) + " bits " + std::to_string(m.size()) + " hex " +
           m.to_hex() + "\n";
  }
  out += "max_bits " + std::to_string(transcript.max_bits()) + "\n";
  out += "output " + describe_output(transcript.output) + "\n";
  return out;
}

}  // namespace referee

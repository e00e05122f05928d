#include <doctest.h>

#include <cmath>
#include <random>

#include "referee/baseline_protocols.hpp"
#include "referee/bits.hpp"
#include "referee/degeneracy_protocol.hpp"
#include "referee/frugality.hpp"
#include "referee/generators.hpp"
#include "referee/protocol.hpp"
#include "referee/registry.hpp"
#include "test_support.hpp"

using namespace referee;
namespace rt = referee::testing;

namespace {

// Fails in the local function of one chosen node.
class FaultyProtocol final : public Protocol {
 public:
  explicit FaultyProtocol(VertexId bad) : bad_(bad) {}
  std::string name() const override { return "faulty"; }
  Message local(std::size_t, VertexId id, std::span<const VertexId>) const override {
    if (id >= bad_) throw std::runtime_error("boom");
    return {};
  }
  Output global(std::size_t, std::span<const Message>) const override {
    throw std::runtime_error("referee boom");
  }

 private:
  VertexId bad_;
};

}  // namespace

TEST_CASE("Message bit packing") {
  Message m;
  CHECK(m.empty());
  CHECK(m.to_hex() == "-");
  m.append_uint(0b101, 3);
  m.push_back(true);
  CHECK(m.size() == 4);
  CHECK(m.to_hex() == "b0");
  m.append_uint(0xff, 8);
  CHECK(m.to_hex() == "bff0");
  CHECK(Message::from_hex("bff0", 12) == m);
  CHECK_THROWS_AS(Message::from_hex("bff1", 12), BitError);
  CHECK_THROWS_AS(Message::from_hex("bf", 12), BitError);
  CHECK_THROWS_AS(m.append_uint(4, 2), BitError);

  BitReader reader(m);
  CHECK(reader.read_uint(3) == 5);
  CHECK(reader.read_bit());
  CHECK(reader.remaining() == 8);
  CHECK(reader.read_uint(8) == 255);
  CHECK_THROWS_AS(reader.read_bit(), BitError);
}

TEST_CASE("bits_for") {
  CHECK(bits_for(0) == 0);
  CHECK(bits_for(1) == 1);
  CHECK(bits_for(3) == 2);
  CHECK(bits_for(4) == 3);
  CHECK(bits_for(1'000'000) == 20);
  for (std::uint64_t n = 1; n < 5000; ++n) {
    REQUIRE(bits_for(n) == static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n) + 1))));
  }
}

TEST_CASE("pack_parts round trip with and without fixed widths") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t count = 1 + rng() % 4;
    const bool fixed = trial % 2 == 0;
    const std::size_t width = rng() % 20;
    std::vector<Message> parts(count);
    for (auto& part : parts) {
      const std::size_t len = fixed ? width : rng() % 40;
      for (std::size_t i = 0; i < len; ++i) part.push_back(rng() % 2);
    }
    const auto packed = pack_parts(parts, fixed ? &width : nullptr);
    if (fixed) REQUIRE(packed.size() == count * width);
    REQUIRE(unpack_parts(packed, count, fixed ? &width : nullptr) == parts);
  }
}

TEST_CASE("silent protocol") {
  SilentProtocol silent;
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = rt::random_graph(1 + rng() % 20, 0.3, rng);
    const auto t = run(silent, g);
    CHECK(std::get<bool>(t.output));
    CHECK(t.max_bits() == 0);
    CHECK(describe_output(t.output) == "verdict true");
  }
}

TEST_CASE("degeneracy protocol on path 1-2-3") {
  DegeneracyProtocol protocol({.k = 1});
  const auto g = path_graph(3);
  const auto t = run(protocol, g);
  CHECK(std::get<LabelledGraph>(t.output) == g);
  CHECK(t.max_bits() == 8);
  CHECK(export_transcript(t) ==
        "n 3\n"
        "id 1 bits 8 hex 52\n"
        "id 2 bits 8 hex a4\n"
        "id 3 bits 8 hex d2\n"
        "max_bits 8\n"
        "output graph n 3 m 2 edges 1-2 2-3\n");
}

TEST_CASE("full-neighbourhood protocol") {
  FullNeighborhoodProtocol ids(NeighborhoodEncoding::id_list);
  FullNeighborhoodProtocol incidence(NeighborhoodEncoding::incidence_vector);
  const auto k3 = complete_graph(3);
  const auto t = run(ids, k3);
  CHECK(std::get<LabelledGraph>(t.output) == k3);
  // Two neighbour IDs of bits_for(3) = 2 bits each.
  CHECK(t.max_bits() == 4);
  CHECK(run(incidence, k3).max_bits() == 3);

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = rt::random_graph(1 + rng() % 25, 0.3, rng);
    REQUIRE(std::get<LabelledGraph>(run(ids, g).output) == g);
    REQUIRE(std::get<LabelledGraph>(run(incidence, g).output) == g);
  }
}

TEST_CASE("graph_from_neighborhood_messages rejects asymmetric lists") {
  const std::vector<VertexId> to2{2};
  std::vector<Message> messages{encode_neighborhood(NeighborhoodEncoding::id_list, 3, to2), {}, {}};
  CHECK_THROWS(graph_from_neighborhood_messages(NeighborhoodEncoding::id_list, 3, messages));
}

TEST_CASE("run wraps local and global failures") {
  try {
    run(FaultyProtocol(2), path_graph(4), Execution::parallel);
    FAIL("expected RunError");
  } catch (const RunError& e) {
    REQUIRE(e.node());
    CHECK(*e.node() == 2);
  }
  try {
    run(FaultyProtocol(100), path_graph(4));
    FAIL("expected RunError");
  } catch (const RunError& e) {
    CHECK_FALSE(e.node());
  }
}

TEST_CASE("message vectors are deterministic, local and execution independent") {
  DegeneracyProtocol protocol({.k = 3});
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = gen_k_degenerate(5 + rng() % 100, 3, rng());
    const auto serial = message_vector(protocol, g, Execution::serial);
    REQUIRE(serial == message_vector(protocol, g, Execution::parallel));
    REQUIRE(serial == message_vector(protocol, g, Execution::serial));
    // Each message depends only on (n, id, N(id)).
    for (VertexId v = 1; v <= g.n(); ++v) {
      std::vector<VertexId> nbrs(g.neighbors(v).begin(), g.neighbors(v).end());
      REQUIRE(serial[v - 1] == protocol.local(g.n(), v, nbrs));
    }
  }
}

TEST_CASE("frugality report examples") {
  DegeneracyProtocol protocol({.k = 2});
  std::vector<LabelledGraph> graphs;
  for (std::size_t n : {8u, 16u, 32u}) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) graphs.push_back(gen_k_degenerate(n, 2, seed));
  }
  const BitBound bound = [](std::size_t n) { return (2.0 + 2 * 3) * static_cast<double>(bits_for(n)); };
  const auto report = frugality_report(protocol, graphs, bound);
  CHECK(report.within_bound == true);
  for (auto [n, bits] : report.max_bits_by_n) CHECK(bits == wire_bits(n, 2));

  SilentProtocol silent;
  const auto quiet = frugality_report(silent, graphs, [](std::size_t) { return 0.0; });
  CHECK(quiet.within_bound == true);
  CHECK(quiet.fitted_constant == 0.0);

  // Stars: the centre's message grows like n log n, so the fitted constant
  // keeps growing and any fixed c is eventually exceeded.
  FullNeighborhoodProtocol ids(NeighborhoodEncoding::id_list);
  std::vector<LabelledGraph> stars;
  for (std::size_t n : {8u, 32u, 128u, 512u}) stars.push_back(star_graph(n));
  const auto star_report = frugality_report(ids, stars, [](std::size_t n) {
    return 20.0 * std::log2(static_cast<double>(n) + 1);
  });
  CHECK(star_report.within_bound == false);
  double previous = 0;
  for (auto [n, ratio] : star_report.ratio_by_n) {
    CHECK(ratio > previous);
    previous = ratio;
  }
  CHECK(format_frugality_report(star_report).find("verdict exceeds-bound") != std::string::npos);
}

TEST_CASE("protocol registry") {
  CHECK(make_protocol("silent")->name() == "silent");
  CHECK(make_protocol("neighbors")->name() == "neighbors");
  CHECK(make_protocol("incidence")->name() == "incidence");
  CHECK(make_protocol("degen:k=3")->name() == "degen:k=3");
  CHECK(make_protocol("degen:k=2,generalized")->name() == "degen:k=2,generalized");
  CHECK(make_protocol("degen:k=2,recognize")->name() == "degen:k=2,recognize");
  CHECK_THROWS_AS(make_protocol("degen"), std::invalid_argument);
  CHECK_THROWS_AS(make_protocol("degen:k=x"), std::invalid_argument);
  CHECK_THROWS_AS(make_protocol("degen:k=1,fast"), std::invalid_argument);
  CHECK_THROWS_AS(make_protocol("nope"), std::invalid_argument);
}

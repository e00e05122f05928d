#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "referee/powersum.hpp"

using namespace referee;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> values) {
  std::vector<BigInt> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

// Power sums computed the slow way, independent of encode().
std::vector<BigInt> naive_power_sums(const std::vector<VertexId>& set, std::size_t k) {
  std::vector<BigInt> sums(k, 0);
  for (VertexId w : set) {
    BigInt power = 1;
    for (std::size_t p = 0; p < k; ++p) {
      power *= w;
      sums[p] += power;
    }
  }
  return sums;
}

std::vector<VertexId> random_subset(std::size_t n, std::size_t size, VertexId exclude,
                                    std::mt19937_64& rng) {
  std::set<VertexId> chosen;
  std::uniform_int_distribution<VertexId> pick(1, static_cast<VertexId>(n));
  while (chosen.size() < size) {
    const VertexId w = pick(rng);
    if (w != exclude) chosen.insert(w);
  }
  return {chosen.begin(), chosen.end()};
}

CodecErrorKind error_kind(auto&& fn) {
  try {
    fn();
  } catch (const CodecError& e) {
    return e.kind();
  }
  FAIL("expected a CodecError");
  return CodecErrorKind::invalid_input;
}

}  // namespace

TEST_CASE("encode examples") {
  const std::vector<VertexId> n13{1, 3};
  CHECK(encode(2, n13, 3, 1) == PowerSumSummary{2, 2, big({4})});
  const std::vector<VertexId> n23{2, 3};
  CHECK(encode(1, n23, 4, 2) == PowerSumSummary{1, 2, big({5, 13})});
  CHECK(encode(5, {}, 5, 3) == PowerSumSummary{5, 0, big({0, 0, 0})});
}

TEST_CASE("encode errors") {
  const std::vector<VertexId> with_self{1, 2};
  CHECK(error_kind([&] { encode(2, with_self, 3, 1); }) == CodecErrorKind::self_loop);
  const std::vector<VertexId> out_of_range{4};
  CHECK(error_kind([&] { encode(1, out_of_range, 3, 1); }) == CodecErrorKind::invalid_input);
  const std::vector<VertexId> repeated{2, 2};
  CHECK(error_kind([&] { encode(1, repeated, 3, 1); }) == CodecErrorKind::invalid_input);
  CHECK(error_kind([&] { encode(4, {}, 3, 1); }) == CodecErrorKind::invalid_input);
}

TEST_CASE("decode examples") {
  CHECK(decode({1, 2, big({5, 13})}, 4) == std::vector<VertexId>{2, 3});
  CHECK(decode({1, 0, big({0})}, 4).empty());
  CHECK(decode({1, 1, big({7, 49, 343})}, 9) == std::vector<VertexId>{7});
  CHECK(decode_bruteforce({1, 2, big({5, 13})}, 4) == std::vector<VertexId>{2, 3});
  CHECK(decode_bruteforce({1, 0, big({0})}, 4).empty());
  CHECK(decode_bruteforce({1, 1, big({7, 49, 343})}, 9) == std::vector<VertexId>{7});
}

TEST_CASE("decode errors") {
  CHECK(error_kind([] { decode({1, 3, big({6, 14})}, 9); }) == CodecErrorKind::degree_out_of_range);
  // x^2 - 2x + 5 has no real roots.
  CHECK(error_kind([] { decode({1, 2, big({2, -6})}, 10); }) == CodecErrorKind::decode_failure);
  // Neighbourhood {1, 3} listed in the summary of vertex 1.
  CHECK(error_kind([] { decode({1, 2, big({4, 10})}, 5); }) == CodecErrorKind::decode_failure);
  // b_2 consistent with {2, 3} but b_3 is off by one.
  CHECK(error_kind([] { decode({1, 2, big({5, 13, 36})}, 5); }) == CodecErrorKind::decode_failure);
  // Roots out of range.
  CHECK(error_kind([] { decode({1, 2, big({11, 61})}, 5); }) == CodecErrorKind::decode_failure);
  // Repeated root: {2, 2}.
  CHECK(error_kind([] { decode({1, 2, big({4, 8})}, 5); }) == CodecErrorKind::decode_failure);
  CHECK(error_kind([] { decode_bruteforce({1, 2, big({4, 8})}, 5); }) == CodecErrorKind::decode_failure);
}

TEST_CASE("power_sums_to_elementary examples") {
  CHECK(power_sums_to_elementary(big({5, 13})) == big({5, 6}));
  CHECK(power_sums_to_elementary(big({6, 14, 36})) == big({6, 11, 6}));
  CHECK(power_sums_to_elementary(std::vector<BigInt>{}).empty());
  // (1 - 2) / 2 is not an integer.
  CHECK(error_kind([] { power_sums_to_elementary(big({1, 2})); }) == CodecErrorKind::decode_failure);
}

TEST_CASE("integer_roots examples") {
  CHECK(integer_roots(big({5, 6}), 4) == std::vector<VertexId>{2, 3});
  CHECK(integer_roots(big({6, 11, 6}), 3) == std::vector<VertexId>{1, 2, 3});
  CHECK_FALSE(integer_roots(big({2, 5}), 10));
  CHECK_FALSE(integer_roots(big({6, 11, 6}), 2));
  CHECK(integer_roots(std::vector<BigInt>{}, 5) == std::vector<VertexId>{});
}

TEST_CASE("integer_roots recovers planted roots at scale") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1'000'000;
    const std::size_t d = 1 + trial % 6;
    const auto roots = random_subset(n, d, 0, rng);
    // Expand prod (x - r) to get e_1..e_d.
    std::vector<BigInt> e(d + 1, 0);
    e[0] = 1;
    for (VertexId r : roots) {
      for (std::size_t i = d; i >= 1; --i) e[i] += e[i - 1] * r;
    }
    std::vector<BigInt> elementary(e.begin() + 1, e.end());
    REQUIRE(integer_roots(elementary, n) == roots);
  }
}

TEST_CASE("power_sums_of_range matches direct summation") {
  for (std::size_t n : {1u, 2u, 7u, 30u, 1000u}) {
    std::vector<VertexId> all;
    for (VertexId v = 1; v <= n; ++v) all.push_back(v);
    REQUIRE(power_sums_of_range(n, 6) == naive_power_sums(all, 6));
  }
}

TEST_CASE("encode_complement matches direct encoding of the complement") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 60;
    const auto id = static_cast<VertexId>(1 + rng() % n);
    const auto nbrs = random_subset(n, rng() % n, id, rng);
    std::vector<VertexId> rest;
    for (VertexId v = 1; v <= n; ++v) {
      if (v != id && !std::binary_search(nbrs.begin(), nbrs.end(), v)) rest.push_back(v);
    }
    const auto summary = encode_complement(id, nbrs, n, 4);
    REQUIRE(summary.id == id);
    REQUIRE(summary.degree == rest.size());
    REQUIRE(summary.sums == naive_power_sums(rest, 4));
  }
}

TEST_CASE("without_neighbor is closed under encode") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 200;
    const auto id = static_cast<VertexId>(1 + rng() % n);
    const auto nbrs = random_subset(n, 1 + rng() % std::min<std::size_t>(n - 1, 6), id, rng);
    const VertexId w = nbrs[rng() % nbrs.size()];
    std::vector<VertexId> rest;
    std::copy_if(nbrs.begin(), nbrs.end(), std::back_inserter(rest), [&](VertexId x) { return x != w; });
    REQUIRE(without_neighbor(encode(id, nbrs, n, 5), w) == encode(id, rest, n, 5));
  }
  CHECK(error_kind([] { without_neighbor({1, 0, big({0})}, 2); }) == CodecErrorKind::decode_failure);
  CHECK(error_kind([] { without_neighbor({1, 1, big({2})}, 3); }) == CodecErrorKind::decode_failure);
}

TEST_CASE("power-sum signatures are unique for small sets") {
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{12, 3}, {10, 4}}) {
    std::map<std::pair<std::size_t, std::vector<BigInt>>, std::uint32_t> seen;
    std::size_t collisions = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) > k) continue;
      std::vector<VertexId> set;
      for (VertexId v = 1; v <= n; ++v)
        if (mask >> (v - 1) & 1u) set.push_back(v);
      if (!seen.emplace(std::pair{set.size(), naive_power_sums(set, k)}, mask).second) ++collisions;
    }
    CHECK(collisions == 0);
  }
}

TEST_CASE("decode agrees with brute force for n <= 30, k <= 4") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 2 + rng() % 29;
    const std::size_t k = 1 + rng() % 4;
    const auto id = static_cast<VertexId>(1 + rng() % n);
    const auto nbrs = random_subset(n, rng() % (std::min(k, n - 1) + 1), id, rng);
    auto summary = encode(id, nbrs, n, k);
    REQUIRE(decode(summary, n) == nbrs);
    REQUIRE(decode_bruteforce(summary, n) == nbrs);

    // Perturbed summaries: both must fail, or both must return the same set.
    if (summary.degree > 0) {
      const std::size_t p = rng() % k;
      summary.sums[p] += (rng() % 2 ? 1 : -1) * static_cast<long long>(1 + rng() % 3);
      std::optional<std::vector<VertexId>> fast, slow;
      try { fast = decode(summary, n); } catch (const CodecError&) {}
      try { slow = decode_bruteforce(summary, n); } catch (const CodecError&) {}
      REQUIRE(fast == slow);
    }
  }
}

TEST_CASE("serialize example and minimal message") {
  const auto message = serialize({2, 2, big({4})}, 3, 1);
  CHECK(message.size() == 8);
  CHECK(wire_bits(3, 1) == 8);
  // id 10, degree 10, b_1 0100.
  CHECK(message.to_hex() == "a4");

  const auto zero = serialize({1, 0, big({0, 0})}, 5, 2);
  CHECK(zero.size() == wire_bits(5, 2));
  CHECK(wire_bits(5, 2) == (2 + 2 * 3) * 3);
  CHECK(deserialize(zero, 5, 2) == PowerSumSummary{1, 0, big({0, 0})});
}

TEST_CASE("serialize errors") {
  // b_1 = 16 does not fit in (k + 1) * L = 4 bits.
  CHECK(error_kind([] { serialize({2, 2, big({16})}, 3, 1); }) == CodecErrorKind::field_overflow);
  CHECK(error_kind([] { serialize({2, 1, big({-1})}, 3, 1); }) == CodecErrorKind::field_overflow);
  CHECK(error_kind([] { serialize({2, 1, big({1, 1})}, 3, 1); }) == CodecErrorKind::field_overflow);

  Message short_message;
  short_message.append_uint(0, 7);
  CHECK(error_kind([&] { deserialize(short_message, 3, 1); }) == CodecErrorKind::malformed_message);
  Message zero_id;
  zero_id.append_uint(0, 8);
  CHECK(error_kind([&] { deserialize(zero_id, 3, 1); }) == CodecErrorKind::malformed_message);
}

TEST_CASE("serialize round trip on 1000 random summaries") {
  std::mt19937_64 rng(1000);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + rng() % 1'000'000;
    const std::size_t k = 1 + rng() % 6;
    const auto id = static_cast<VertexId>(1 + rng() % n);
    const auto nbrs = random_subset(n, rng() % (std::min(n - 1, k + 3) + 1), id, rng);
    const auto summary = encode(id, nbrs, n, k);
    const auto bits = serialize(summary, n, k);
    REQUIRE(bits.size() == wire_bits(n, k));
    REQUIRE(deserialize(bits, n, k) == summary);
  }
}

TEST_CASE("wire field width suffices for the largest neighbourhood") {
  // Degree n - 1 with the top IDs maximises every b_p.
  for (std::size_t n : {2u, 3u, 7u, 8u, 100u}) {
    for (std::size_t k = 1; k <= 4; ++k) {
      std::vector<VertexId> nbrs;
      for (VertexId v = 2; v <= n; ++v) nbrs.push_back(v);
      const auto summary = encode(1, nbrs, n, k);
      CHECK(deserialize(serialize(summary, n, k), n, k) == summary);
    }
  }
}

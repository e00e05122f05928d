#include "referee/powersum.hpp"

#include <algorithm>
#include <string>

namespace referee {

namespace {

using boost::multiprecision::msb;

[[noreturn]] void fail(const std::string& what) {
  throw CodecError(CodecErrorKind::decode_failure, what);
}

std::vector<VertexId> checked_neighborhood(VertexId id, std::span<const VertexId> neighborhood,
                                           std::size_t n) {
  if (id < 1 || id > n) {
    throw CodecError(CodecErrorKind::invalid_input, "node ID " + std::to_string(id) + " outside 1..n");
  }
  std::vector<VertexId> sorted(neighborhood.begin(), neighborhood.end());
  if (!std::is_sorted(sorted.begin(), sorted.end())) std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const VertexId w = sorted[i];
    if (w == id) throw CodecError(CodecErrorKind::self_loop, "node " + std::to_string(id) + " lists itself");
    if (w < 1 || w > n) {
      throw CodecError(CodecErrorKind::invalid_input, "neighbour ID " + std::to_string(w) + " outside 1..n");
    }
    if (i > 0 && sorted[i - 1] == w) {
      throw CodecError(CodecErrorKind::invalid_input, "neighbour " + std::to_string(w) + " repeated");
    }
  }
  return sorted;
}

void add_powers(std::vector<BigInt>& sums, VertexId w) {
  BigInt power = 1;
  for (auto& s : sums) {
    power *= w;
    s += power;
  }
}

// Arithmetic modulo the Mersenne prime 2^61 - 1, used only to screen root
// candidates before the exact check.
constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 product = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(product & kMersenne61) +
                    static_cast<std::uint64_t>(product >> 61);
  if (r >= kMersenne61) r -= kMersenne61;
  return r;
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  if (r >= kMersenne61) r -= kMersenne61;
  return r;
}

std::uint64_t reduce_mod(const BigInt& x) {
  BigInt r = x % kMersenne61;
  if (r < 0) r += kMersenne61;
  return r.convert_to<std::uint64_t>();
}

}  // namespace

PowerSumSummary encode(VertexId id, std::span<const VertexId> neighborhood, std::size_t n,
                       std::size_t k) {
  const auto sorted = checked_neighborhood(id, neighborhood, n);
  PowerSumSummary s{id, sorted.size(), std::vector<BigInt>(k)};
  for (VertexId w : sorted) add_powers(s.sums, w);
  return s;
}

std::vector<BigInt> power_sums_of_range(std::size_t n, std::size_t k) {
  // row[j] = C(p + 1, j), updated in place as p grows.
  std::vector<BigInt> sums(k + 1);
  sums[0] = n;
  std::vector<BigInt> row{1, 1};
  BigInt base_power = BigInt(n) + 1;  // (n + 1)^{p + 1}
  for (std::size_t p = 1; p <= k; ++p) {
    std::vector<BigInt> next(p + 2, 1);
    for (std::size_t j = 1; j <= p; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
    base_power *= BigInt(n) + 1;
    BigInt acc = base_power - 1;
    for (std::size_t j = 0; j < p; ++j) acc -= row[j] * sums[j];
    sums[p] = acc / (p + 1);
  }
  sums.erase(sums.begin());
  return sums;
}

PowerSumSummary encode_complement(VertexId id, std::span<const VertexId> neighborhood,
                                  std::size_t n, std::size_t k) {
  const PowerSumSummary inner = encode(id, neighborhood, n, k);
  PowerSumSummary s{id, n - 1 - inner.degree, power_sums_of_range(n, k)};
  BigInt power = 1;
  for (std::size_t p = 0; p < k; ++p) {
    power *= id;
    s.sums[p] -= power + inner.sums[p];
  }
  return s;
}

PowerSumSummary without_neighbor(const PowerSumSummary& summary, VertexId w) {
  if (summary.degree == 0) fail("removing a neighbour from a degree-0 summary");
  PowerSumSummary s = summary;
  --s.degree;
  BigInt power = 1;
  for (auto& b : s.sums) {
    power *= w;
    b -= power;
    if (b < 0) fail("power sum became negative");
  }
  return s;
}

std::vector<BigInt> power_sums_to_elementary(std::span<const BigInt> power_sums) {
  const std::size_t d = power_sums.size();
  std::vector<BigInt> e(d + 1);
  e[0] = 1;
  for (std::size_t i = 1; i <= d; ++i) {
    BigInt acc = 0;
    for (std::size_t j = 1; j <= i; ++j) {
      if (j % 2 == 1) acc += e[i - j] * power_sums[j - 1];
      else acc -= e[i - j] * power_sums[j - 1];
    }
    if (acc % i != 0) fail("power sums are not those of an integer multiset");
    e[i] = acc / i;
  }
  e.erase(e.begin());
  return e;
}

std::optional<std::vector<VertexId>> integer_roots(std::span<const BigInt> elementary,
                                                   std::size_t n) {
  std::size_t d = elementary.size();
  std::vector<VertexId> roots;
  if (d == 0) return roots;
  if (d > n) return std::nullopt;

  // coeff[j] multiplies x^{d-j}; coeff[0] == 1.
  std::vector<BigInt> coeff(d + 1);
  coeff[0] = 1;
  for (std::size_t j = 1; j <= d; ++j) coeff[j] = j % 2 ? -elementary[j - 1] : elementary[j - 1];

  std::vector<std::uint64_t> coeff_mod;
  std::vector<BigInt> quotient;
  std::uint64_t x = 1;
  while (d > 1) {
    // Roots come out in increasing order, so the next one is the smallest
    // remaining root and cannot exceed (sum of remaining roots) / d.
    const BigInt remaining_sum = -coeff[1];
    if (remaining_sum < BigInt(x) * d) return std::nullopt;
    const BigInt limit_big = remaining_sum / d;
    const std::uint64_t limit =
        limit_big >= n ? static_cast<std::uint64_t>(n) : limit_big.convert_to<std::uint64_t>();

    coeff_mod.resize(d + 1);
    for (std::size_t j = 0; j <= d; ++j) coeff_mod[j] = reduce_mod(coeff[j]);

    bool found = false;
    for (; x <= limit && !found; ++x) {
      std::uint64_t value = 0;
      for (std::size_t j = 0; j <= d; ++j) value = add_mod(mul_mod(value, x), coeff_mod[j]);
      if (value != 0) continue;
      // Exact synthetic division by (X - x); a zero remainder confirms the root.
      quotient.assign(d, 0);
      quotient[0] = coeff[0];
      for (std::size_t j = 1; j < d; ++j) quotient[j] = coeff[j] + quotient[j - 1] * x;
      if (coeff[d] + quotient[d - 1] * x != 0) continue;
      roots.push_back(static_cast<VertexId>(x));
      coeff = std::move(quotient);
      quotient.clear();
      --d;
      found = true;
    }
    if (!found) return std::nullopt;
  }
  // Linear remainder X + coeff[1]: the last root must exceed the previous ones.
  const BigInt last = -coeff[1];
  if (last < BigInt(x) || last > n) return std::nullopt;
  roots.push_back(last.convert_to<VertexId>());
  return roots;
}

namespace {

void verify_power_sums(const PowerSumSummary& summary, std::span<const VertexId> set) {
  std::vector<BigInt> sums(summary.k());
  for (VertexId w : set) add_powers(sums, w);
  if (sums != summary.sums) fail("power sums disagree with the decoded neighbourhood");
}

}  // namespace

std::vector<VertexId> decode(const PowerSumSummary& summary, std::size_t n) {
  const std::size_t d = summary.degree;
  if (d > summary.k()) {
    throw CodecError(CodecErrorKind::degree_out_of_range,
                     "degree " + std::to_string(d) + " exceeds k = " + std::to_string(summary.k()));
  }
  const auto elementary =
      power_sums_to_elementary(std::span<const BigInt>(summary.sums.data(), d));
  auto roots = integer_roots(elementary, n);
  if (!roots) fail("no set of distinct IDs in 1..n has these power sums");
  if (std::find(roots->begin(), roots->end(), summary.id) != roots->end()) {
    fail("decoded neighbourhood contains the node itself");
  }
  verify_power_sums(summary, *roots);
  return std::move(*roots);
}

std::vector<VertexId> decode_bruteforce(const PowerSumSummary& summary, std::size_t n) {
  const std::size_t d = summary.degree;
  const std::size_t k = summary.k();
  if (d > k) {
    throw CodecError(CodecErrorKind::degree_out_of_range,
                     "degree " + std::to_string(d) + " exceeds k = " + std::to_string(k));
  }
  if (d == 0) {
    verify_power_sums(summary, {});
    return {};
  }
  if (summary.sums[0] < 0 || summary.sums[0] > BigInt(d) * n) fail("b_1 out of range");
  const auto target = summary.sums[0].convert_to<std::uint64_t>();
  std::optional<unsigned __int128> target_squares;
  if (k >= 2 && summary.sums[1] >= 0 && msb(summary.sums[1] + 1) < 127) {
    target_squares = summary.sums[1].convert_to<unsigned __int128>();
  }

  std::vector<VertexId> chosen;
  std::vector<std::vector<VertexId>> matches;
  // Ascending subsets a_1 < ... < a_d; the last element is forced by b_1.
  auto search = [&](auto&& self, std::uint64_t low, std::uint64_t rest, std::size_t left) -> void {
    if (left == 1) {
      if (rest < low || rest > n || rest == summary.id) return;
      chosen.push_back(static_cast<VertexId>(rest));
      unsigned __int128 squares = 0;
      for (VertexId w : chosen) squares += static_cast<unsigned __int128>(w) * w;
      if (!target_squares || squares == *target_squares) {
        std::vector<BigInt> sums(k);
        for (VertexId w : chosen) add_powers(sums, w);
        if (sums == summary.sums) matches.push_back(chosen);
      }
      chosen.pop_back();
      return;
    }
    const std::uint64_t tail = left * (left - 1) / 2;
    if (rest < tail) return;
    const std::uint64_t high = std::min<std::uint64_t>(n, (rest - tail) / left);
    for (std::uint64_t a = low; a <= high; ++a) {
      if (a == summary.id) continue;
      chosen.push_back(static_cast<VertexId>(a));
      self(self, a + 1, rest - a, left - 1);
      chosen.pop_back();
    }
  };
  search(search, 1, target, d);

  if (matches.empty()) fail("no subset of 1..n has these power sums");
  if (matches.size() > 1) throw std::logic_error("two subsets share a power-sum signature");
  return matches.front();
}

std::size_t wire_bits(std::size_t n, std::size_t k) { return (2 + k * (k + 1)) * bits_for(n); }

Message serialize(const PowerSumSummary& summary, std::size_t n, std::size_t k) {
  const std::size_t width = bits_for(n);
  const std::size_t sum_width = (k + 1) * width;
  if (summary.k() != k) {
    throw CodecError(CodecErrorKind::field_overflow, "summary carries " + std::to_string(summary.k()) +
                                                         " power sums, expected " + std::to_string(k));
  }
  Message m;
  try {
    m.append_uint(summary.id, width);
    m.append_uint(summary.degree, width);
  } catch (const BitError& e) {
    throw CodecError(CodecErrorKind::field_overflow, e.what());
  }
  for (const BigInt& b : summary.sums) {
    if (b < 0 || (b != 0 && msb(b) >= sum_width)) {
      throw CodecError(CodecErrorKind::field_overflow,
                       "power sum does not fit in " + std::to_string(sum_width) + " bits");
    }
    for (std::size_t i = sum_width; i > 0; --i) m.push_back(bit_test(b, i - 1));
  }
  return m;
}

PowerSumSummary deserialize(const Message& bits, std::size_t n, std::size_t k) {
  if (bits.size() != wire_bits(n, k)) {
    throw CodecError(CodecErrorKind::malformed_message,
                     "message has " + std::to_string(bits.size()) + " bits, expected " +
                         std::to_string(wire_bits(n, k)));
  }
  const std::size_t width = bits_for(n);
  BitReader reader(bits);
  PowerSumSummary s;
  const std::uint64_t id = reader.read_uint(width);
  const std::uint64_t degree = reader.read_uint(width);
  if (id < 1 || id > n) throw CodecError(CodecErrorKind::malformed_message, "ID field outside 1..n");
  if (degree >= n) throw CodecError(CodecErrorKind::malformed_message, "degree field exceeds n - 1");
  s.id = static_cast<VertexId>(id);
  s.degree = degree;
  s.sums.resize(k);
  for (auto& b : s.sums) {
    for (std::size_t left = (k + 1) * width; left > 0;) {
      const std::size_t chunk = std::min<std::size_t>(left, 64);
      b <<= chunk;
      b |= reader.read_uint(chunk);
      left -= chunk;
    }
  }
  return s;
}

}  // namespace referee

#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "referee/bits.hpp"
#include "referee/graph.hpp"

namespace referee {

using BigInt = boost::multiprecision::cpp_int;

/// (id, degree, b_1..b_k) with b_p the sum of p-th powers of the neighbour
/// IDs. Equivalently b = A(k, n) x for the incidence vector x, A[p][i] = i^p.
///
/// For degree <= k the neighbourhood is the only subset of {1..n} with these
/// power sums (two equal-size integer multisets agreeing on the first
/// `size` power sums coincide), so the summary is a lossless encoding.
struct PowerSumSummary {
  VertexId id = 0;
  std::size_t degree = 0;
  std::vector<BigInt> sums;  // sums[p - 1] == b_p

  std::size_t k() const { return sums.size(); }
  friend bool operator==(const PowerSumSummary&, const PowerSumSummary&) = default;
};

enum class CodecErrorKind {
  self_loop,           // encode: id listed among its own neighbours
  invalid_input,       // encode: ID outside 1..n or repeated neighbour
  degree_out_of_range, // decode: degree > k, so uniqueness is not guaranteed
  decode_failure,      // no exact integer solution / repeated roots / inconsistent sums
  field_overflow,      // serialize: a value wider than its wire field
  malformed_message,   // deserialize: wrong length or out-of-range field
};

class CodecError : public std::runtime_error {
 public:
  CodecError(CodecErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  CodecErrorKind kind() const { return kind_; }

 private:
  CodecErrorKind kind_;
};

PowerSumSummary encode(VertexId id, std::span<const VertexId> neighborhood, std::size_t n,
                       std::size_t k);

/// Summary of the non-neighbourhood {1..n} \ N \ {id}. Computed as the power
/// sums of the whole range minus id^p minus the neighbourhood sums, so it
/// costs O(k * |N| + k^2) rather than O(k * n).
PowerSumSummary encode_complement(VertexId id, std::span<const VertexId> neighborhood,
                                  std::size_t n, std::size_t k);

/// S_p(n) = 1^p + ... + n^p for p = 1..k, from the exact recurrence
/// (n+1)^{p+1} - 1 = sum_{j=0}^{p} C(p+1, j) S_j(n).
std::vector<BigInt> power_sums_of_range(std::size_t n, std::size_t k);

/// Removes neighbour w: degree - 1 and b_p - w^p. Throws decode_failure if the
/// result would have negative degree or a negative power sum.
PowerSumSummary without_neighbor(const PowerSumSummary& summary, VertexId w);

/// Recovers the neighbourhood (ascending) of a summary with degree <= k.
///
/// Uses the first `degree` power sums: Newton's identities give the monic
/// polynomial whose roots are the neighbours, and integer_roots finds them.
/// The remaining b_p are checked against the roots, and a neighbourhood that
/// contains `id` itself is rejected.
std::vector<VertexId> decode(const PowerSumSummary& summary, std::size_t n);

/// Newton's identities: i * e_i = sum_{j=1}^{i} (-1)^{j-1} e_{i-j} p_j with
/// e_0 = 1. Throws decode_failure when a division by i is not exact.
std::vector<BigInt> power_sums_to_elementary(std::span<const BigInt> power_sums);

/// Distinct roots in 1..n of x^d - e_1 x^{d-1} + e_2 x^{d-2} - ... + (-1)^d e_d,
/// ascending, or nullopt unless the polynomial splits into d distinct such
/// roots. Candidates are screened by evaluation modulo 2^61 - 1 and confirmed
/// by exact synthetic division, which also deflates the polynomial.
std::optional<std::vector<VertexId>> integer_roots(std::span<const BigInt> elementary,
                                                   std::size_t n);

/// Exhaustive search over degree-sized subsets of {1..n} \ {id}, pruned only
/// by the running sum. A test oracle: cost grows like C(n, degree - 1).
std::vector<VertexId> decode_bruteforce(const PowerSumSummary& summary, std::size_t n);

// Wire layout, big-endian, no padding:
//   id       L bits
//   degree   L bits
//   b_1..b_k (k + 1) * L bits each
// with L = ceil(log2(n + 1)), for W(n, k) = (2 + k(k + 1)) * L bits in total.

std::size_t wire_bits(std::size_t n, std::size_t k);
Message serialize(const PowerSumSummary& summary, std::size_t n, std::size_t k);
PowerSumSummary deserialize(const Message& bits, std::size_t n, std::size_t k);

}  // namespace referee

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "referee/protocol.hpp"

namespace referee {

/// Upper bound on message length as a function of n.
using BitBound = std::function<double(std::size_t n)>;

struct FrugalityReport {
  /// Largest message observed over all sample graphs of each size.
  std::map<std::size_t, std::size_t> max_bits_by_n;
  /// max over n of max_bits / log2(n + 1): the smallest c with
  /// max_bits <= c * log2(n + 1) on the sample.
  double fitted_constant = 0.0;
  /// Set when a bound was supplied: whether it dominates every observation.
  std::optional<bool> within_bound;
  /// max_bits / log2(n + 1) for each n, in increasing n.
  std::map<std::size_t, double> ratio_by_n;
};

/// Measures message sizes only; the global function is never called, so this
/// also works for protocols whose referee would reject the sample graphs.
FrugalityReport frugality_report(const Protocol& protocol, std::span<const LabelledGraph> graphs,
                                 const BitBound& bound = {}, Execution exec = Execution::parallel);

std::string format_frugality_report(const FrugalityReport& report);

}  // namespace referee

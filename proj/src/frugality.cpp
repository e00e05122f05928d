#include "referee/frugality.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace referee {

FrugalityReport frugality_report(const Protocol& protocol, std::span<const LabelledGraph> graphs,
                                 const BitBound& bound, Execution exec) {
  if (graphs.empty()) throw std::invalid_argument("frugality report needs at least one graph");
  FrugalityReport report;
  for (const LabelledGraph& g : graphs) {
    std::size_t max_bits = 0;
    for (const Message& m : message_vector(protocol, g, exec)) max_bits = std::max(max_bits, m.size());
    auto& slot = report.max_bits_by_n[g.n()];
    slot = std::max(slot, max_bits);
  }
  bool holds = true;
  for (auto [n, bits] : report.max_bits_by_n) {
    const double ratio = static_cast<double>(bits) / std::log2(static_cast<double>(n) + 1.0);
    report.ratio_by_n[n] = ratio;
    report.fitted_constant = std::max(report.fitted_constant, ratio);
    if (bound && static_cast<double>(bits) > bound(n)) holds = false;
  }
  if (bound) report.within_bound = holds;
  return report;
}

std::string format_frugality_report(const FrugalityReport& report) {
  std::ostringstream out;
  for (auto [n, bits] : report.max_bits_by_n) {
    out << "n " << n << " max_bits " << bits << " ratio " << report.ratio_by_n.at(n) << "\n";
  }
  out << "fitted_c " << report.fitted_constant << "\n";
  if (report.within_bound) out << "verdict " << (*report.within_bound ? "frugal" : "exceeds-bound") << "\n";
  return out.str();
}

}  // namespace referee

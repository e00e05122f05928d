#include "referee/registry.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

#include "referee/baseline_protocols.hpp"
#include "referee/degeneracy_protocol.hpp"

namespace referee {

std::shared_ptr<const Protocol> make_protocol(std::string_view spec) {
  if (spec == "silent") return std::make_shared<SilentProtocol>();
  if (spec == "neighbors") return std::make_shared<FullNeighborhoodProtocol>(NeighborhoodEncoding::id_list);
  if (spec == "incidence") {
    return std::make_shared<FullNeighborhoodProtocol>(NeighborhoodEncoding::incidence_vector);
  }
  constexpr std::string_view prefix = "degen:k=";
  if (spec.substr(0, prefix.size()) != prefix) {
    throw std::invalid_argument("unknown protocol '" + std::string(spec) + "'");
  }
  std::string_view rest = spec.substr(prefix.size());
  DegeneracyProtocolConfig config;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), config.k);
  if (ec != std::errc() || ptr == rest.data()) {
    throw std::invalid_argument("protocol '" + std::string(spec) + "' needs an integer k");
  }
  rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
  while (!rest.empty()) {
    if (rest.front() != ',') throw std::invalid_argument("malformed protocol spec '" + std::string(spec) + "'");
    rest.remove_prefix(1);
    const auto comma = rest.find(',');
    const std::string_view flag = rest.substr(0, comma);
    if (flag == "generalized") config.generalized = true;
    else if (flag == "recognize") config.mode = DegeneracyMode::recognize;
    else throw std::invalid_argument("unknown protocol option '" + std::string(flag) + "'");
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma);
  }
  return std::make_shared<DegeneracyProtocol>(config);
}

}  // namespace referee

#pragma once

#include <memory>
#include <string_view>

#include "referee/protocol.hpp"

namespace referee {

/// Builds a protocol from its command-line spec:
///   degen:k=<K>[,generalized][,recognize]
///   silent | neighbors | incidence
/// Throws std::invalid_argument for anything else.
std::shared_ptr<const Protocol> make_protocol(std::string_view spec);

}  // namespace referee

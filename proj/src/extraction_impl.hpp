#pragma once

#include <vector>

#include "tempiso/engine.hpp"

namespace tempiso::detail {

// Enumerates every maximal connected time-respecting interaction set.
// Clears *finished when the deadline cuts the enumeration short.
std::vector<std::vector<InteractionId>> extract_complete(const TemporalGraph& host, Threshold d,
                                                         const ExtractOptions& options,
                                                         bool* finished);

}  // namespace tempiso::detail

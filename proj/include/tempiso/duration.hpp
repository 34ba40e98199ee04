#pragma once

#include <string>
#include <string_view>

#include "tempiso/constraints.hpp"
#include "tempiso/temporal_graph.hpp"

namespace tempiso {

/// "90", "90s", "3d", "2y"; a bare number is seconds. Fractions allowed with
/// d/y suffixes ("1.5d").
Duration parse_duration(std::string_view text);

/// As parse_duration, plus "inf".
Threshold parse_threshold(std::string_view text);

/// Shortest exact rendering: "10d", "1y", "3600s", "inf".
std::string format_threshold(Threshold d);

}  // namespace tempiso

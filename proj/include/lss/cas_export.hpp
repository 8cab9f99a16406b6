#pragma once

#include <string>
#include <string_view>

#include "lss/graph.hpp"

namespace lss {

enum class Dialect { Macaulay2, Singular };

// Accepts "macaulay2"/"m2" and "singular" (case-insensitive). Throws UnknownDialect.
Dialect parse_dialect(std::string_view name);
std::string_view dialect_name(Dialect d);

// Self-contained script declaring the ring and the (twisted) LSS ideal of g,
// then printing its generator count and codimension. Byte-stable.
std::string export_cas_script(const Graph& g, int d, bool twisted, Dialect dialect);

}  // namespace lss

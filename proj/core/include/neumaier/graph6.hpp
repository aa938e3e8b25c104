#pragma once

#include <string>
#include <string_view>

#include "neumaier/graph.hpp"

namespace neumaier {

/// Encode in the standard graph6 format: 63-offset length byte(s)
/// followed by the upper triangle in column-major order packed into
/// 6-bit groups. Supports 1 <= v <= 258047.
std::string graph6_encode(const Graph& g);

/// Decode a graph6 string. Rejects malformed input, including non-zero
/// padding bits and trailing bytes.
Graph graph6_decode(std::string_view s);

} // namespace neumaier

#pragma once

#include <string>
#include <string_view>

#include "lapspread/graph.hpp"

namespace lapspread {

/// Largest order accepted by from_graph6.
inline constexpr std::size_t kMaxGraph6Order = std::size_t{1} << 18;

// graph6 packs the upper triangle column by column (j = 1..n-1, i < j),
// six bits per byte, most significant bit first, each byte biased by 63.
// The order prefix is one byte for n <= 62, '~' plus three bytes for
// n <= 258047, and "~~" plus six bytes beyond that.

/// Decodes one graph6 string, optionally prefixed by ">>graph6<<".
/// Throws ParseError on a malformed prefix, a short or overlong body, or a
/// byte outside 0x3F..0x7E.
Graph from_graph6(std::string_view text);

/// Canonical encoding (zero padding bits, no header, no newline).
std::string to_graph6(const Graph& g);

}  // namespace lapspread

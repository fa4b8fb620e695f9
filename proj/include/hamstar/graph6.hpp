#pragma once

#include <string>
#include <string_view>

#include "hamstar/graph.hpp"

namespace hamstar {

// graph6 codec (size prefix, then the upper triangle in column order
// (0,1),(0,2),(1,2),(0,3),... packed big-endian six bits per byte, +63).
// The line must not contain the trailing newline; an optional ">>graph6<<"
// header is accepted. Throws ParseError carrying the offending byte offset.
Graph parse_graph6(std::string_view line);

std::string to_graph6(const Graph& g);

}  // namespace hamstar

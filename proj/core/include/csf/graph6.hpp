#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "csf/graph.hpp"

namespace csf {

// One graph6 line (no trailing newline).  Supports the single-byte order
// form, so n must be < 63.
std::string graph6_encode(const Graph& g);

// Decodes one graph6 line.  Errors name the offending byte offset.
Graph graph6_decode(std::string_view line);

// Decodes a whole file: one graph per line, optional ">>graph6<<" header,
// blank lines ignored.  Error messages carry line numbers and byte offsets.
std::vector<Graph> read_graph6(std::string_view text);

// Newline-terminated graph6 lines for each graph.
std::string write_graph6(std::span<const Graph> graphs);

}  // namespace csf

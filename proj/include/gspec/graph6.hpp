#pragma once

#include "gspec/graph.hpp"

#include <string>
#include <string_view>

namespace gspec {

/// Parses one graph6 record. An optional ">>graph6<<" header and a trailing
/// "\n" or "\r\n" are accepted; anything else outside the record is an error.
/// Errors are ParseError with the 1-based byte position of the fault.
Graph parse_graph6(std::string_view text);

/// graph6 encoding of the labeled graph (no relabeling).
std::string write_graph6(const Graph& g);

}  // namespace gspec

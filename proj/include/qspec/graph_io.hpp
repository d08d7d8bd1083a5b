#pragma once

// graph6 and edge-list codecs.
//
// graph6: header N(n) (one byte 63+n for n <= 62, or '~' plus three 6-bit
// bytes for n <= 258047), then the upper triangle of the adjacency matrix
// column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits
// per byte, most significant first, each byte offset by 63.
//
// Edge list: first line "n m", then m lines "u v" with 0-indexed vertices.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qspec/graph.hpp"

namespace qspec {

/// Thrown for malformed graph text; the message names the offending input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" prefix and surrounding whitespace.
Graph from_graph6(std::string_view text);
bool looks_like_graph6(std::string_view text);

std::string to_edge_list(const Graph& g);
Graph read_edge_list(std::istream& in);
Graph from_edge_list(std::string_view text);

}  // namespace qspec

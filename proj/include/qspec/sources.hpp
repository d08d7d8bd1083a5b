#pragma once

// Resolves the graph argument of the command-line tool: a family spec
// ("Kn:<n>", "Kbip:<r>,<s>", "Kjoin:<n>,<k>,<r>"), an edge-list file, a
// graph6 string, or "-" for stdin (edge list or graph6, detected).

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "qspec/closed_forms.hpp"
#include "qspec/graph.hpp"

namespace qspec {

class SourceNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FamilySpec {
  enum class Kind { complete, complete_bipartite, join_split };
  Kind kind = Kind::complete;
  int a = 0;
  int b = 0;
  int c = 0;

  Graph build() const;
  ClosedFormSpectrum closed_form() const;
};

/// nullopt when `text` does not start with a family prefix; ParseError when
/// it does but the parameters are malformed or out of range.
std::optional<FamilySpec> parse_family(const std::string& text);

struct GraphSource {
  std::string label;
  Graph graph;
  std::optional<FamilySpec> family;
};

/// Throws ParseError for unparsable input and SourceNotFound when a token
/// that looks like a path does not exist.
GraphSource load_graph_source(const std::string& token, std::istream& stdin_stream);

}  // namespace qspec

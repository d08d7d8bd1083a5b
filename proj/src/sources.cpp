#include "qspec/sources.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

#include "qspec/graph_io.hpp"

namespace qspec {

namespace {

std::vector<int> parse_ints(const std::string& token, const std::string& body, std::size_t count) {
  std::vector<int> out;
  std::string_view rest = body;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view field = rest.substr(0, comma);
    int v = 0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
      throw ParseError("bad family parameter '" + std::string(field) + "' in '" + token + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (out.size() != count) {
    throw ParseError("'" + token + "' needs " + std::to_string(count) + " parameter(s)");
  }
  return out;
}

}  // namespace

Graph FamilySpec::build() const {
  switch (kind) {
    case Kind::complete: return complete(a);
    case Kind::complete_bipartite: return complete_bipartite(a, b);
    case Kind::join_split: return join_split(a, b, c);
  }
  throw std::logic_error("unknown family");
}

ClosedFormSpectrum FamilySpec::closed_form() const {
  switch (kind) {
    case Kind::complete: return spectrum_complete(a);
    case Kind::complete_bipartite: return spectrum_complete_bipartite(a, b);
    case Kind::join_split: return spectrum_join_split(a, b, c);
  }
  throw std::logic_error("unknown family");
}

std::optional<FamilySpec> parse_family(const std::string& text) {
  FamilySpec f;
  std::vector<int> p;
  if (text.starts_with("Kn:")) {
    p = parse_ints(text, text.substr(3), 1);
    f = {FamilySpec::Kind::complete, p[0], 0, 0};
    if (f.a < 1) throw ParseError("'" + text + "': K_n needs n >= 1");
  } else if (text.starts_with("Kbip:")) {
    p = parse_ints(text, text.substr(5), 2);
    f = {FamilySpec::Kind::complete_bipartite, p[0], p[1], 0};
    if (f.a < 1 || f.b < 1) throw ParseError("'" + text + "': K_{r,s} needs r, s >= 1");
  } else if (text.starts_with("Kjoin:")) {
    p = parse_ints(text, text.substr(6), 3);
    f = {FamilySpec::Kind::join_split, p[0], p[1], p[2]};
    if (f.b < 1 || f.b > f.a - 2 || f.c < 1 || 2 * f.c > f.a - f.b) {
      throw ParseError("'" + text + "': Kjoin:n,k,r needs 1 <= k <= n-2 and 1 <= r <= (n-k)/2");
    }
  } else {
    return std::nullopt;
  }
  return f;
}

namespace {

Graph parse_text_graph(const std::string& text, const std::string& label) {
  std::istringstream probe(text);
  std::string first;
  std::getline(probe, first);
  std::istringstream header(first);
  long long n = 0;
  long long m = 0;
  if (header >> n >> m) return from_edge_list(text);
  try {
    return from_graph6(first);
  } catch (const ParseError& e) {
    throw ParseError("cannot parse graph from " + label + ": " + e.what());
  }
}

}  // namespace

GraphSource load_graph_source(const std::string& token, std::istream& stdin_stream) {
  if (auto fam = parse_family(token)) return {token, fam->build(), fam};
  if (token == "-") {
    std::ostringstream buf;
    buf << stdin_stream.rdbuf();
    return {"stdin", parse_text_graph(buf.str(), "stdin"), std::nullopt};
  }
  if (std::filesystem::is_regular_file(token)) {
    std::ifstream in(token);
    if (!in) throw SourceNotFound("cannot open '" + token + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return {token, parse_text_graph(buf.str(), "'" + token + "'"), std::nullopt};
  }
  if (looks_like_graph6(token)) return {token, from_graph6(token), std::nullopt};
  // '.' and '/' never occur in graph6, so such tokens were meant as paths.
  if (token.find_first_of("./") != std::string::npos) throw SourceNotFound("no such file '" + token + "'");
  throw ParseError("unrecognised graph input '" + token + "'");
}

}  // namespace qspec

#include "qspec/graph_io.hpp"

#include <istream>
#include <sstream>
#include <vector>

namespace qspec {

namespace {

constexpr int kSmallMax = 62;
constexpr int kMediumMax = 258047;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool is_g6_char(char c) { return c >= 63 && c <= 126; }

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMediumMax) throw std::invalid_argument("graph6 encoder supports n <= 258047");
  std::string out;
  if (n <= kSmallMax) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

Graph from_graph6(std::string_view text) {
  std::string_view s = trim(text);
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  if (s.empty()) throw ParseError("empty graph6 string");
  for (char c : s) {
    if (!is_g6_char(c)) throw ParseError("invalid graph6 character in '" + std::string(s) + "'");
  }
  std::size_t pos = 0;
  int n = 0;
  if (s[0] != '~') {
    n = s[0] - 63;
    pos = 1;
  } else {
    if (s.size() >= 2 && s[1] == '~') throw ParseError("graph6 orders above 258047 are not supported");
    if (s.size() < 4) throw ParseError("truncated graph6 header in '" + std::string(s) + "'");
    for (int i = 1; i <= 3; ++i) n = (n << 6) | (s[i] - 63);
    pos = 4;
  }
  if (n < 1) throw ParseError("graph6 string encodes an empty vertex set");
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (s.size() - pos != nbytes) {
    throw ParseError("graph6 body for n=" + std::to_string(n) + " needs " + std::to_string(nbytes) +
                     " bytes, got " + std::to_string(s.size() - pos) + " in '" + std::string(s) + "'");
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = s[pos + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (bit % 6 != 0) {
    const int last = s.back() - 63;
    if (last & ((1 << (6 - bit % 6)) - 1)) throw ParseError("nonzero graph6 padding bits in '" + std::string(s) + "'");
  }
  return Graph::from_edges(n, edges);
}

bool looks_like_graph6(std::string_view text) {
  try {
    from_graph6(text);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&](std::string& dest) {
    while (std::getline(in, dest)) {
      ++line_no;
      if (!trim(dest).empty()) return true;
    }
    return false;
  };
  if (!next_line(line)) throw ParseError("edge list is empty");
  std::istringstream header(line);
  long long n = 0;
  long long m = 0;
  std::string extra;
  if (!(header >> n >> m) || (header >> extra) || n < 1 || m < 0) {
    throw ParseError("edge list line " + std::to_string(line_no) + ": expected header 'n m', got '" + line + "'");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(line)) {
      throw ParseError("edge list ends after " + std::to_string(i) + " of " + std::to_string(m) + " edges");
    }
    std::istringstream row(line);
    long long u = 0;
    long long v = 0;
    if (!(row >> u >> v) || (row >> extra)) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": expected 'u v', got '" + line + "'");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": vertex out of range in '" + line + "'");
    }
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  if (next_line(line)) {
    throw ParseError("edge list line " + std::to_string(line_no) + ": more than " + std::to_string(m) + " edges");
  }
  try {
    return Graph::from_edges(static_cast<int>(n), edges);
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

Graph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

}  // namespace qspec

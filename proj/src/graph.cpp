#include "qspec/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace qspec {

namespace {

void require_vertex(int n, int v) {
  if (v < 0 || v >= n) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n=" +
                                std::to_string(n));
  }
}

std::uint64_t low_bits(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 1) throw std::invalid_argument("graph order must be positive, got " + std::to_string(n));
  rows_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void Graph::set_edge(int u, int v) {
  row(u)[v / 64] |= std::uint64_t{1} << (v % 64);
  row(v)[u / 64] |= std::uint64_t{1} << (u % 64);
  ++m_;
}

Graph Graph::empty(int n) { return Graph(n); }

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& e : edges) {
    require_vertex(n, e.u);
    require_vertex(n, e.v);
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (g.adjacent(e.u, e.v)) {
      throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + "-" +
                                  std::to_string(e.v));
    }
    g.set_edge(e.u, e.v);
  }
  return g;
}

int Graph::degree(int v) const {
  require_vertex(n_, v);
  int d = 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(row(v)[w]);
  return d;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::adjacent(int u, int v) const {
  require_vertex(n_, u);
  require_vertex(n_, v);
  return (row(u)[v / 64] >> (v % 64)) & 1U;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.push_back({u, v});
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

std::uint64_t Graph::row_mask(int v) const {
  if (n_ > 64) throw std::invalid_argument("row_mask requires n <= 64");
  require_vertex(n_, v);
  return row(v)[0];
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph::from_edges(n, e);
}

Graph complete_bipartite(int r, int s) {
  if (r < 1 || s < 1) throw std::invalid_argument("complete bipartite graph needs r, s >= 1");
  std::vector<Edge> e;
  for (int u = 0; u < r; ++u)
    for (int v = r; v < r + s; ++v) e.push_back({u, v});
  return Graph::from_edges(r + s, e);
}

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return Graph::from_edges(n, e);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.push_back({v, (v + 1) % n});
  return Graph::from_edges(n, e);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int shift = g.order();
  auto e = g.edges();
  for (const auto& [u, v] : h.edges()) e.push_back({u + shift, v + shift});
  return Graph::from_edges(g.order() + h.order(), e);
}

Graph join(const Graph& g, const Graph& h) {
  const int shift = g.order();
  auto e = g.edges();
  for (const auto& [u, v] : h.edges()) e.push_back({u + shift, v + shift});
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) e.push_back({u, v + shift});
  return Graph::from_edges(g.order() + h.order(), e);
}

Graph join_split(int n, int k, int r) {
  if (k < 1 || r < 1 || n - k - r < 1) {
    throw std::invalid_argument("join_split needs k, r >= 1 and n - k - r >= 1");
  }
  return join(complete(k), disjoint_union(complete(r), complete(n - k - r)));
}

Graph delete_edge(const Graph& g, int u, int v) {
  if (u == v || !g.adjacent(u, v)) {
    throw std::invalid_argument("cannot delete absent edge " + std::to_string(u) + "-" +
                                std::to_string(v));
  }
  Graph out = g;
  out.row(u)[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  out.row(v)[u / 64] &= ~(std::uint64_t{1} << (u % 64));
  --out.m_;
  return out;
}

Graph add_edge(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (g.adjacent(u, v)) {
    throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                " already present");
  }
  Graph out = g;
  out.set_edge(u, v);
  return out;
}

ComponentSummary components(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n, -1);
  std::vector<int> stack;
  ComponentSummary s;
  for (int start = 0; start < n; ++start) {
    if (colour[start] >= 0) continue;
    ++s.total_components;
    bool bipartite = true;
    colour[start] = 0;
    stack.push_back(start);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w) {
        if (!g.adjacent(v, w)) continue;
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          stack.push_back(w);
        } else if (colour[w] == colour[v]) {
          bipartite = false;
        }
      }
    }
    if (bipartite) ++s.bipartite_components;
  }
  s.is_connected = s.total_components == 1;
  s.is_bipartite = s.bipartite_components == s.total_components;
  return s;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n == 1) return 0;
  if (g.edge_count() == static_cast<std::int64_t>(n) * (n - 1) / 2) return n - 1;
  if (!components(g).is_connected) return 0;
  if (n > 64) throw std::invalid_argument("vertex_connectivity supports n <= 64");
  std::vector<std::uint64_t> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.row_mask(v);
  return detail::mask_vertex_connectivity(adj, n);
}

namespace detail {

bool mask_connected(std::span<const std::uint64_t> adj, std::uint64_t alive) {
  if (alive == 0) return true;
  std::uint64_t seen = alive & (~alive + 1);
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == alive;
}

bool mask_bipartite(std::span<const std::uint64_t> adj, std::uint64_t alive) {
  std::uint64_t left = 0;
  std::uint64_t right = 0;
  for (std::uint64_t todo = alive; todo;) {
    const std::uint64_t root = todo & (~todo + 1);
    left |= root;
    std::uint64_t frontier = root;
    bool on_left = true;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= alive;
      // Neighbours of the current layer must sit on the opposite side.
      if (next & (on_left ? left : right)) return false;
      next &= ~(left | right);
      (on_left ? right : left) |= next;
      frontier = next;
      on_left = !on_left;
    }
    todo &= ~(left | right);
  }
  return true;
}

namespace {

// Is there an S with |S| == size whose removal disconnects the graph?
bool separator_of_size(std::span<const std::uint64_t> adj, int n, int size) {
  const std::uint64_t all = low_bits(n);
  if (size == 0) return !mask_connected(adj, all);
  std::uint64_t s = low_bits(size);
  const std::uint64_t limit = n >= 64 ? 0 : std::uint64_t{1} << n;
  while (limit == 0 || s < limit) {
    if (!mask_connected(adj, all & ~s)) return true;
    // Gosper's hack: next subset with the same popcount.
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    if (r == 0) break;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return false;
}

bool is_complete(std::span<const std::uint64_t> adj, int n) {
  const std::uint64_t all = low_bits(n);
  for (int v = 0; v < n; ++v)
    if ((adj[v] | (std::uint64_t{1} << v)) != all) return false;
  return true;
}

}  // namespace

bool mask_kappa_at_most(std::span<const std::uint64_t> adj, int n, int k) {
  if (is_complete(adj, n)) return k >= n - 1;
  for (int s = 0; s <= std::min(k, n - 2); ++s)
    if (separator_of_size(adj, n, s)) return true;
  return false;
}

int mask_vertex_connectivity(std::span<const std::uint64_t> adj, int n) {
  if (n <= 1) return 0;
  if (is_complete(adj, n)) return n - 1;
  for (int s = 0; s <= n - 2; ++s)
    if (separator_of_size(adj, n, s)) return s;
  return n - 1;
}

}  // namespace detail

}  // namespace qspec

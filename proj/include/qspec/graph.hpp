#pragma once

// Simple undirected graphs stored as per-vertex adjacency bitsets, the
// constructors for the complete / complete-bipartite / join families and
// the structural predicates the spectral code depends on.

#include <cstdint>
#include <span>
#include <vector>

namespace qspec {

struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple graph on vertices {0, ..., n-1}.
///
/// Rows are bitsets of 64-bit words; vertex v's neighbours live in
/// words [v * words_per_row(), (v + 1) * words_per_row()).
class Graph {
 public:
  /// Builds a graph from an edge list. Rejects self-loops, duplicates and
  /// out-of-range endpoints with std::invalid_argument. Edges may be given
  /// in either orientation.
  static Graph from_edges(int n, std::span<const Edge> edges);

  /// Empty graph (no edges) on n >= 1 vertices.
  static Graph empty(int n);

  int order() const { return n_; }
  std::int64_t edge_count() const { return m_; }
  int degree(int v) const;
  int max_degree() const;
  bool adjacent(int u, int v) const;

  /// Edges sorted lexicographically with u < v.
  std::vector<Edge> edges() const;
  std::vector<int> degrees() const;

  /// Neighbourhood of v as a bitmask; only valid when order() <= 64.
  std::uint64_t row_mask(int v) const;

  int words_per_row() const { return words_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  Graph(int n);
  void set_edge(int u, int v);
  std::uint64_t* row(int v) { return rows_.data() + static_cast<std::size_t>(v) * words_; }
  const std::uint64_t* row(int v) const {
    return rows_.data() + static_cast<std::size_t>(v) * words_;
  }

  int n_ = 0;
  int words_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::uint64_t> rows_;

  friend Graph delete_edge(const Graph&, int, int);
  friend Graph add_edge(const Graph&, int, int);
};

struct ComponentSummary {
  int total_components = 0;
  int bipartite_components = 0;
  bool is_connected = false;
  bool is_bipartite = false;
};

Graph complete(int n);
Graph complete_bipartite(int r, int s);
Graph path(int n);
Graph cycle(int n);

/// g's vertices keep their indices; h's are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

/// K_k ∨ (K_r ∪ K_{n-k-r}); vertices 0..k-1 are the K_k block, then the
/// K_r block, then the K_{n-k-r} block.
Graph join_split(int n, int k, int r);

/// Throws std::invalid_argument when {u, v} is not an edge.
Graph delete_edge(const Graph& g, int u, int v);
/// Throws std::invalid_argument when {u, v} is already an edge or a loop.
Graph add_edge(const Graph& g, int u, int v);

ComponentSummary components(const Graph& g);

/// Vertex connectivity by increasing-size subset search, O(2^n) worst case.
/// Returns 0 for disconnected graphs (and n = 1), n - 1 for complete graphs.
/// Requires n <= 64 unless the graph is complete or disconnected.
int vertex_connectivity(const Graph& g);

namespace detail {

// Mask-level helpers shared with the exhaustive enumerator. `adj[v]` is the
// neighbourhood bitmask of v; `alive` restricts the vertex set.
bool mask_connected(std::span<const std::uint64_t> adj, std::uint64_t alive);
bool mask_bipartite(std::span<const std::uint64_t> adj, std::uint64_t alive);
/// True when some S with |S| <= k disconnects the graph; the graph must be
/// connected. Complete graphs never qualify unless k >= n - 1.
bool mask_kappa_at_most(std::span<const std::uint64_t> adj, int n, int k);
int mask_vertex_connectivity(std::span<const std::uint64_t> adj, int n);

}  // namespace detail

}  // namespace qspec

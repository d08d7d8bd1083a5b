#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check: adjacency is a plain bool matrix, connectivity is a
// DFS over it, power sums come from traces of matrix powers.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "qspec/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<double>>;
using Adjacency = std::vector<std::vector<bool>>;

inline Adjacency adjacency(const qspec::Graph& g) {
  Adjacency a(g.order(), std::vector<bool>(g.order(), false));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = true;
  return a;
}

inline bool connected_without(const Adjacency& a, std::uint64_t removed) {
  const int n = static_cast<int>(a.size());
  int start = -1;
  int alive = 0;
  for (int v = 0; v < n; ++v) {
    if (!((removed >> v) & 1U)) {
      ++alive;
      if (start < 0) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{start};
  seen[start] = true;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w) {
      if (a[v][w] && !seen[w] && !((removed >> w) & 1U)) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == alive;
}

/// Minimum |S| over every vertex subset with G - S disconnected; n - 1 if none.
inline int kappa(const qspec::Graph& g) {
  const auto a = adjacency(g);
  const int n = g.order();
  int best = n - 1;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const int size = __builtin_popcountll(s);
    if (size >= best || n - size < 2) continue;
    if (!connected_without(a, s)) best = size;
  }
  return best;
}

/// Bipartite component count via 2-colouring on the bool matrix.
inline int bipartite_components(const qspec::Graph& g) {
  const auto a = adjacency(g);
  const int n = g.order();
  std::vector<int> colour(n, -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    bool ok = true;
    std::vector<int> queue{s};
    colour[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int v = queue[i];
      for (int w = 0; w < n; ++w) {
        if (!a[v][w]) continue;
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          ok = false;
        }
      }
    }
    if (ok) ++count;
  }
  return count;
}

inline Matrix q_matrix(const qspec::Graph& g) {
  const auto a = adjacency(g);
  const int n = g.order();
  Matrix q(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a[i][j]) {
        q[i][j] = 1.0;
        q[i][i] += 1.0;
      }
    }
  }
  return q;
}

inline Matrix multiply(const Matrix& x, const Matrix& y) {
  const std::size_t n = x.size();
  Matrix z(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
  return z;
}

/// trace(Q^p) = Σ q_i^p, equal to S_p for integer p >= 1.
inline double trace_power(const qspec::Graph& g, int p) {
  const Matrix q = q_matrix(g);
  Matrix acc = q;
  for (int i = 1; i < p; ++i) acc = multiply(acc, q);
  double t = 0.0;
  for (std::size_t i = 0; i < acc.size(); ++i) t += acc[i][i];
  return t;
}

/// Dense scan of f(x) = x(1-x)^a + (1-x)x^a over [0, 1].
struct GridMax {
  double value;
  double argmax;
};

inline GridMax f_grid_max(double alpha, int points = 1000001) {
  GridMax best{-1.0, 0.0};
  for (int i = 0; i < points; ++i) {
    const double x = double(i) / (points - 1);
    const double v = x * std::pow(1.0 - x, alpha) + (1.0 - x) * std::pow(x, alpha);
    if (v > best.value) best = {v, x};
  }
  if (best.argmax > 0.5) best.argmax = 1.0 - best.argmax;
  return best;
}

/// S_α(K_{r,n-r}) written out from the part sizes.
inline double s_alpha_kbip(int n, int r, double alpha) {
  const int s = n - r;
  double v = std::pow(double(n), alpha);
  if (s > 1) v += (s - 1) * std::pow(double(r), alpha);
  if (r > 1) v += (r - 1) * std::pow(double(s), alpha);
  return v;
}

inline qspec::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<qspec::Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.push_back({u, v});
  return qspec::Graph::from_edges(n, e);
}

/// Random bipartite graph on parts {0..a-1}, {a..n-1}.
inline qspec::Graph random_bipartite(std::mt19937_64& rng, int a, int b, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<qspec::Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v)
      if (coin(rng)) e.push_back({u, v});
  return qspec::Graph::from_edges(a + b, e);
}

}  // namespace oracle

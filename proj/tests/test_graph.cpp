#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qspec/graph.hpp"

using namespace qspec;

namespace {

int degree_sum(const Graph& g) {
  const auto d = g.degrees();
  return std::accumulate(d.begin(), d.end(), 0);
}

std::int64_t choose2(int x) { return std::int64_t{x} * (x - 1) / 2; }

}  // namespace

TEST_CASE("complete graphs") {
  const Graph k4 = complete(4);
  CHECK(k4.edge_count() == 6);
  for (int d : k4.degrees()) CHECK(d == 3);
  CHECK(complete(1).edge_count() == 0);
  CHECK(complete(10).edge_count() == 45);
  CHECK_THROWS_AS(complete(0), std::invalid_argument);
}

TEST_CASE("complete bipartite graphs") {
  const Graph k23 = complete_bipartite(2, 3);
  CHECK(k23.order() == 5);
  CHECK(k23.edge_count() == 6);
  CHECK(k23.degrees() == std::vector<int>{3, 3, 2, 2, 2});
  CHECK(complete_bipartite(1, 1).edges() == std::vector<Edge>{{0, 1}});

  const Graph k55 = complete_bipartite(5, 5);
  CHECK(k55.edge_count() == 25);
  const auto d = k55.degrees();
  CHECK_FALSE(std::all_of(d.begin(), d.end(), [](int x) { return x == 3; }));
  CHECK(std::all_of(d.begin(), d.end(), [](int x) { return x == 5; }));

  CHECK_THROWS_AS(complete_bipartite(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(complete_bipartite(2, 0), std::invalid_argument);
}

TEST_CASE("join and disjoint union") {
  CHECK(join(complete(1), complete(1)) == complete(2));

  const Graph g = join(complete(2), disjoint_union(complete(1), complete(2)));
  CHECK(g.order() == 5);
  CHECK(g.edge_count() == 8);
  // Left block keeps its labels: vertices 0, 1 are the K_2.
  CHECK(g.adjacent(0, 1));
  CHECK(g.degree(0) == 4);
  CHECK(g.degree(2) == 2);

  for (int n = 4; n <= 12; ++n)
    for (int k = 1; k <= n - 2; ++k)
      for (int r = 1; 2 * r <= n - k; ++r) {
        const Graph j = join_split(n, k, r);
        CHECK(j.edge_count() == choose2(k) + choose2(r) + choose2(n - k - r) + std::int64_t{k} * (n - k));
        CHECK(j == join(complete(k), disjoint_union(complete(r), complete(n - k - r))));
      }

  const Graph u = disjoint_union(complete(1), complete(1));
  CHECK(u.order() == 2);
  CHECK(u.edge_count() == 0);
  const Graph k3k2 = disjoint_union(complete(3), complete(2));
  CHECK(k3k2.order() == 5);
  CHECK(k3k2.edge_count() == 4);
  CHECK(k3k2.adjacent(3, 4));
  CHECK_FALSE(k3k2.adjacent(2, 3));
  CHECK(components(k3k2).total_components == 2);
}

TEST_CASE("edge deletion") {
  const Graph p3 = delete_edge(complete(3), 0, 2);
  CHECK(p3 == path(3));
  const Graph k2 = delete_edge(complete(2), 1, 0);
  CHECK(k2.order() == 2);
  CHECK(k2.edge_count() == 0);
  CHECK_THROWS_AS(delete_edge(path(3), 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(delete_edge(path(3), 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(add_edge(path(3), 0, 1), std::invalid_argument);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + trial % 12, 0.5);
    const auto edges = g.edges();
    if (edges.empty()) continue;
    const Edge e = edges[rng() % edges.size()];
    const Graph h = delete_edge(g, e.u, e.v);
    CHECK(h.edge_count() == g.edge_count() - 1);
    CHECK_FALSE(h.adjacent(e.u, e.v));
    CHECK(add_edge(h, e.v, e.u).edges() == edges);
  }
}

TEST_CASE("graph validation") {
  const std::vector<Edge> loop{{1, 1}};
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  const std::vector<Edge> range{{0, 3}};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, dup), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, range), std::invalid_argument);
  CHECK_THROWS_AS(Graph::empty(0), std::invalid_argument);

  // Wider than one 64-bit word per row.
  const Graph big = complete_bipartite(40, 50);
  CHECK(big.edge_count() == 2000);
  CHECK(big.adjacent(0, 89));
  CHECK_FALSE(big.adjacent(70, 89));
  CHECK(big.degree(89) == 40);
}

TEST_CASE("component summary") {
  auto c = components(complete_bipartite(2, 3));
  CHECK(c.total_components == 1);
  CHECK(c.bipartite_components == 1);
  CHECK(c.is_connected);
  CHECK(c.is_bipartite);

  c = components(complete(4));
  CHECK(c.total_components == 1);
  CHECK(c.bipartite_components == 0);
  CHECK_FALSE(c.is_bipartite);

  c = components(disjoint_union(complete(3), complete(2)));
  CHECK(c.total_components == 2);
  CHECK(c.bipartite_components == 1);
  CHECK_FALSE(c.is_connected);

  c = components(Graph::empty(3));
  CHECK(c.total_components == 3);
  CHECK(c.bipartite_components == 3);

  CHECK(components(cycle(5)).bipartite_components == 0);
  CHECK(components(cycle(6)).bipartite_components == 1);

  for (int r = 1; r <= 8; ++r)
    for (int s = 1; s <= 8; ++s) CHECK(components(complete_bipartite(r, s)).is_bipartite);
}

TEST_CASE("component summary agrees with the colouring oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + trial % 14, 0.15 + 0.1 * (trial % 4));
    const auto c = components(g);
    CHECK(c.bipartite_components == oracle::bipartite_components(g));
    CHECK(c.bipartite_components <= c.total_components);
    CHECK(c.is_connected == (c.total_components == 1));
  }
}

TEST_CASE("degree sum is twice the edge count") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + trial % 20, 0.4);
    CHECK(degree_sum(g) == 2 * g.edge_count());
  }
  CHECK(degree_sum(join_split(11, 1, 5)) == 60);
}

TEST_CASE("vertex connectivity") {
  CHECK(vertex_connectivity(complete(5)) == 4);
  CHECK(vertex_connectivity(complete(1)) == 0);
  CHECK(vertex_connectivity(path(4)) == 1);
  CHECK(vertex_connectivity(cycle(6)) == 2);
  CHECK(vertex_connectivity(complete_bipartite(3, 4)) == 3);
  CHECK(vertex_connectivity(disjoint_union(complete(3), complete(3))) == 0);

  for (int n = 3; n <= 8; ++n)
    for (int k = 1; k <= std::min(3, n - 2); ++k) {
      const Graph g = join_split(n, k, 1);
      CHECK(oracle::kappa(g) == k);
      CHECK(vertex_connectivity(g) == k);
    }
}

TEST_CASE("join-split connectivity equals k up to n = 9") {
  for (int n = 3; n <= 9; ++n)
    for (int k = 1; k <= n - 2; ++k)
      for (int r = 1; 2 * r <= n - k; ++r) {
        const Graph g = join_split(n, k, r);
        CHECK(vertex_connectivity(g) == k);
        CHECK(oracle::kappa(g) == k);
      }
}

TEST_CASE("vertex connectivity agrees with brute force on random graphs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + trial % 9, 0.35 + 0.1 * (trial % 5));
    const int expected = components(g).is_connected ? oracle::kappa(g) : 0;
    CHECK(vertex_connectivity(g) == expected);
  }
}

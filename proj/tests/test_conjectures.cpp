#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qspec/closed_forms.hpp"
#include "qspec/conjectures.hpp"
#include "qspec/report.hpp"
#include "qspec/spectral.hpp"

using namespace qspec;

namespace {

// Max S_α over every connected bipartite labeled graph on n vertices,
// built colour class by colour class rather than by the library enumerator.
double max_connected_bipartite(int n, double alpha) {
  double best = -1.0;
  for (std::uint32_t colour = 0; colour < (1U << (n - 1)); ++colour) {
    std::vector<int> left{0}, right;
    for (int v = 1; v < n; ++v) ((colour >> (v - 1)) & 1U ? left : right).push_back(v);
    if (right.empty()) continue;
    std::vector<Edge> slots;
    for (int u : left)
      for (int v : right) slots.push_back({u, v});
    for (std::uint32_t m = 0; m < (1U << slots.size()); ++m) {
      std::vector<Edge> e;
      for (std::size_t i = 0; i < slots.size(); ++i)
        if ((m >> i) & 1U) e.push_back(slots[i]);
      const Graph g = Graph::from_edges(n, e);
      if (!oracle::connected_without(oracle::adjacency(g), 0)) continue;
      best = std::max(best, s_alpha(spectrum_of(g), alpha));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("f profile") {
  CHECK(f_profile(0.2, 4.0) == doctest::Approx(0.0832).epsilon(1e-14));
  CHECK(f_profile(0.0, 2.0) == 0.0);
  CHECK(f_profile(1.0, 2.0) == 0.0);
  for (double a : {0.3, 1.0, 2.5, 7.0}) CHECK(f_profile(0.5, a) == doctest::Approx(std::pow(2.0, -a)).epsilon(1e-15));
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ux(0.0, 1.0), ua(0.1, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = ux(rng), a = ua(rng);
    CHECK(std::abs(f_profile(x, a) - f_profile(1.0 - x, a)) <= 1e-12 * std::max(1e-300, f_profile(x, a)));
  }
  CHECK_THROWS_AS(f_profile(0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(f_profile(1.5, 1.0), std::invalid_argument);
}

TEST_CASE("p coefficient agrees with the dense grid") {
  for (double a : {0.5, 1.0, 2.0, 3.1, 3.5, 4.0, 5.0, 8.0}) {
    const auto pc = p_coefficient(a);
    const auto grid = oracle::f_grid_max(a);
    CHECK(pc.p >= grid.value - 1e-15);
    CHECK(pc.p - grid.value <= 1e-10);
    CHECK(std::abs(pc.argmax - grid.argmax) <= 1e-3);
    CHECK(pc.argmax >= 0.0);
    CHECK(pc.argmax <= 0.5);
  }
}

TEST_CASE("p coefficient bounds every sampled f") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ux(0.0, 1.0);
  for (double a : {0.5, 2.0, 3.5, 4.0, 6.0}) {
    const double p = p_coefficient(a).p;
    for (int i = 0; i < 10000; ++i) CHECK(p >= f_profile(ux(rng), a));
  }
}

TEST_CASE("p coefficient is balanced for alpha in [1, 3]") {
  CHECK(p_coefficient(1.0).p == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(p_coefficient(2.0).p == doctest::Approx(0.25).epsilon(1e-12));
  for (double a = 1.0; a <= 3.0 + 1e-12; a += 0.125) {
    const auto pc = p_coefficient(a);
    CHECK(std::abs(pc.p - std::pow(2.0, -a)) <= 1e-9);
    CHECK(std::abs(pc.argmax - 0.5) <= 1e-6);
  }
}

TEST_CASE("p coefficient exceeds the balanced value above 3") {
  for (double a : {3.1, 3.5, 4.0, 5.0, 8.0}) CHECK(p_coefficient(a).p > std::pow(2.0, -a) + 1e-9);
  // f(x, 4) is maximised at x = (3 - sqrt 3)/6 with value exactly 1/12.
  const auto p4 = p_coefficient(4.0);
  CHECK(p4.p == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
  CHECK(p4.argmax == doctest::Approx((3.0 - std::sqrt(3.0)) / 6.0).epsilon(1e-6));
  CHECK(p4.p - 0.0625 >= 0.02);
}

TEST_CASE("g profile and zeta") {
  CHECK(g_profile(3, 8, 4.0) == 1574.0);
  CHECK(g_profile(4, 8, 4.0) == 1536.0);
  for (int n = 3; n <= 30; ++n)
    for (int r = 1; r < n; ++r)
      for (double a : {-1.5, 0.5, 2.0, 4.0}) {
        CHECK(std::abs(g_profile(r, n, a) - g_profile(n - r, n, a)) <= 1e-12 * std::abs(g_profile(r, n, a)) + 1e-300);
        CHECK(std::pow(double(n), a) + g_profile(r, n, a) ==
              doctest::Approx(oracle::s_alpha_kbip(n, r, a)).epsilon(1e-13));
      }
  for (int n = 2; n <= 30; ++n)
    for (double a : {0.5, 2.0, 4.0})
      CHECK(std::pow(double(n), a) + g_profile(n / 2, n, a) == doctest::Approx(bipartite_bound(n, a)).epsilon(1e-13));

  auto z = zeta(5, 1.0);
  CHECK(z.value == 12.0);
  CHECK(z.best_r == 2);
  z = zeta(8, 4.0);
  CHECK(z.value == 5670.0);
  CHECK(z.best_r == 3);
  for (int n = 2; n <= 60; ++n)
    for (double a : {0.5, 1.0, 3.0, 4.0, 6.0}) CHECK(zeta(n, a).value >= bipartite_bound(n, a) * (1 - 1e-15));
  CHECK(s_alpha_complete_bipartite(8, 3, 4.0) == 5670.0);
}

TEST_CASE("zeta matches brute force over connected bipartite graphs") {
  for (int n = 2; n <= 7; ++n)
    for (double a : {0.5, 2.0, 4.0}) {
      INFO("n=" << n << " alpha=" << a);
      const double brute = max_connected_bipartite(n, a);
      CHECK(std::abs(zeta(n, a).value - brute) <= 1e-7 * std::max(1.0, brute));
    }
}

TEST_CASE("zeta converges to p") {
  for (double a : {0.5, 2.0, 4.0}) {
    const double p = p_coefficient(a).p;
    double previous = INFINITY;
    for (int n : {100, 400, 1600, 6400}) {
      const double err = std::abs(zeta(n, a).value / std::pow(double(n), a + 1.0) - p);
      CHECK(err < previous);
      previous = err;
    }
    CHECK(previous < 0.01 * p);
  }
}

TEST_CASE("conjecture 1 holds for alpha in [1, 3]") {
  const auto reports = verify_conjecture1(2.0, 10);
  REQUIRE(reports.size() == 9);
  const auto& r10 = reports.back();
  CHECK(r10.n == 10);
  CHECK(r10.bound_value == 300.0);
  CHECK(r10.achieved_value == 300.0);
  CHECK(r10.param2 == 5);
  CHECK(r10.verdict == Verdict::tight);
  CHECK(r10.achieved_value == doctest::Approx(oracle::trace_power(complete_bipartite(5, 5), 2)));

  for (double a : {1.0, 1.5, 2.0, 2.5, 3.0}) {
    for (const auto& r : verify_conjecture1(a, 60)) {
      CHECK(r.verdict == Verdict::tight);
      CHECK(r.param2 == r.n / 2);
    }
  }
  // Balanced maximiser at α = 3 is unique: every other r falls short.
  for (int r = 1; r < 10; ++r) CHECK(oracle::s_alpha_kbip(20, r, 3.0) < bipartite_bound(20, 3.0));
  // At α = 1, g(r) = 2r(n-r) - n is strictly increasing up to n/2.
  for (int r = 1; r < 10; ++r) CHECK(g_profile(r, 21, 1.0) < g_profile(r + 1, 21, 1.0));

  CHECK_THROWS_AS(verify_conjecture1(3.5, 10), std::invalid_argument);
  CHECK_THROWS_AS(verify_conjecture1(0.5, 10), std::invalid_argument);
}

TEST_CASE("conjecture 1 counterexamples above 3") {
  auto c = find_counterexample_conj1(4.0, 20);
  REQUIRE(c.has_value());
  CHECK(c->conjecture == "conj1");
  CHECK(c->n == 8);
  CHECK(c->r == 3);
  CHECK(c->param2 == 3);
  CHECK(c->lhs == 5670.0);
  CHECK(c->rhs == 5632.0);
  CHECK(c->margin == 38.0);
  CHECK(c->witness == "Kbip:3,5");
  REQUIRE(c->numeric_lhs.has_value());
  CHECK(std::abs(*c->numeric_lhs - c->lhs) <= 1e-7 * c->lhs);

  CHECK_FALSE(find_counterexample_conj1(4.0, 7).has_value());
  CHECK(bipartite_bound(7, 4.0) == 2401.0 + 2 * 256.0 + 3 * 81.0);

  c = find_counterexample_conj1(3.5, 200);
  REQUIRE(c.has_value());
  CHECK(c->margin > 0.0);
  CHECK(oracle::s_alpha_kbip(c->n, c->r, 3.5) > bipartite_bound(c->n, 3.5));

  // Minimality: nothing earlier in (n, r) order violates.
  for (int n = 2; n < c->n; ++n)
    for (int r = 1; r <= n / 2; ++r) CHECK(oracle::s_alpha_kbip(n, r, 3.5) <= bipartite_bound(n, 3.5) * (1 + 1e-9));

  CHECK_THROWS_AS(find_counterexample_conj1(3.0, 20), std::invalid_argument);
}

TEST_CASE("conjecture 2 counterexamples below -1") {
  // Direct check of the n = 11 values without relying on search order.
  const double lhs = spectrum_join_split(11, 1, 5).s_alpha(-2.0);
  CHECK(lhs == doctest::Approx(0.5437519290).epsilon(1e-9));
  CHECK(connectivity_bound(11, 1, -2.0) == doctest::Approx(1.4225019290).epsilon(1e-9));
  CHECK(std::abs(s_alpha(spectrum_of(join_split(11, 1, 5)), -2.0) - lhs) <= 1e-7);

  auto c = find_counterexample_conj2(-2.0, 1, 50);
  REQUIRE(c.has_value());
  CHECK(c->conjecture == "conj2");
  CHECK(c->n <= 11);
  CHECK(c->param2 == 1);
  CHECK(c->r == (c->n - 1) / 2);
  CHECK(c->lhs < c->rhs);
  CHECK(c->margin == doctest::Approx(c->rhs - c->lhs));
  REQUIRE(c->numeric_lhs.has_value());
  CHECK(std::abs(*c->numeric_lhs - c->lhs) <= 1e-7);

  // b_{-2}(n, 1) falls toward 1 and the balanced lhs toward 0.
  double prev_b = INFINITY, prev_l = INFINITY;
  for (int n : {11, 21, 41, 81}) {
    const double b = connectivity_bound(n, 1, -2.0);
    const double l = spectrum_join_split(n, 1, (n - 1) / 2).s_alpha(-2.0);
    CHECK(b < prev_b);
    CHECK(b > 1.0);
    CHECK(l < prev_l);
    prev_b = b;
    prev_l = l;
  }

  for (int k : {2, 3}) {
    c = find_counterexample_conj2(-2.0, k, 60);
    REQUIRE(c.has_value());
    CHECK((c->n - k) % 2 == 0);
    CHECK(std::abs(*c->numeric_lhs - c->lhs) <= 1e-7);
  }
  c = find_counterexample_conj2(-1.5, 3, 201);
  REQUIRE(c.has_value());
  CHECK(c->lhs < c->rhs);

  // A full r scan never finds a later witness than the balanced one.
  SearchOptions full;
  full.full_r_scan = true;
  const auto wide = find_counterexample_conj2(-2.0, 2, 60, full);
  REQUIRE(wide.has_value());
  CHECK(wide->n <= find_counterexample_conj2(-2.0, 2, 60)->n);

  CHECK_THROWS_AS(find_counterexample_conj2(-1.0, 1, 20), std::invalid_argument);
  CHECK_THROWS_AS(find_counterexample_conj2(-2.0, 0, 20), std::invalid_argument);
}

TEST_CASE("exhaustive verification at n = 6") {
  auto r = exhaustive_verify(6, 0.5, ExhaustiveMode::bipartite);
  CHECK(r.verdict == Verdict::tight);
  CHECK(r.witness_is_extremal);
  CHECK(r.unique_extremal);
  CHECK(std::abs(r.achieved_value - bipartite_bound(6, 0.5)) <= 1e-7);
  CHECK(Graph::from_edges(6, r.witness_edges).edge_count() == 9);

  r = exhaustive_verify(6, -1.0, ExhaustiveMode::bipartite);
  CHECK(r.direction == Direction::lower);
  CHECK(r.verdict == Verdict::tight);
  CHECK(r.witness_is_extremal);
  CHECK(std::abs(r.achieved_value - bipartite_bound(6, -1.0)) <= 1e-7);

  ExhaustiveOptions k2;
  k2.k = 2;
  r = exhaustive_verify(6, 2.0, ExhaustiveMode::connectivity, k2);
  CHECK(r.verdict == Verdict::tight);
  CHECK(r.witness_is_extremal);
  CHECK(r.unique_extremal);
  CHECK(std::abs(r.achieved_value - connectivity_bound(6, 2, 2.0)) <= 1e-7);
  const Graph w = Graph::from_edges(6, r.witness_edges);
  CHECK(oracle::kappa(w) == 2);
  CHECK(w.edge_count() == join_split(6, 2, 1).edge_count());
}

TEST_CASE("exhaustive verification is independent of the job count") {
  ExhaustiveOptions one, four;
  four.jobs = 4;
  for (auto mode : {ExhaustiveMode::bipartite, ExhaustiveMode::connectivity}) {
    const double a = mode == ExhaustiveMode::bipartite ? 0.5 : 1.0;
    const auto x = exhaustive_verify(6, a, mode, one);
    const auto y = exhaustive_verify(6, a, mode, four);
    CHECK(x == y);
  }
}

TEST_CASE("exhaustive argument validation") {
  CHECK_THROWS_AS(exhaustive_verify(9, 0.5, ExhaustiveMode::bipartite), std::invalid_argument);
  ExhaustiveOptions bad;
  bad.k = 5;
  CHECK_THROWS_AS(exhaustive_verify(6, 2.0, ExhaustiveMode::connectivity, bad), std::invalid_argument);
}

TEST_CASE("verdict classification") {
  CHECK(classify(10.0, 10.0, Direction::upper, true) == Verdict::tight);
  CHECK(classify(10.0, 9.0, Direction::upper, false) == Verdict::holds);
  CHECK(classify(10.0, 10.5, Direction::upper, true) == Verdict::violated);
  CHECK(classify(10.0, 9.5, Direction::lower, true) == Verdict::violated);
  CHECK(classify(10.0, 10.0 * (1 + 1e-12), Direction::upper, true) == Verdict::tight);
  CHECK(verdict_from_string(to_string(Verdict::violated)) == Verdict::violated);
  CHECK(direction_from_string(to_string(Direction::lower)) == Direction::lower);
  CHECK_THROWS(verdict_from_string("maybe"));
}

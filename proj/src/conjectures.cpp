#include "qspec/conjectures.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "qspec/closed_forms.hpp"
#include "qspec/graph_io.hpp"
#include "qspec/spectral.hpp"

namespace qspec {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::tight: return "tight";
  }
  return "?";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "holds") return Verdict::holds;
  if (s == "violated") return Verdict::violated;
  if (s == "tight") return Verdict::tight;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

const char* to_string(Direction d) { return d == Direction::upper ? "upper" : "lower"; }

Direction direction_from_string(const std::string& s) {
  if (s == "upper") return Direction::upper;
  if (s == "lower") return Direction::lower;
  throw std::invalid_argument("unknown direction '" + s + "'");
}

Verdict classify(double bound, double achieved, Direction dir, bool witness_is_extremal) {
  const double tol = kVerdictTol * (1.0 + std::abs(bound));
  const double margin = dir == Direction::upper ? achieved - bound : bound - achieved;
  if (margin > tol) return Verdict::violated;
  if (std::abs(achieved - bound) <= tol && witness_is_extremal) return Verdict::tight;
  return Verdict::holds;
}

double f_profile(double x, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("f needs finite alpha > 0");
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("f needs 0 <= x <= 1");
  const double y = 1.0 - x;
  return x * std::pow(y, alpha) + y * std::pow(x, alpha);
}

PCoefficient p_coefficient(double alpha) {
  constexpr int kGrid = 100000;
  constexpr double kWidth = 1e-12;
  const double step = 0.5 / (kGrid - 1);

  int best = 0;
  double best_f = f_profile(0.0, alpha);
  for (int i = 1; i < kGrid; ++i) {
    const double v = f_profile(std::min(0.5, i * step), alpha);
    if (v > best_f) {
      best_f = v;
      best = i;
    }
  }

  // Golden-section maximisation inside the two grid cells around the best point.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = std::max(0.0, (best - 1) * step);
  double hi = std::min(0.5, (best + 1) * step);
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f_profile(x1, alpha);
  double f2 = f_profile(x2, alpha);
  while (hi - lo > kWidth) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f_profile(x2, alpha);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f_profile(x1, alpha);
    }
  }
  PCoefficient out{best_f, std::min(0.5, best * step)};
  const double mid = 0.5 * (lo + hi);
  const double f_mid = f_profile(mid, alpha);
  if (f_mid > out.p) out = {f_mid, mid};

  // f is symmetric about 1/2 and can be flat there to machine precision
  // (f(1/2 + e) = 1/8 - 2e^4 at alpha = 3).
  const double f_half = f_profile(0.5, alpha);
  if (f_half >= out.p - 8.0 * std::numeric_limits<double>::epsilon() * out.p) out = {std::max(f_half, out.p), 0.5};
  return out;
}

double g_profile(double x, int n, double alpha) {
  if (!(x > 0.0 && x < n)) throw std::invalid_argument("g needs 0 < x < n");
  return (x - 1.0) * std::pow(n - x, alpha) + (n - x - 1.0) * std::pow(x, alpha);
}

double s_alpha_complete_bipartite(int n, int r, double alpha) {
  return spectrum_complete_bipartite(r, n - r).s_alpha(alpha);
}

ZetaValue zeta(int n, double alpha) {
  if (n < 2) throw std::invalid_argument("zeta needs n >= 2");
  if (!(alpha > 0.0)) throw std::invalid_argument("zeta needs alpha > 0");
  ZetaValue z{s_alpha_complete_bipartite(n, 1, alpha), 1};
  for (int r = 2; r <= n / 2; ++r) {
    const double v = s_alpha_complete_bipartite(n, r, alpha);
    if (v > z.value) z = {v, r};
  }
  return z;
}

namespace {

std::string kbip(int r, int s) { return "Kbip:" + std::to_string(r) + "," + std::to_string(s); }
std::string kjoin(int n, int k, int r) {
  return "Kjoin:" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(r);
}

}  // namespace

std::vector<BoundReport> verify_conjecture1(double alpha, int n_max) {
  if (!(alpha >= 1.0 && alpha <= 3.0)) {
    throw std::invalid_argument("conjecture 1 verification covers 1 <= alpha <= 3");
  }
  if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");
  std::vector<BoundReport> out;
  for (int n = 2; n <= n_max; ++n) {
    BoundReport rep;
    rep.context = "conj1";
    rep.n = n;
    rep.alpha = alpha;
    rep.direction = Direction::upper;
    rep.bound_value = bipartite_bound(n, alpha);
    const int balanced = n / 2;
    int best_r = 1;
    double best = s_alpha_complete_bipartite(n, 1, alpha);
    std::vector<double> values{best};
    for (int r = 2; r <= balanced; ++r) {
      values.push_back(s_alpha_complete_bipartite(n, r, alpha));
      if (values.back() > best) {
        best = values.back();
        best_r = r;
      }
    }
    const double tol = kVerdictTol * (1.0 + std::abs(rep.bound_value));
    rep.unique_extremal = true;
    for (int r = 1; r < balanced; ++r) {
      if (values[r - 1] >= rep.bound_value - tol) rep.unique_extremal = false;
    }
    rep.param2 = best_r;
    rep.achieved_value = best;
    rep.witness = kbip(best_r, n - best_r);
    rep.witness_is_extremal = best_r == balanced;
    rep.graphs_examined = balanced;
    rep.verdict = classify(rep.bound_value, rep.achieved_value, rep.direction, rep.witness_is_extremal);
    out.push_back(std::move(rep));
  }
  return out;
}

std::optional<CounterexampleReport> find_counterexample_conj1(double alpha, int n_max, const SearchOptions& opts) {
  if (!(alpha > 3.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("conjecture 1 falsification needs alpha > 3");
  }
  for (int n = 2; n <= n_max; ++n) {
    const double rhs = bipartite_bound(n, alpha);
    const double tol = kVerdictTol * (1.0 + std::abs(rhs));
    for (int r = 1; r <= n / 2; ++r) {
      const double lhs = s_alpha_complete_bipartite(n, r, alpha);
      if (lhs - rhs <= tol) continue;
      CounterexampleReport rep{"conj1", alpha, n, r, r, lhs, rhs, lhs - rhs, kbip(r, n - r), std::nullopt};
      if (opts.cross_check) rep.numeric_lhs = s_alpha(spectrum_of(complete_bipartite(r, n - r)), alpha);
      return rep;
    }
  }
  return std::nullopt;
}

std::optional<CounterexampleReport> find_counterexample_conj2(double alpha, int k, int n_max,
                                                              const SearchOptions& opts) {
  if (!(alpha < -1.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("conjecture 2 falsification needs alpha < -1");
  }
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  for (int n = k + 2; n <= n_max; ++n) {
    if (!opts.full_r_scan && (n - k) % 2 != 0) continue;
    double rhs = 0.0;
    try {
      rhs = connectivity_bound(n, k, alpha);
    } catch (const std::domain_error&) {
      continue;  // b_α(n, k) undefined: a zero base under a negative power
    }
    const double tol = kVerdictTol * (1.0 + std::abs(rhs));
    const int r_first = opts.full_r_scan ? 1 : (n - k) / 2;
    for (int r = r_first; r <= (n - k) / 2; ++r) {
      const double lhs = spectrum_join_split(n, k, r).s_alpha(alpha);
      if (rhs - lhs <= tol) continue;
      CounterexampleReport rep{"conj2", alpha, n, k, r, lhs, rhs, rhs - lhs, kjoin(n, k, r), std::nullopt};
      if (opts.cross_check) rep.numeric_lhs = s_alpha(spectrum_of(join_split(n, k, r)), alpha);
      return rep;
    }
  }
  return std::nullopt;
}

namespace {

struct EdgeSlot {
  int u;
  int v;
};

struct WorkerResult {
  bool found = false;
  double best = 0.0;
  std::uint64_t best_mask = 0;
  std::vector<std::pair<double, std::uint64_t>> near;  // within tolerance of best
  std::int64_t examined = 0;
};

double near_tol(double v) { return kVerdictTol * (1.0 + std::abs(v)); }

Graph graph_from_mask(int n, const std::vector<EdgeSlot>& slots, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < slots.size(); ++i)
    if ((mask >> i) & 1U) edges.push_back({slots[i].u, slots[i].v});
  return Graph::from_edges(n, edges);
}

struct ComponentCounts {
  int total = 0;
  int bipartite = 0;
};

ComponentCounts mask_components(std::span<const std::uint64_t> adj, int n) {
  ComponentCounts c;
  std::uint64_t todo = (std::uint64_t{1} << n) - 1;
  while (todo) {
    std::uint64_t comp = todo & (~todo + 1);
    for (std::uint64_t frontier = comp; frontier;) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    ++c.total;
    if (detail::mask_bipartite(adj, comp)) ++c.bipartite;
    todo &= ~comp;
  }
  return c;
}

bool same_spectrum(const Graph& a, const Graph& b) {
  const auto sa = spectrum_of(a).values;
  const auto sb = spectrum_of(b).values;
  for (std::size_t i = 0; i < sa.size(); ++i)
    if (std::abs(sa[i] - sb[i]) > kCrossCheckTol) return false;
  return true;
}

std::vector<int> sorted_degrees(const Graph& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

BoundReport exhaustive_verify(int n, double alpha, ExhaustiveMode mode, const ExhaustiveOptions& opts) {
  if (!std::isfinite(alpha)) throw std::invalid_argument("alpha must be finite");
  const int limit = opts.allow_large ? kExhaustiveMaxN + 1 : kExhaustiveMaxN;
  if (n > limit) {
    throw std::invalid_argument("exhaustive enumeration limited to n <= " + std::to_string(kExhaustiveMaxN) +
                                " (n = 9 needs allow_large)");
  }
  BoundReport rep;
  rep.n = n;
  rep.alpha = alpha;
  Graph family = Graph::empty(1);
  if (mode == ExhaustiveMode::bipartite) {
    if (n < 2) throw std::invalid_argument("bipartite mode needs n >= 2");
    if (!(alpha < 0.0 || (alpha > 0.0 && alpha <= 1.0))) {
      throw std::invalid_argument("bipartite mode covers alpha < 0 or 0 < alpha <= 1");
    }
    rep.context = "bipartite";
    rep.direction = alpha < 0.0 ? Direction::lower : Direction::upper;
    rep.param2 = n / 2;
    rep.bound_value = bipartite_bound(n, alpha);
    family = complete_bipartite(n / 2, n - n / 2);
  } else {
    if (!(alpha >= 1.0)) throw std::invalid_argument("connectivity mode covers alpha >= 1");
    if (opts.k < 1 || opts.k > n - 2) throw std::invalid_argument("connectivity mode needs 1 <= k <= n-2");
    rep.context = "connectivity";
    rep.direction = Direction::upper;
    rep.param2 = opts.k;
    rep.bound_value = connectivity_bound(n, opts.k, alpha);
    family = join_split(n, opts.k, 1);
  }
  const bool maximise = rep.direction == Direction::upper;

  std::vector<EdgeSlot> slots;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) slots.push_back({i, j});
  const std::uint64_t total = std::uint64_t{1} << slots.size();

  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    WorkerResult res;
    std::uint64_t adj[16];
    double q[16 * 16];
    double vals[16];
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      std::fill(adj, adj + n, 0);
      for (std::uint64_t m = mask; m; m &= m - 1) {
        const auto& s = slots[std::countr_zero(m)];
        adj[s.u] |= std::uint64_t{1} << s.v;
        adj[s.v] |= std::uint64_t{1} << s.u;
      }
      const std::span<const std::uint64_t> rows(adj, n);
      int zeros = 0;
      if (mode == ExhaustiveMode::bipartite) {
        if (opts.include_disconnected) {
          if (!detail::mask_bipartite(rows, all)) continue;
          zeros = mask_components(rows, n).total;
        } else {
          if (!detail::mask_connected(rows, all) || !detail::mask_bipartite(rows, all)) continue;
          zeros = 1;
        }
      } else {
        if (!detail::mask_connected(rows, all) || !detail::mask_kappa_at_most(rows, n, opts.k)) continue;
        zeros = detail::mask_bipartite(rows, all) ? 1 : 0;
      }
      ++res.examined;

      int max_deg = 1;
      for (int i = 0; i < n; ++i) {
        const int d = std::popcount(adj[i]);
        max_deg = std::max(max_deg, d);
        for (int j = 0; j < n; ++j) q[i * n + j] = i == j ? d : double((adj[i] >> j) & 1U);
      }
      jacobi_eigenvalues_inplace(std::span<double>(q, n * n), n, std::span<double>(vals, n));
      std::sort(vals, vals + n, std::greater<>());
      const double tol_zero = kZeroScale * max_deg;
      double s = 0.0;
      for (int i = 0; i < n; ++i) {
        if (i >= n - zeros) {
          if (std::abs(vals[i]) >= tol_zero) throw ConsistencyError("structural zero check failed in enumeration");
          continue;
        }
        if (alpha < 0.0 && vals[i] < tol_zero) throw std::domain_error("numerically zero retained eigenvalue");
        s += std::pow(std::max(vals[i], 0.0), alpha);
      }

      if (!res.found || (maximise ? s > res.best : s < res.best)) {
        res.found = true;
        res.best = s;
        res.best_mask = mask;
        std::erase_if(res.near, [&](const auto& c) { return std::abs(c.first - s) > near_tol(s); });
      }
      if (std::abs(s - res.best) <= near_tol(res.best)) res.near.emplace_back(s, mask);
    }
    return res;
  };

  const int jobs = std::max(1, opts.jobs > 0 ? opts.jobs : static_cast<int>(std::thread::hardware_concurrency()));
  std::vector<WorkerResult> results(jobs);
  if (jobs == 1) {
    results[0] = work(0, total);
  } else {
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      const std::uint64_t b = std::min(total, chunk * j);
      const std::uint64_t e = std::min(total, b + chunk);
      threads.emplace_back([&, j, b, e] { results[j] = work(b, e); });
    }
    for (auto& t : threads) t.join();
  }

  // Order-independent merge: best value, ties to the smallest mask.
  bool found = false;
  double best = 0.0;
  std::uint64_t best_mask = 0;
  for (const auto& r : results) {
    rep.graphs_examined += r.examined;
    if (!r.found) continue;
    const bool better = !found || (maximise ? r.best > best : r.best < best) ||
                        (r.best == best && r.best_mask < best_mask);
    if (better) {
      found = true;
      best = r.best;
      best_mask = r.best_mask;
    }
  }
  if (!found) throw std::runtime_error("no graph satisfies the enumeration predicate");

  const Graph witness = graph_from_mask(n, slots, best_mask);
  rep.achieved_value = best;
  rep.witness = to_graph6(witness);
  rep.witness_edges = witness.edges();
  const auto family_degrees = sorted_degrees(family);
  rep.witness_is_extremal = sorted_degrees(witness) == family_degrees && same_spectrum(witness, family);
  rep.unique_extremal = true;
  for (const auto& r : results) {
    for (const auto& [value, mask] : r.near) {
      if (std::abs(value - best) > near_tol(best)) continue;
      const Graph g = graph_from_mask(n, slots, mask);
      if (sorted_degrees(g) != family_degrees || !same_spectrum(g, family)) rep.unique_extremal = false;
    }
  }
  rep.verdict = classify(rep.bound_value, rep.achieved_value, rep.direction, rep.witness_is_extremal);
  return rep;
}

}  // namespace qspec

#pragma once

// Analytic profiles f, g, p(α), ζ(n, α) and the verification and
// falsification engines for the bipartite bound B(n, α) and the
// connectivity bound b_α(n, k).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qspec/graph.hpp"

namespace qspec {

enum class Verdict { holds, violated, tight };

/// Which way the claimed inequality points: upper means S_α <= bound.
enum class Direction { upper, lower };

const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);
const char* to_string(Direction d);
Direction direction_from_string(const std::string& s);

/// Relative slack separating "tight" from "violated".
inline constexpr double kVerdictTol = 1e-9;
/// Agreement required between closed-form and numeric evaluations.
inline constexpr double kCrossCheckTol = 1e-7;

struct BoundReport {
  std::string context;  // "conj1", "bipartite" or "connectivity"
  int n = 0;
  double alpha = 0.0;
  int param2 = 0;  // witness r for conj1 / bipartite, k for connectivity
  Direction direction = Direction::upper;
  double bound_value = 0.0;
  double achieved_value = 0.0;
  std::string witness;  // family spec ("Kbip:3,5") or graph6 of the extremal graph
  std::vector<Edge> witness_edges;
  bool witness_is_extremal = false;  // witness is the conjectured extremal graph
  bool unique_extremal = false;      // every graph attaining the extremum is that graph
  std::int64_t graphs_examined = 0;
  Verdict verdict = Verdict::holds;

  /// Positive when the claimed inequality fails.
  double margin() const {
    return direction == Direction::upper ? achieved_value - bound_value : bound_value - achieved_value;
  }
};

struct CounterexampleReport {
  std::string conjecture;  // "conj1" or "conj2"
  double alpha = 0.0;
  int n = 0;
  int param2 = 0;  // r for conj1, k for conj2
  int r = 0;       // part / clique size of the witness
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // > 0, oriented so that positive means violated
  std::string witness;  // family spec of the witness graph
  std::optional<double> numeric_lhs;  // S_α of the constructed witness via Jacobi
};

/// Verdict for a bound comparison: violated beyond kVerdictTol relative
/// margin, tight within it when the witness is the extremal graph.
Verdict classify(double bound, double achieved, Direction dir, bool witness_is_extremal);

/// f(x) = x(1-x)^α + (1-x)x^α on [0, 1]; α > 0.
double f_profile(double x, double alpha);

struct PCoefficient {
  double p = 0.0;
  double argmax = 0.0;  // in [0, 1/2]
};

/// max of f on [0, 1]: 10^5-point grid on [0, 1/2] followed by golden
/// section down to width 1e-12. When f(1/2) is within a few ulps of the
/// refined value the symmetric point 1/2 is reported.
PCoefficient p_coefficient(double alpha);

/// g(x) = (x-1)(n-x)^α + (n-x-1)x^α, 0 < x < n. S_α(K_{r,n-r}) = n^α + g(r).
double g_profile(double x, int n, double alpha);

/// S_α(K_{r,n-r}) from the closed form.
double s_alpha_complete_bipartite(int n, int r, double alpha);

struct ZetaValue {
  double value = 0.0;
  int best_r = 0;
};

/// max over r in 1..⌊n/2⌋ of S_α(K_{r,n-r}); ties go to the smaller r.
ZetaValue zeta(int n, double alpha);

/// One report per n in [2, n_max], each scanning every r; 1 <= α <= 3.
std::vector<BoundReport> verify_conjecture1(double alpha, int n_max);

struct SearchOptions {
  /// Rebuild the witness and re-evaluate lhs with the Jacobi solver.
  bool cross_check = true;
  /// conj2 only: scan every r in 1..⌊(n-k)/2⌋ instead of r = (n-k)/2.
  bool full_r_scan = false;
};

/// Smallest (n, r) with S_α(K_{r,n-r}) > B(n, α); α > 3.
std::optional<CounterexampleReport> find_counterexample_conj1(double alpha, int n_max,
                                                              const SearchOptions& opts = {});

/// Smallest n (n ≡ k mod 2 unless full_r_scan) with
/// S_α(K_k ∨ (K_r ∪ K_{n-k-r})) < b_α(n, k); α < -1.
std::optional<CounterexampleReport> find_counterexample_conj2(double alpha, int k, int n_max,
                                                              const SearchOptions& opts = {});

enum class ExhaustiveMode { bipartite, connectivity };

struct ExhaustiveOptions {
  int k = 1;  // connectivity mode: κ(G) <= k
  bool include_disconnected = false;  // bipartite mode only
  bool allow_large = false;           // permit n = 9
  int jobs = 1;
};

inline constexpr int kExhaustiveMaxN = 8;

/// Enumerates every labeled graph on n vertices meeting the mode's
/// predicate, evaluates S_α numerically and compares the extremum with
/// B(n, α) (bipartite: min for α < 0, max for 0 < α <= 1) or b_α(n, k)
/// (connectivity: max, α >= 1).
BoundReport exhaustive_verify(int n, double alpha, ExhaustiveMode mode, const ExhaustiveOptions& opts = {});

}  // namespace qspec

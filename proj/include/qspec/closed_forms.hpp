#pragma once

// Exact spectra of the complete, complete bipartite and K_k ∨ (K_r ∪ K_{n-k-r})
// families, the equitable-partition quotient, and the two bound functions.

#include <stdexcept>
#include <utility>
#include <vector>

#include "qspec/graph.hpp"
#include "qspec/spectral.hpp"

namespace qspec {

/// Values closer than this are merged into one (value, multiplicity) pair.
inline constexpr double kMergeTol = 1e-10;
/// Closed-form values at or below this magnitude count as zero eigenvalues.
inline constexpr double kClosedFormZero = 1e-9;

struct SpectralPair {
  double value = 0.0;
  int multiplicity = 0;
};

/// Multiset of eigenvalues as (value, multiplicity) pairs, sorted by
/// descending value, multiplicities positive.
class ClosedFormSpectrum {
 public:
  ClosedFormSpectrum() = default;
  /// Drops nonpositive multiplicities and merges values within kMergeTol.
  explicit ClosedFormSpectrum(std::vector<SpectralPair> pairs);

  const std::vector<SpectralPair>& pairs() const { return pairs_; }
  int total_multiplicity() const;
  /// Σ value * multiplicity.
  double weighted_sum() const;
  /// Expanded descending list of length total_multiplicity().
  std::vector<double> expand() const;
  /// Power sum over values with |value| > kClosedFormZero; alpha = 0 counts
  /// them. A nonpositive retained value with alpha < 0 is a domain_error.
  double s_alpha(double alpha) const;

 private:
  std::vector<SpectralPair> pairs_;
};

ClosedFormSpectrum spectrum_complete(int n);
ClosedFormSpectrum spectrum_complete_bipartite(int r, int s);
/// Spectrum of join_split(n, k, r); requires 1 <= k <= n-2, 1 <= r <= (n-k)/2.
ClosedFormSpectrum spectrum_join_split(int n, int k, int r);

/// The two non-(n-2) eigenvalues of the join-split quotient:
/// n - 2 + k/2 ± ½ sqrt((k - 2n)² + 16 r (k - n + r)), larger first.
std::pair<double, double> join_split_roots(int n, int k, int r);

class NonEquitablePartition : public std::invalid_argument {
 public:
  NonEquitablePartition(const std::string& what, int block_row, int block_col)
      : std::invalid_argument(what), row_(block_row), col_(block_col) {}
  int block_row() const { return row_; }
  int block_col() const { return col_; }

 private:
  int row_;
  int col_;
};

struct EquitablePartition {
  std::vector<std::vector<int>> cells;
};

/// R = (r_ij) with r_ij the constant row sum of block (i, j) of Q(G).
struct QuotientMatrix {
  int dim = 0;
  std::vector<double> entries;  // row-major dim*dim
  std::vector<int> cell_sizes;

  double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * dim + j]; }
};

/// Validates that `p` partitions V(G) and that every block of Q(G) has
/// constant row sums; throws NonEquitablePartition naming the block.
QuotientMatrix quotient_matrix(const Graph& g, const EquitablePartition& p);

/// Eigenvalues of R, descending. R is similar to the symmetric
/// D^{1/2} R D^{-1/2} (D = diag of cell sizes), which goes to the Jacobi
/// solver.
std::vector<double> quotient_eigenvalues(const QuotientMatrix& r);

/// Closed-form quotient eigenvalues of the join-split family
/// {θ₊, n - 2, θ₋}, descending.
std::vector<double> join_split_quotient_eigenvalues(int n, int k, int r);

/// The three blocks (K_k, K_r, K_{n-k-r}) of join_split(n, k, r).
EquitablePartition join_split_partition(int n, int k, int r);

/// n^α + (⌊n/2⌋-1)⌈n/2⌉^α + (⌈n/2⌉-1)⌊n/2⌋^α, i.e. S_α(K_{⌊n/2⌋,⌈n/2⌉}).
double bipartite_bound(int n, double alpha);

/// b_α(n, k) = S_α(K_k ∨ (K_1 ∪ K_{n-k-1})). Requires 1 <= k <= n-2.
/// Throws std::domain_error when alpha < 0 and a base with nonzero
/// coefficient is not strictly positive.
double connectivity_bound(int n, int k, double alpha);

}  // namespace qspec

#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "qspec/graph.hpp"

namespace qspec {

/// Nonnegativity slack for eigenvalues of a positive semidefinite Q.
inline constexpr double kTolPsd = 1e-9;
/// Per-eigenvalue comparison slack used by tests of the solver.
inline constexpr double kTolEig = 1e-9;
/// Structural zeros must satisfy |lambda| < kZeroScale * max(1, max degree).
inline constexpr double kZeroScale = 1e-8;
/// Default slack for interlacing comparisons.
inline constexpr double kTolInterlace = 1e-8;

inline constexpr int kJacobiMaxSweeps = 64;
inline constexpr double kJacobiRelTol = 1e-12;

/// Jacobi iteration hit the sweep cap; `residual` is the remaining
/// off-diagonal Frobenius norm.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// A value that should be a structural zero is not numerically zero.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense real symmetric matrix; set() writes both triangles.
class SymMatrix {
 public:
  explicit SymMatrix(int dim);

  int dim() const { return dim_; }
  double at(int i, int j) const { return data_[static_cast<std::size_t>(i) * dim_ + j]; }
  void set(int i, int j, double value);
  double trace() const;
  double frobenius_norm() const;
  std::span<const double> data() const { return data_; }

 private:
  int dim_;
  std::vector<double> data_;
};

struct Spectrum {
  std::vector<double> values;  // descending
  int zero_count = 0;
  double tol_zero = kZeroScale;

  int size() const { return static_cast<int>(values.size()); }
  /// The size() - zero_count leading values.
  std::span<const double> nonzero() const {
    return std::span<const double>(values).first(values.size() - zero_count);
  }
};

/// Q(G) = A(G) + D(G).
SymMatrix signless_laplacian(const Graph& g);

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations,
/// sorted descending. Throws ConvergenceError after kJacobiMaxSweeps.
std::vector<double> symmetric_eigenvalues(const SymMatrix& m);

/// In-place variant over a row-major dim*dim buffer (destroyed); writes
/// the unsorted diagonal into `out`. Used by the exhaustive enumerator to
/// avoid per-graph allocation. Returns the number of sweeps.
int jacobi_eigenvalues_inplace(std::span<double> a, int dim, std::span<double> out);

/// Eigenvalues of m with `zero_count` declared structural zeros, which
/// must be the smallest values and lie below the zero tolerance.
Spectrum eigen_spectrum(const SymMatrix& m, int zero_count);

/// Spectrum of Q(G); zero_count is the number of bipartite components.
Spectrum spectrum_of(const Graph& g);

/// Sum of alpha-th powers over the nonzero eigenvalues. The structural
/// zeros are excluded; for alpha < 0 a retained value below tol_zero is a
/// std::domain_error. alpha = 0 counts the nonzero eigenvalues.
double s_alpha(const Spectrum& spec, double alpha);

/// q_i(G) >= q_i(G') >= q_{i+1}(G) for all i, with slack `tol`.
/// Throws std::invalid_argument on a length mismatch.
bool check_interlacing(std::span<const double> big, std::span<const double> small,
                       double tol = kTolInterlace);
bool check_interlacing(const Spectrum& big, const Spectrum& small, double tol = kTolInterlace);

}  // namespace qspec

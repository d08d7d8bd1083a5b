#include "qspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace qspec {

SymMatrix::SymMatrix(int dim) : dim_(dim) {
  if (dim < 0) throw std::invalid_argument("matrix dimension must be nonnegative");
  data_.assign(static_cast<std::size_t>(dim) * dim, 0.0);
}

void SymMatrix::set(int i, int j, double value) {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_) throw std::out_of_range("SymMatrix index out of range");
  data_[static_cast<std::size_t>(i) * dim_ + j] = value;
  data_[static_cast<std::size_t>(j) * dim_ + i] = value;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

SymMatrix signless_laplacian(const Graph& g) {
  const int n = g.order();
  SymMatrix q(n);
  for (int v = 0; v < n; ++v) q.set(v, v, g.degree(v));
  for (const auto& [u, v] : g.edges()) q.set(u, v, 1.0);
  return q;
}

namespace {

double off_diagonal_norm(std::span<const double> a, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
  return std::sqrt(2.0 * s);
}

}  // namespace

int jacobi_eigenvalues_inplace(std::span<double> a, int n, std::span<double> out) {
  double frob = 0.0;
  for (double x : a) frob += x * x;
  if (!std::isfinite(frob)) throw ConvergenceError("matrix has non-finite entries", frob);
  const double tol = kJacobiRelTol * (1.0 + std::sqrt(frob));

  int sweep = 0;
  double off = off_diagonal_norm(a, n);
  for (; !(off <= tol); off = off_diagonal_norm(a, n)) {
    if (sweep == kJacobiMaxSweeps || !std::isfinite(off)) {
      throw ConvergenceError("Jacobi did not converge after " + std::to_string(sweep) +
                                 " sweeps, off-diagonal residual " + std::to_string(off),
                             off);
    }
    ++sweep;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        // Smaller root of t^2 + 2 t theta - 1 = 0.
        double t = std::abs(theta) > 1e150 ? 0.5 / theta
                                           : 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0 && std::abs(theta) <= 1e150) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[r * n + p];
          const double arq = a[r * n + q];
          const double np = c * arp - s * arq;
          const double nq = s * arp + c * arq;
          a[r * n + p] = np;
          a[p * n + r] = np;
          a[r * n + q] = nq;
          a[q * n + r] = nq;
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) out[i] = a[i * n + i];
  return sweep;
}

std::vector<double> symmetric_eigenvalues(const SymMatrix& m) {
  std::vector<double> work(m.data().begin(), m.data().end());
  std::vector<double> values(m.dim());
  jacobi_eigenvalues_inplace(work, m.dim(), values);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

Spectrum eigen_spectrum(const SymMatrix& m, int zero_count) {
  if (zero_count < 0 || zero_count > m.dim()) {
    throw std::invalid_argument("zero_count " + std::to_string(zero_count) + " outside [0, " +
                                std::to_string(m.dim()) + "]");
  }
  Spectrum spec;
  spec.values = symmetric_eigenvalues(m);
  spec.zero_count = zero_count;
  double max_diag = 1.0;
  for (int i = 0; i < m.dim(); ++i) max_diag = std::max(max_diag, std::abs(m.at(i, i)));
  spec.tol_zero = kZeroScale * max_diag;
  for (int i = m.dim() - zero_count; i < m.dim(); ++i) {
    if (std::abs(spec.values[i]) >= spec.tol_zero) {
      throw ConsistencyError("eigenvalue " + std::to_string(spec.values[i]) + " at position " +
                             std::to_string(i) + " should be a structural zero (tol " +
                             std::to_string(spec.tol_zero) + ")");
    }
  }
  return spec;
}

Spectrum spectrum_of(const Graph& g) {
  return eigen_spectrum(signless_laplacian(g), components(g).bipartite_components);
}

double s_alpha(const Spectrum& spec, double alpha) {
  if (!std::isfinite(alpha)) throw std::invalid_argument("alpha must be finite");
  double sum = 0.0;
  for (double v : spec.nonzero()) {
    if (alpha < 0.0 && v < spec.tol_zero) {
      throw std::domain_error("retained eigenvalue " + std::to_string(v) +
                              " is numerically zero; negative power undefined");
    }
    sum += alpha == 0.0 ? 1.0 : std::pow(std::max(v, 0.0), alpha);
  }
  return sum;
}

bool check_interlacing(std::span<const double> big, std::span<const double> small, double tol) {
  if (big.size() != small.size()) {
    throw std::invalid_argument("interlacing needs equal lengths, got " + std::to_string(big.size()) +
                                " and " + std::to_string(small.size()));
  }
  for (std::size_t i = 0; i < big.size(); ++i) {
    if (small[i] > big[i] + tol) return false;
    if (i + 1 < big.size() && big[i + 1] > small[i] + tol) return false;
  }
  return true;
}

bool check_interlacing(const Spectrum& big, const Spectrum& small, double tol) {
  return check_interlacing(std::span<const double>(big.values), std::span<const double>(small.values), tol);
}

}  // namespace qspec

#include "qspec/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qspec {

namespace {

double power(double base, double alpha) { return alpha == 0.0 ? 1.0 : std::pow(base, alpha); }

std::string params(int n, int k, int r) {
  return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ", r=" + std::to_string(r) + ")";
}

void require_join_split(int n, int k, int r) {
  if (k < 1 || k > n - 2 || r < 1 || 2 * r > n - k) {
    throw std::invalid_argument("join-split parameters " + params(n, k, r) +
                                " need 1 <= k <= n-2 and 1 <= r <= (n-k)/2");
  }
}

}  // namespace

ClosedFormSpectrum::ClosedFormSpectrum(std::vector<SpectralPair> pairs) {
  std::erase_if(pairs, [](const SpectralPair& p) { return p.multiplicity <= 0; });
  std::sort(pairs.begin(), pairs.end(),
            [](const SpectralPair& a, const SpectralPair& b) { return a.value > b.value; });
  for (const auto& p : pairs) {
    if (!pairs_.empty() && std::abs(pairs_.back().value - p.value) <= kMergeTol) {
      pairs_.back().multiplicity += p.multiplicity;
    } else {
      pairs_.push_back(p);
    }
  }
}

int ClosedFormSpectrum::total_multiplicity() const {
  int total = 0;
  for (const auto& p : pairs_) total += p.multiplicity;
  return total;
}

double ClosedFormSpectrum::weighted_sum() const {
  double total = 0.0;
  for (const auto& p : pairs_) total += p.value * p.multiplicity;
  return total;
}

std::vector<double> ClosedFormSpectrum::expand() const {
  std::vector<double> out;
  out.reserve(total_multiplicity());
  for (const auto& p : pairs_) out.insert(out.end(), p.multiplicity, p.value);
  return out;
}

double ClosedFormSpectrum::s_alpha(double alpha) const {
  if (!std::isfinite(alpha)) throw std::invalid_argument("alpha must be finite");
  double sum = 0.0;
  for (const auto& p : pairs_) {
    if (std::abs(p.value) <= kClosedFormZero) continue;
    if (p.value < 0.0 && alpha != 0.0) {
      throw std::domain_error("negative closed-form eigenvalue " + std::to_string(p.value));
    }
    sum += p.multiplicity * power(p.value, alpha);
  }
  return sum;
}

ClosedFormSpectrum spectrum_complete(int n) {
  if (n < 1) throw std::invalid_argument("K_n needs n >= 1");
  if (n == 1) return ClosedFormSpectrum({{0.0, 1}});
  return ClosedFormSpectrum({{2.0 * n - 2.0, 1}, {n - 2.0, n - 1}});
}

ClosedFormSpectrum spectrum_complete_bipartite(int r, int s) {
  if (r < 1 || s < 1) throw std::invalid_argument("K_{r,s} needs r, s >= 1");
  return ClosedFormSpectrum({{double(r + s), 1}, {double(r), s - 1}, {double(s), r - 1}, {0.0, 1}});
}

std::pair<double, double> join_split_roots(int n, int k, int r) {
  const double centre = n - 2.0 + k / 2.0;
  const double disc = double(k - 2 * n) * (k - 2 * n) + 16.0 * r * (k - n + r);
  const double half = 0.5 * std::sqrt(std::max(disc, 0.0));
  return {centre + half, centre - half};
}

ClosedFormSpectrum spectrum_join_split(int n, int k, int r) {
  require_join_split(n, k, r);
  const auto [hi, lo] = join_split_roots(n, k, r);
  return ClosedFormSpectrum({{n - 2.0, k},
                             {k + r - 2.0, r - 1},
                             {n - r - 2.0, n - k - r - 1},
                             {hi, 1},
                             {lo, 1}});
}

QuotientMatrix quotient_matrix(const Graph& g, const EquitablePartition& p) {
  const int n = g.order();
  const int m = static_cast<int>(p.cells.size());
  std::vector<int> cell_of(n, -1);
  for (int i = 0; i < m; ++i) {
    if (p.cells[i].empty()) throw std::invalid_argument("partition cell " + std::to_string(i) + " is empty");
    for (int v : p.cells[i]) {
      if (v < 0 || v >= n) throw std::invalid_argument("partition vertex " + std::to_string(v) + " out of range");
      if (cell_of[v] >= 0) throw std::invalid_argument("vertex " + std::to_string(v) + " appears in two cells");
      cell_of[v] = i;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (cell_of[v] < 0) throw std::invalid_argument("vertex " + std::to_string(v) + " is not covered");
  }

  QuotientMatrix r;
  r.dim = m;
  r.entries.assign(static_cast<std::size_t>(m) * m, 0.0);
  for (const auto& cell : p.cells) r.cell_sizes.push_back(static_cast<int>(cell.size()));

  // Row sums of block (i, j): Q(v, w) summed over w in cell j.
  std::vector<int> sums(m);
  for (int i = 0; i < m; ++i) {
    bool first = true;
    for (int v : p.cells[i]) {
      std::fill(sums.begin(), sums.end(), 0);
      sums[i] += g.degree(v);
      for (int w = 0; w < n; ++w)
        if (g.adjacent(v, w)) ++sums[cell_of[w]];
      for (int j = 0; j < m; ++j) {
        if (first) {
          r.entries[static_cast<std::size_t>(i) * m + j] = sums[j];
        } else if (r.entries[static_cast<std::size_t>(i) * m + j] != sums[j]) {
          throw NonEquitablePartition("block (" + std::to_string(i) + ", " + std::to_string(j) +
                                          ") of Q has non-constant row sums",
                                      i, j);
        }
      }
      first = false;
    }
  }
  return r;
}

std::vector<double> quotient_eigenvalues(const QuotientMatrix& r) {
  SymMatrix sym(r.dim);
  for (int i = 0; i < r.dim; ++i) {
    for (int j = i; j < r.dim; ++j) {
      sym.set(i, j, r.at(i, j) * std::sqrt(double(r.cell_sizes[i]) / r.cell_sizes[j]));
    }
  }
  return symmetric_eigenvalues(sym);
}

std::vector<double> join_split_quotient_eigenvalues(int n, int k, int r) {
  require_join_split(n, k, r);
  const auto [hi, lo] = join_split_roots(n, k, r);
  std::vector<double> out{hi, n - 2.0, lo};
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

EquitablePartition join_split_partition(int n, int k, int r) {
  require_join_split(n, k, r);
  EquitablePartition p;
  p.cells.resize(3);
  for (int v = 0; v < k; ++v) p.cells[0].push_back(v);
  for (int v = k; v < k + r; ++v) p.cells[1].push_back(v);
  for (int v = k + r; v < n; ++v) p.cells[2].push_back(v);
  return p;
}

double bipartite_bound(int n, double alpha) {
  if (n < 2) throw std::invalid_argument("bipartite bound needs n >= 2");
  if (!std::isfinite(alpha)) throw std::invalid_argument("alpha must be finite");
  const int lo = n / 2;
  const int hi = n - lo;
  return power(n, alpha) + (lo - 1) * power(hi, alpha) + (hi - 1) * power(lo, alpha);
}

double connectivity_bound(int n, int k, double alpha) {
  if (k < 1 || k > n - 2) {
    throw std::invalid_argument("connectivity bound needs 1 <= k <= n-2, got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
  }
  if (!std::isfinite(alpha)) throw std::invalid_argument("alpha must be finite");
  const double rad = std::sqrt(double(k - 2 * n) * (k - 2 * n) + 16.0 * (k - n + 1));
  const double terms[4][2] = {{double(k), n - 2.0},
                              {double(n - k - 2), n - 3.0},
                              {1.0, n - 2.0 + k / 2.0 + rad / 2.0},
                              {1.0, n - 2.0 + k / 2.0 - rad / 2.0}};
  double sum = 0.0;
  for (const auto& [coeff, base] : terms) {
    if (coeff == 0.0) continue;
    if (base <= kClosedFormZero) {
      if (alpha < 0.0) {
        throw std::domain_error("b_alpha(" + std::to_string(n) + ", " + std::to_string(k) +
                                ") raises nonpositive base " + std::to_string(base) + " to a negative power");
      }
      continue;
    }
    sum += coeff * power(base, alpha);
  }
  return sum;
}

}  // namespace qspec

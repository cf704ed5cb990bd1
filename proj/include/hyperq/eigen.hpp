#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "hyperq/error.hpp"
#include "hyperq/matrix.hpp"

namespace hyperq {

// tau_solve is relative to ||M||_F; group/zero scales are relative to
// max(1, rho) of the decomposed matrix. Doubles leave ample headroom for the
// small-integer matrices this library produces at desk scale.
struct Tolerances {
  double solve = 1e-12;
  double group_scale = 1e-8;
  double zero_scale = 1e-8;
};

inline constexpr int kJacobiSweepLimit = 100;

struct EigenGroup {
  double value = 0.0;  // mean of the clustered eigenvalues
  int multiplicity = 0;
};

// Full eigendecomposition of a symmetric matrix: eigenvalues descending,
// orthonormal eigenvectors paired by index, and single-linkage clusters of
// the sorted eigenvalue list under tau_group.
struct Spectrum {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
  std::vector<EigenGroup> groups;
  double tau_solve = 0.0;  // absolute residual tolerance actually used
  double tau_group = 0.0;
  double tau_zero = 0.0;

  int order() const { return static_cast<int>(values.size()); }

  // Spectral radius: largest eigenvalue magnitude.
  double rho() const {
    return std::max(std::abs(values.front()), std::abs(values.back()));
  }

  double min_value() const { return values.back(); }

  bool is_zero(double lambda) const { return std::abs(lambda) <= tau_zero; }

  int zero_count() const {
    int c = 0;
    for (double v : values)
      if (is_zero(v)) ++c;
    return c;
  }

  // Index of the first eigenvalue classified as zero under the descending
  // ordering, or -1 when the matrix has full rank.
  int first_zero_index() const {
    for (int i = 0; i < order(); ++i)
      if (is_zero(values[i])) return i;
    return -1;
  }
};

namespace detail {

inline void jacobi_rotate(std::vector<double>& a, std::vector<double>& v, int n, int p, int q) {
  double apq = a[static_cast<std::size_t>(p) * n + q];
  if (apq == 0.0) return;
  double app = a[static_cast<std::size_t>(p) * n + p];
  double aqq = a[static_cast<std::size_t>(q) * n + q];
  double theta = (aqq - app) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 1.0 / (2.0 * theta);  // avoids overflow in theta*theta
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0) t = -t;
  }
  double c = 1.0 / std::sqrt(t * t + 1.0);
  double s = t * c;
  double tau = s / (1.0 + c);

  a[static_cast<std::size_t>(p) * n + p] = app - t * apq;
  a[static_cast<std::size_t>(q) * n + q] = aqq + t * apq;
  a[static_cast<std::size_t>(p) * n + q] = 0.0;
  a[static_cast<std::size_t>(q) * n + p] = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i == p || i == q) continue;
    double aip = a[static_cast<std::size_t>(i) * n + p];
    double aiq = a[static_cast<std::size_t>(i) * n + q];
    a[static_cast<std::size_t>(i) * n + p] = aip - s * (aiq + tau * aip);
    a[static_cast<std::size_t>(p) * n + i] = a[static_cast<std::size_t>(i) * n + p];
    a[static_cast<std::size_t>(i) * n + q] = aiq + s * (aip - tau * aiq);
    a[static_cast<std::size_t>(q) * n + i] = a[static_cast<std::size_t>(i) * n + q];
  }
  for (int i = 0; i < n; ++i) {
    double vip = v[static_cast<std::size_t>(i) * n + p];
    double viq = v[static_cast<std::size_t>(i) * n + q];
    v[static_cast<std::size_t>(i) * n + p] = vip - s * (viq + tau * vip);
    v[static_cast<std::size_t>(i) * n + q] = viq + s * (vip - tau * viq);
  }
}

inline double off_diagonal_norm(const std::vector<double>& a, int n) {
  double s = 0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      double x = a[static_cast<std::size_t>(p) * n + q];
      s += 2.0 * x * x;
    }
  return std::sqrt(s);
}

// Largest-magnitude entry positive, ties broken by lowest index.
inline void fix_sign(std::vector<double>& x) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < x.size(); ++i)
    if (std::abs(x[i]) > std::abs(x[best])) best = i;
  if (x[best] < 0)
    for (double& v : x) v = -v;
}

}  // namespace detail

inline Spectrum eigen_decompose(const SymmetricMatrix& m, const Tolerances& tol = {}) {
  int n = m.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    v[static_cast<std::size_t>(i) * n + i] = 1.0;
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m(i, j);
  }

  double norm_f = m.frobenius_norm();
  double threshold = tol.solve * norm_f;
  bool converged = false;
  for (int sweep = 0; sweep < kJacobiSweepLimit; ++sweep) {
    if (detail::off_diagonal_norm(a, n) <= threshold) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) detail::jacobi_rotate(a, v, n, p, q);
  }
  if (!converged && detail::off_diagonal_norm(a, n) > threshold)
    fail(errc::no_convergence, "rotation sweeps exhausted (" + std::to_string(kJacobiSweepLimit) +
         ") with off-diagonal norm " + std::to_string(detail::off_diagonal_norm(a, n)));

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
    return a[static_cast<std::size_t>(i) * n + i] > a[static_cast<std::size_t>(j) * n + j];
  });

  Spectrum spec;
  spec.values.resize(n);
  spec.vectors.assign(n, std::vector<double>(n));
  for (int col = 0; col < n; ++col) {
    int src = idx[col];
    spec.values[col] = a[static_cast<std::size_t>(src) * n + src];
    for (int row = 0; row < n; ++row)
      spec.vectors[col][row] = v[static_cast<std::size_t>(row) * n + src];
    detail::fix_sign(spec.vectors[col]);
  }

  double scale = std::max(1.0, spec.rho());
  spec.tau_solve = tol.solve * norm_f;
  spec.tau_group = tol.group_scale * scale;
  spec.tau_zero = tol.zero_scale * scale;

  // Single-linkage clustering of the sorted list: a gap > tau_group closes
  // the current group.
  int start = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == n || spec.values[i - 1] - spec.values[i] > spec.tau_group) {
      double sum = 0;
      for (int j = start; j < i; ++j) sum += spec.values[j];
      spec.groups.push_back({sum / (i - start), i - start});
      start = i;
    }
  }
  return spec;
}

inline double eigenpair_residual(const SymmetricMatrix& m, double lambda,
                                 std::span<const double> x) {
  std::vector<double> y = m.apply(x);
  double s = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    double d = y[i] - lambda * x[i];
    s += d * d;
  }
  return std::sqrt(s);
}

// Elementwise comparison of two sorted-descending eigenvalue multisets.
inline bool multisets_close(std::vector<double> a, std::vector<double> b, double tol) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

}  // namespace hyperq

#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hyperq/error.hpp"

namespace hyperq {

// Dense real symmetric matrix; one entry stored per unordered pair, so
// M = M^T holds exactly by construction.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int n) : n_(n), tri_(static_cast<std::size_t>(n) * (n + 1) / 2, 0.0) {
    if (n < 1) fail(errc::bad_params, "matrix order must be >= 1");
  }

  static SymmetricMatrix diagonal(const std::vector<double>& d) {
    SymmetricMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.n_; ++i) m.set(i, i, d[i]);
    return m;
  }

  int order() const { return n_; }

  double operator()(int i, int j) const { return tri_[pos(i, j)]; }

  void set(int i, int j, double v) { tri_[pos(i, j)] = v; }
  void add(int i, int j, double v) { tri_[pos(i, j)] += v; }

  double trace() const {
    double t = 0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) s += (*this)(i, j) * (*this)(i, j);
    return std::sqrt(s);
  }

  std::vector<double> row_sums() const {
    std::vector<double> r(n_, 0.0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r[i] += (*this)(i, j);
    return r;
  }

  std::vector<double> apply(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != n_)
      fail(errc::dimension_mismatch, "vector of size " + std::to_string(x.size()) +
           " against matrix of order " + std::to_string(n_));
    std::vector<double> y(n_, 0.0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  bool has_integer_entries() const {
    for (double v : tri_)
      if (v != std::nearbyint(v)) return false;
    return true;
  }

  bool equals_exactly(const SymmetricMatrix& other) const {
    return n_ == other.n_ && tri_ == other.tri_;
  }

 private:
  std::size_t pos(int i, int j) const {
    if (i > j) std::swap(i, j);
    // row-major packed upper triangle: row i starts at i*n - i*(i-1)/2
    return static_cast<std::size_t>(i) * n_ - static_cast<std::size_t>(i) * (i - 1) / 2 + (j - i);
  }

  int n_;
  std::vector<double> tri_;
};

// 0/1 vertex-edge incidence matrix. Column sums equal k, row sums equal
// vertex degrees.
class IncidenceMatrix {
 public:
  IncidenceMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows < 1 || cols < 1) fail(errc::bad_params, "incidence matrix needs positive dimensions");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int operator()(int v, int e) const { return a_[static_cast<std::size_t>(v) * cols_ + e]; }
  void set(int v, int e, bool bit) { a_[static_cast<std::size_t>(v) * cols_ + e] = bit ? 1 : 0; }

  std::vector<int> row_sums() const {
    std::vector<int> r(rows_, 0);
    for (int v = 0; v < rows_; ++v)
      for (int e = 0; e < cols_; ++e) r[v] += (*this)(v, e);
    return r;
  }

  std::vector<int> column_sums() const {
    std::vector<int> c(cols_, 0);
    for (int v = 0; v < rows_; ++v)
      for (int e = 0; e < cols_; ++e) c[e] += (*this)(v, e);
    return c;
  }

  // B * B^T, the vertex Gram matrix (integer entries).
  SymmetricMatrix gram_vertices() const {
    SymmetricMatrix m(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = i; j < rows_; ++j) {
        long long s = 0;
        for (int e = 0; e < cols_; ++e) s += (*this)(i, e) * (*this)(j, e);
        m.set(i, j, static_cast<double>(s));
      }
    return m;
  }

  // B^T * B, the edge Gram matrix (integer entries).
  SymmetricMatrix gram_edges() const {
    SymmetricMatrix m(cols_);
    for (int e = 0; e < cols_; ++e)
      for (int f = e; f < cols_; ++f) {
        long long s = 0;
        for (int v = 0; v < rows_; ++v) s += (*this)(v, e) * (*this)(v, f);
        m.set(e, f, static_cast<double>(s));
      }
    return m;
  }

  // B^T x for a vertex vector x: component e is x(e) = sum of x over edge e.
  std::vector<double> edge_sums(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != rows_)
      fail(errc::dimension_mismatch, "vector of size " + std::to_string(x.size()) +
           " against incidence with " + std::to_string(rows_) + " vertices");
    std::vector<double> s(cols_, 0.0);
    for (int v = 0; v < rows_; ++v)
      for (int e = 0; e < cols_; ++e)
        if ((*this)(v, e)) s[e] += x[v];
    return s;
  }

 private:
  int rows_, cols_;
  std::vector<std::uint8_t> a_;
};

// Rank of a stacked row family by Gaussian elimination with partial
// pivoting; entries below tol (relative to the largest initial entry) are
// treated as zero.
inline int numeric_rank(std::vector<std::vector<double>> rows, double tol = 1e-8) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  double scale = 0;
  for (const auto& r : rows) {
    if (r.size() != cols) fail(errc::dimension_mismatch, "ragged row family");
    for (double v : r) scale = std::max(scale, std::abs(v));
  }
  if (scale == 0) return 0;
  double eps = tol * scale;
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = rank;
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (std::abs(rows[r][c]) > std::abs(rows[pivot][c])) pivot = r;
    if (std::abs(rows[pivot][c]) <= eps) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank)) continue;
      double f = rows[r][c] / rows[rank][c];
      if (f != 0.0)
        for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline double norm2(std::span<const double> x) {
  double s = 0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

inline double norm_inf(std::span<const double> x) {
  double s = 0;
  for (double v : x) s = std::max(s, std::abs(v));
  return s;
}

}  // namespace hyperq

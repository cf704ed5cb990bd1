#pragma once

#include <string>
#include <vector>

#include "hyperq/error.hpp"
#include "hyperq/hypergraph.hpp"
#include "hyperq/matrix.hpp"

namespace hyperq {

// Multigraph on 0..n-1 with integer pair multiplicities and zero diagonal.
class Multigraph {
 public:
  explicit Multigraph(int n) : n_(n), upper_(static_cast<std::size_t>(n) * (n - 1) / 2, 0) {
    if (n < 1) fail(errc::bad_params, "multigraph needs at least one vertex");
  }

  int order() const { return n_; }

  int multiplicity(int i, int j) const {
    check(i);
    check(j);
    if (i == j) return 0;
    return upper_[pos(i, j)];
  }

  void set_multiplicity(int i, int j, int mult) {
    check(i);
    check(j);
    if (i == j) fail(errc::bad_params, "multigraph diagonal is fixed at zero");
    if (mult < 0) fail(errc::bad_params, "edge multiplicity must be >= 0");
    upper_[pos(i, j)] = mult;
  }

  // Degree counts incident edges with multiplicity.
  int degree(int v) const {
    check(v);
    int d = 0;
    for (int w = 0; w < n_; ++w)
      if (w != v) d += upper_[pos(v, w)];
    return d;
  }

  SymmetricMatrix adjacency() const {
    SymmetricMatrix a(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) a.set(i, j, upper_[pos(i, j)]);
    return a;
  }

  bool operator==(const Multigraph& other) const {
    return n_ == other.n_ && upper_ == other.upper_;
  }

 private:
  void check(int v) const {
    if (v < 0 || v >= n_)
      fail(errc::unknown_vertex, "multigraph vertex " + std::to_string(v) + " out of range");
  }

  std::size_t pos(int i, int j) const {
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(i) * (2 * n_ - i - 1) / 2 + (j - i - 1);
  }

  int n_;
  std::vector<int> upper_;
};

// Multigraph on V(H): multiplicity of pair (i,j) counts edges containing both.
inline Multigraph clique_multigraph(const Hypergraph& h) {
  Multigraph g(h.vertex_count());
  for (const Edge& e : h.edges())
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b)
        g.set_multiplicity(e[a], e[b], g.multiplicity(e[a], e[b]) + 1);
  return g;
}

// Multigraph on E(H): multiplicity of pair (e,f) is |e intersect f|.
inline Multigraph line_multigraph(const Hypergraph& h) {
  int m = h.edge_count();
  Multigraph g(m);
  for (int e = 0; e < m; ++e)
    for (int f = e + 1; f < m; ++f) {
      const Edge& a = h.edge(e);
      const Edge& b = h.edge(f);
      int common = 0;
      // both sorted
      for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++common; ++i; ++j; }
      }
      if (common > 0) g.set_multiplicity(e, f, common);
    }
  return g;
}

// Self-test of the line-degree identity: for every edge e, the line
// multigraph degree of its vertex equals (sum of d_H(v) over v in e) - k.
inline bool line_degree_check(const Hypergraph& h) {
  Multigraph line = line_multigraph(h);
  DegreeProfile deg = degrees(h);
  for (int e = 0; e < h.edge_count(); ++e) {
    long long sum = 0;
    for (int v : h.edge(e)) sum += deg.per_vertex[v];
    if (line.degree(e) != sum - h.k()) return false;
  }
  return true;
}

}  // namespace hyperq

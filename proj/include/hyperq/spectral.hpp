#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "hyperq/charpoly.hpp"
#include "hyperq/eigen.hpp"
#include "hyperq/error.hpp"
#include "hyperq/hypergraph.hpp"
#include "hyperq/matrix.hpp"
#include "hyperq/multigraph.hpp"

namespace hyperq {

inline IncidenceMatrix incidence_matrix(const Hypergraph& h) {
  IncidenceMatrix b(h.vertex_count(), h.edge_count());
  for (int e = 0; e < h.edge_count(); ++e)
    for (int v : h.edge(e)) b.set(v, e, true);
  return b;
}

inline SymmetricMatrix degree_matrix(const Hypergraph& h) {
  DegreeProfile p = degrees(h);
  std::vector<double> d(p.per_vertex.begin(), p.per_vertex.end());
  return SymmetricMatrix::diagonal(d);
}

// Q = B B^T, cross-checked against the clique-multigraph factorization
// Q = D + A_C; a mismatch means a bug, not bad input.
inline SymmetricMatrix signless_laplacian(const Hypergraph& h) {
  SymmetricMatrix q = incidence_matrix(h).gram_vertices();
  SymmetricMatrix alt = clique_multigraph(h).adjacency();
  DegreeProfile p = degrees(h);
  for (int i = 0; i < h.vertex_count(); ++i) alt.add(i, i, p.per_vertex[i]);
  if (!q.equals_exactly(alt))
    fail(errc::internal_consistency, "B B^T differs from degree-plus-clique form");
  return q;
}

// B^T B, cross-checked against k I + A_L.
inline SymmetricMatrix gram_line_matrix(const Hypergraph& h) {
  SymmetricMatrix g = incidence_matrix(h).gram_edges();
  SymmetricMatrix alt = line_multigraph(h).adjacency();
  for (int e = 0; e < h.edge_count(); ++e) alt.add(e, e, h.k());
  if (!g.equals_exactly(alt))
    fail(errc::internal_consistency, "B^T B differs from k-shifted line adjacency");
  return g;
}

struct PerronResult {
  double rho = 0.0;
  std::vector<double> principal;  // unit 2-norm, sign-fixed
  bool connected = false;         // positivity/simplicity only guaranteed when true
  bool simple = false;            // lambda1 - lambda2 > tau_group
};

inline PerronResult perron(const Hypergraph& h, const Tolerances& tol = {}) {
  Spectrum spec = eigen_decompose(signless_laplacian(h), tol);
  PerronResult r;
  r.rho = spec.values.front();
  r.principal = spec.vectors.front();
  r.connected = is_connected(h);
  r.simple = spec.order() < 2 || spec.values[0] - spec.values[1] > spec.tau_group;
  return r;
}

inline double spectral_radius(const Hypergraph& h, const Tolerances& tol = {}) {
  return perron(h, tol).rho;
}

inline std::vector<double> principal_eigenvector(const Hypergraph& h, const Tolerances& tol = {}) {
  return perron(h, tol).principal;
}

// Sum over edges of x(e)^2, where x(e) adds x over the vertices of e.
// Equals x^T Q x.
inline double quadratic_form_edges(const Hypergraph& h, std::span<const double> x) {
  if (static_cast<int>(x.size()) != h.vertex_count())
    fail(errc::dimension_mismatch, "vector of size " + std::to_string(x.size()) +
         " against hypergraph with " + std::to_string(h.vertex_count()) + " vertices");
  double total = 0;
  for (const Edge& e : h.edges()) {
    double s = 0;
    for (int v : e) s += x[v];
    total += s * s;
  }
  return total;
}

// P_{A_L}(lambda) * (lambda+k)^max(0, n-m) == (lambda+k)^max(0, m-n) * P_Q(lambda+k)
// as exact integer polynomials.
inline bool verify_poly_identity_line(const Hypergraph& h,
                                      int order_limit = kDefaultCharPolyOrderLimit) {
  int n = h.vertex_count();
  int m = h.edge_count();
  CharPoly pal = char_poly_exact(line_multigraph(h).adjacency(), order_limit);
  CharPoly pq = char_poly_exact(signless_laplacian(h), order_limit);
  CharPoly lhs = pal.times_power_of_linear(h.k(), std::max(0, n - m));
  CharPoly rhs = pq.shifted(h.k()).times_power_of_linear(h.k(), std::max(0, m - n));
  return lhs == rhs;
}

// Regular variant: P_{A_L}(lambda) * (lambda+k)^max(0, n-m)
// == (lambda+k)^max(0, m-n) * P_{A_C}(lambda - r + k), r the common degree.
inline bool verify_poly_identity_clique_regular(const Hypergraph& h,
                                                int order_limit = kDefaultCharPolyOrderLimit) {
  DegreeProfile deg = degrees(h);
  if (deg.min != deg.max)
    throw std::invalid_argument("clique polynomial identity requires a regular hypergraph");
  int r = deg.max;
  int n = h.vertex_count();
  int m = h.edge_count();
  CharPoly pal = char_poly_exact(line_multigraph(h).adjacency(), order_limit);
  CharPoly pac = char_poly_exact(clique_multigraph(h).adjacency(), order_limit);
  CharPoly lhs = pal.times_power_of_linear(h.k(), std::max(0, n - m));
  CharPoly rhs = pac.shifted(h.k() - r).times_power_of_linear(h.k(), std::max(0, m - n));
  return lhs == rhs;
}

// Spec(Q(G union G')) equals the multiset union of the two spectra when the
// token sets are disjoint.
inline bool spectrum_union_check(const Hypergraph& g, const Hypergraph& h,
                                 const Tolerances& tol = {}) {
  if (g.k() != h.k())
    fail(errc::uniformity_mismatch, "union check needs equal uniformity");
  std::set<std::string> toks(g.tokens().begin(), g.tokens().end());
  for (const std::string& t : h.tokens())
    if (toks.count(t))
      throw std::invalid_argument("union spectrum check needs disjoint vertex tokens; shared '" + t + "'");
  Spectrum sg = eigen_decompose(signless_laplacian(g), tol);
  Spectrum sh = eigen_decompose(signless_laplacian(h), tol);
  Spectrum su = eigen_decompose(signless_laplacian(union_of(g, h)), tol);
  std::vector<double> expected = sg.values;
  expected.insert(expected.end(), sh.values.begin(), sh.values.end());
  double tau = std::max({sg.tau_group, sh.tau_group, su.tau_group});
  return multisets_close(expected, su.values, tau);
}

// Every pairwise sum mu + lambda of base eigenvalues is an eigenvalue of the
// product; counting multiplicities the sums exhaust the product spectrum, so
// the containment check is a full multiset comparison.
inline bool product_eigsum_check(const Hypergraph& g, const Hypergraph& h,
                                 const Tolerances& tol = {}) {
  if (g.k() != h.k())
    fail(errc::uniformity_mismatch, "product check needs equal uniformity");
  Spectrum sg = eigen_decompose(signless_laplacian(g), tol);
  Spectrum sh = eigen_decompose(signless_laplacian(h), tol);
  Spectrum sp = eigen_decompose(signless_laplacian(cartesian_product(g, h)), tol);
  std::vector<double> sums;
  sums.reserve(sg.values.size() * sh.values.size());
  for (double mu : sg.values)
    for (double lambda : sh.values) sums.push_back(mu + lambda);
  return multisets_close(sums, sp.values, std::max(sp.tau_group, sg.tau_group + sh.tau_group));
}

inline bool is_subgraph_of(const Hypergraph& sub, const Hypergraph& h) {
  if (sub.k() != h.k()) return false;
  for (const std::string& t : sub.tokens())
    if (!h.index_of(t)) return false;
  for (const Edge& e : sub.edges()) {
    Edge mapped;
    for (int v : e) mapped.push_back(*h.index_of(sub.token(v)));
    std::sort(mapped.begin(), mapped.end());
    if (!h.contains_edge(mapped)) return false;
  }
  return true;
}

// rho is monotone under subgraph inclusion (vertex tokens identify vertices).
inline bool subgraph_monotonicity_check(const Hypergraph& h, const Hypergraph& sub,
                                        const Tolerances& tol = {}) {
  if (!is_subgraph_of(sub, h))
    fail(errc::not_a_subgraph, "second hypergraph is not a subgraph of the first");
  return spectral_radius(sub, tol) <= spectral_radius(h, tol) + tol.solve;
}

}  // namespace hyperq

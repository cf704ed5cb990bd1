#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperq/eigen.hpp"
#include "hyperq/error.hpp"
#include "hyperq/hypergraph.hpp"
#include "hyperq/spectral.hpp"

namespace hyperq {

// Cheap integer upper bound on rho(Q): the largest edge degree-sum. Used to
// scale zero-decisions in calls that do not run the eigensolver.
inline long long max_edge_degree_sum(const Hypergraph& h) {
  DegreeProfile deg = degrees(h);
  long long best = 0;
  for (const Edge& e : h.edges()) {
    long long s = 0;
    for (int v : e) s += deg.per_vertex[v];
    best = std::max(best, s);
  }
  return best;
}

struct RegularityReport {
  bool connected = false;
  bool is_regular = false;         // (a) delta == Delta
  bool rho_equals_k_avg = false;   // (b) rho == k * d(H)
  bool rho_equals_k_max = false;   // (c) rho == k * Delta(H)
  bool principal_uniform = false;  // (d) principal eigenvector constant
  double rho = 0.0;
  double k_avg_degree = 0.0;
  double k_max_degree = 0.0;
};

// Evaluates the four equivalent regularity conditions. On connected input
// they must agree; disagreement is a bug in the numerics.
inline RegularityReport regularity_report(const Hypergraph& h, const Tolerances& tol = {}) {
  Spectrum spec = eigen_decompose(signless_laplacian(h), tol);
  DegreeProfile deg = degrees(h);
  RegularityReport r;
  r.connected = is_connected(h);
  r.rho = spec.values.front();
  r.k_avg_degree = h.k() * static_cast<double>(deg.sum) / h.vertex_count();
  r.k_max_degree = static_cast<double>(h.k()) * deg.max;
  r.is_regular = deg.min == deg.max;
  r.rho_equals_k_avg = std::abs(r.rho - r.k_avg_degree) <= spec.tau_zero;
  r.rho_equals_k_max = std::abs(r.rho - r.k_max_degree) <= spec.tau_zero;
  const std::vector<double>& x = spec.vectors.front();
  double uniform = 1.0 / std::sqrt(static_cast<double>(h.vertex_count()));
  r.principal_uniform = true;
  for (double v : x)
    if (std::abs(v - uniform) > spec.tau_zero) {
      r.principal_uniform = false;
      break;
    }
  if (r.connected) {
    bool a = r.is_regular;
    if (a != r.rho_equals_k_avg || a != r.rho_equals_k_max || a != r.principal_uniform)
      fail(errc::internal_consistency, "regularity conditions disagree on a connected hypergraph");
  }
  return r;
}

// True iff x(e) vanishes on every edge, the defining property of a
// 0-eigenvector of Q.
inline bool zero_eigenpair_valid(const Hypergraph& h, std::span<const double> x,
                                 const Tolerances& tol = {}) {
  if (static_cast<int>(x.size()) != h.vertex_count())
    fail(errc::dimension_mismatch, "vector of size " + std::to_string(x.size()) +
         " against hypergraph with " + std::to_string(h.vertex_count()) + " vertices");
  double nrm = norm2(x);
  if (nrm == 0.0) fail(errc::zero_vector, "candidate eigenvector is identically zero");
  double tau = tol.zero_scale * static_cast<double>(max_edge_degree_sum(h)) * nrm;
  for (const Edge& e : h.edges()) {
    double s = 0;
    for (int v : e) s += x[v];
    if (std::abs(s) > tau) return false;
  }
  return true;
}

// V0, V1, V2 partition V; V1, V2 nonempty; every edge lies inside V0 or meets
// both V1 and V2. `balanced` carries the constant ratio |e cap V1| / |e cap V2|
// as an exact reduced fraction when claimed.
struct PartialBipartition {
  std::vector<int> v0, v1, v2;
  std::optional<std::pair<long long, long long>> balanced;

  double ratio() const {
    return balanced ? static_cast<double>(balanced->first) / balanced->second : 0.0;
  }
};

inline bool validate_partial_bipartition(const Hypergraph& h, const PartialBipartition& p) {
  int n = h.vertex_count();
  std::vector<int> part(n, -1);
  auto assign = [&](const std::vector<int>& vs, int label) {
    for (int v : vs) {
      if (v < 0 || v >= n || part[v] != -1) return false;
      part[v] = label;
    }
    return true;
  };
  if (!assign(p.v0, 0) || !assign(p.v1, 1) || !assign(p.v2, 2)) return false;
  if (std::count(part.begin(), part.end(), -1) > 0) return false;
  if (p.v1.empty() || p.v2.empty()) return false;
  if (p.balanced && (p.balanced->first <= 0 || p.balanced->second <= 0)) return false;
  for (const Edge& e : h.edges()) {
    int in1 = 0, in2 = 0;
    for (int v : e) {
      if (part[v] == 1) ++in1;
      if (part[v] == 2) ++in2;
    }
    if (in1 + in2 == 0) continue;  // edge inside V0
    if (in1 == 0 || in2 == 0) return false;
    if (p.balanced && static_cast<long long>(in1) * p.balanced->second !=
                          static_cast<long long>(in2) * p.balanced->first)
      return false;
  }
  return true;
}

// When 0 is an eigenvalue of Q, signs of a kernel vector split V into a
// partial bipartition. The first kernel column under the descending solver
// order is used; entries within theta of zero land in V0.
inline std::optional<PartialBipartition> partial_bipartition_from_kernel(
    const Hypergraph& h, const Tolerances& tol = {}) {
  Spectrum spec = eigen_decompose(signless_laplacian(h), tol);
  int zi = spec.first_zero_index();
  if (zi < 0) return std::nullopt;
  const std::vector<double>& x = spec.vectors[zi];
  double theta = spec.tau_zero * norm_inf(x);
  PartialBipartition p;
  for (int v = 0; v < h.vertex_count(); ++v) {
    if (x[v] > theta) p.v1.push_back(v);
    else if (x[v] < -theta) p.v2.push_back(v);
    else p.v0.push_back(v);
  }
  if (!validate_partial_bipartition(h, p))
    fail(errc::internal_consistency, "kernel vector produced an invalid partial bipartition");
  return p;
}

// x = 1 on V1, -c on V2, 0 on V0 is a 0-eigenvector whenever the partition is
// balanced with ratio c.
inline std::vector<double> balanced_bipartition_to_kernel(const Hypergraph& h,
                                                          const PartialBipartition& p,
                                                          const Tolerances& tol = {}) {
  if (!p.balanced)
    fail(errc::not_balanced, "partition carries no ratio claim");
  if (!validate_partial_bipartition(h, p))
    fail(errc::not_balanced, "partition fails the balanced invariant");
  std::vector<double> x(h.vertex_count(), 0.0);
  double c = p.ratio();
  for (int v : p.v1) x[v] = 1.0;
  for (int v : p.v2) x[v] = -c;
  if (!zero_eigenpair_valid(h, x, tol))
    fail(errc::internal_consistency, "balanced partition vector is not a kernel vector");
  return x;
}

// Searches the two cheap certificates of balancedness: a duplicate vertex
// pair (same incident edges) and a vertex whose every edge carries its own
// degree-1 companion. Both give ratio 1.
inline std::optional<PartialBipartition> detect_easy_balanced_patterns(const Hypergraph& h) {
  int n = h.vertex_count();
  std::vector<std::vector<int>> incident(n);
  for (int v = 0; v < n; ++v) incident[v] = edge_neighborhood(h, v);

  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (incident[u] == incident[v]) {
        PartialBipartition p;
        p.v1 = {u};
        p.v2 = {v};
        for (int w = 0; w < n; ++w)
          if (w != u && w != v) p.v0.push_back(w);
        p.balanced = {1, 1};
        if (!validate_partial_bipartition(h, p))
          fail(errc::internal_consistency, "duplicate-vertex partition failed validation");
        return p;
      }

  DegreeProfile deg = degrees(h);
  for (int v = 0; v < n; ++v) {
    std::vector<int> companions;
    bool ok = true;
    for (int e : incident[v]) {
      int found = -1;
      for (int w : h.edge(e))
        if (w != v && deg.per_vertex[w] == 1) {
          found = w;
          break;  // edge vertices sorted, so this is the lowest-index companion
        }
      if (found < 0) {
        ok = false;
        break;
      }
      companions.push_back(found);
    }
    if (!ok) continue;
    PartialBipartition p;
    p.v1 = {v};
    p.v2 = companions;
    std::sort(p.v2.begin(), p.v2.end());
    std::vector<char> used(n, 0);
    used[v] = 1;
    for (int w : p.v2) used[w] = 1;
    for (int w = 0; w < n; ++w)
      if (!used[w]) p.v0.push_back(w);
    p.balanced = {1, 1};
    if (!validate_partial_bipartition(h, p))
      fail(errc::internal_consistency, "companion-vertex partition failed validation");
    return p;
  }
  return std::nullopt;
}

struct DegreeSumBounds {
  bool connected = false;
  long long lower = 0;  // min over edges of the edge degree-sum
  long long upper = 0;  // max over edges
  double k_avg = 0.0;   // k * d(H)
  double k_max = 0.0;   // k * Delta(H)
  double rho = 0.0;
  bool edge_sum_bounds_hold = false;
  bool k_degree_bounds_hold = false;
};

// Edge degree-sum bounds and the coarser k*d <= rho <= k*Delta corollary.
// Both are theorems on connected input, so violations there are bugs.
inline DegreeSumBounds degree_sum_bounds(const Hypergraph& h, const Tolerances& tol = {}) {
  Spectrum spec = eigen_decompose(signless_laplacian(h), tol);
  DegreeProfile deg = degrees(h);
  DegreeSumBounds b;
  b.connected = is_connected(h);
  b.rho = spec.values.front();
  b.lower = std::numeric_limits<long long>::max();
  for (const Edge& e : h.edges()) {
    long long s = 0;
    for (int v : e) s += deg.per_vertex[v];
    b.lower = std::min(b.lower, s);
    b.upper = std::max(b.upper, s);
  }
  b.k_avg = h.k() * static_cast<double>(deg.sum) / h.vertex_count();
  b.k_max = static_cast<double>(h.k()) * deg.max;
  double tau = spec.tau_zero;
  b.edge_sum_bounds_hold = b.lower - tau <= b.rho && b.rho <= b.upper + tau;
  b.k_degree_bounds_hold = b.k_avg - tau <= b.rho && b.rho <= b.k_max + tau;
  if (b.connected && (!b.edge_sum_bounds_hold || !b.k_degree_bounds_hold))
    fail(errc::internal_consistency, "spectral radius escaped its degree bounds");
  return b;
}

struct Coloring {
  std::vector<int> assignment;  // vertex -> color in 1..color_count
  int color_count = 0;
};

inline bool coloring_is_proper(const Hypergraph& h, const Coloring& c) {
  if (static_cast<int>(c.assignment.size()) != h.vertex_count()) return false;
  for (const Edge& e : h.edges()) {
    bool mono = true;
    for (int v : e)
      if (c.assignment[v] != c.assignment[e.front()]) {
        mono = false;
        break;
      }
    if (mono) return false;
  }
  return true;
}

// Orders vertices by repeatedly removing a minimum-degree vertex from the
// shrinking induced sub-hypergraph (ties: lowest index), then colors in
// reverse removal order, giving each vertex the smallest color that keeps
// every completed edge non-monochromatic.
inline Coloring greedy_min_degree_coloring(const Hypergraph& h) {
  int n = h.vertex_count();
  std::vector<char> alive(n, 1);
  std::vector<int> order(n);
  for (int t = n - 1; t >= 0; --t) {
    std::vector<int> deg(n, 0);
    for (const Edge& e : h.edges()) {
      bool all = std::all_of(e.begin(), e.end(), [&](int v) { return alive[v]; });
      if (all)
        for (int v : e) ++deg[v];
    }
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (alive[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
    order[t] = pick;
    alive[pick] = 0;
  }

  std::vector<int> pos(n);
  for (int t = 0; t < n; ++t) pos[order[t]] = t;

  Coloring col;
  col.assignment.assign(n, 0);
  for (int t = 0; t < n; ++t) {
    int v = order[t];
    std::vector<char> forbidden(n + 2, 0);
    for (const Edge& e : h.edges()) {
      if (std::find(e.begin(), e.end(), v) == e.end()) continue;
      bool completed = true;
      int shared = -1;
      for (int w : e) {
        if (w == v) continue;
        if (pos[w] > t) {
          completed = false;
          break;
        }
        if (shared == -1) shared = col.assignment[w];
        else if (shared != col.assignment[w]) shared = 0;
      }
      if (completed && shared > 0) forbidden[shared] = 1;
    }
    int c = 1;
    while (forbidden[c]) ++c;
    col.assignment[v] = c;
    col.color_count = std::max(col.color_count, c);
  }
  return col;
}

// floor(rho/k) + 1 with a sliver of slack so an integer-valued rho computed
// marginally low cannot drop the floor.
inline int chromatic_upper_bound(double rho, int k) {
  return static_cast<int>(std::floor(rho / k + 1e-9 * std::max(1.0, rho / k))) + 1;
}

// m recovered from the eigenvalue sum: trace(Q) = k m.
inline int spectral_edge_count(const Spectrum& spec, int k) {
  double sum = std::accumulate(spec.values.begin(), spec.values.end(), 0.0);
  double ratio = sum / k;
  double rounded = std::nearbyint(ratio);
  if (std::abs(ratio - rounded) > 0.01)
    fail(errc::not_near_integer, "eigenvalue sum over k is " + std::to_string(ratio) +
         ", not near an integer");
  return static_cast<int>(rounded);
}

struct DiameterSpectrumReport {
  int distinct = 0;
  int diameter = 0;
  bool holds = false;  // distinct >= diameter + 1
};

inline DiameterSpectrumReport distinct_eigenvalues_vs_diameter(const Hypergraph& h,
                                                               const Tolerances& tol = {}) {
  if (!is_connected(h))
    fail(errc::disconnected, "distinct-eigenvalue bound needs a connected hypergraph");
  Spectrum spec = eigen_decompose(signless_laplacian(h), tol);
  DiameterSpectrumReport r;
  r.distinct = static_cast<int>(spec.groups.size());
  r.diameter = *diameter(h);
  r.holds = r.distinct >= r.diameter + 1;
  return r;
}

// floor(1 + log((1-x_min^2)/x_min^2) / log(lambda1/lambda2)) with x_min the
// smallest principal eigenvector entry; an upper bound on the diameter when
// lambda1 is simple and m >= 2.
inline int diameter_upper_bound(const Hypergraph& h, const Tolerances& tol = {}) {
  if (!is_connected(h))
    fail(errc::disconnected, "diameter bound needs a connected hypergraph");
  if (h.edge_count() < 2)
    fail(errc::too_few_edges, "diameter bound needs at least two edges");
  Spectrum spec = eigen_decompose(signless_laplacian(h), tol);
  double l1 = spec.values[0];
  double l2 = spec.values[1];
  if (l1 - l2 <= spec.tau_group)
    fail(errc::degenerate_spectrum, "largest eigenvalue is not simple within tau_group");
  if (l2 <= 0)
    fail(errc::internal_consistency, "second eigenvalue should be positive here");
  const std::vector<double>& x = spec.vectors.front();
  double xmin = *std::min_element(x.begin(), x.end());
  if (xmin <= 0)
    fail(errc::internal_consistency, "principal eigenvector not positive on connected input");
  double bound = 1.0 + std::log((1.0 - xmin * xmin) / (xmin * xmin)) / std::log(l1 / l2);
  int b = static_cast<int>(std::floor(bound));
  if (*diameter(h) > b)
    fail(errc::internal_consistency, "diameter exceeded its spectral upper bound");
  return b;
}

}  // namespace hyperq

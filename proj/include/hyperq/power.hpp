#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperq/eigen.hpp"
#include "hyperq/error.hpp"
#include "hyperq/hypergraph.hpp"
#include "hyperq/spectral.hpp"
#include "hyperq/structure.hpp"

namespace hyperq {

// H^r_s: every base vertex becomes s copies, every edge gains r - ks fresh
// additional vertices. s = 1 leaves vertices alone; r = ks adds nothing.
struct PowerParams {
  int s = 1;
  int r = 0;
};

inline void check_power_params(const Hypergraph& h, const PowerParams& p) {
  if (p.s < 1)
    fail(errc::bad_params, "expansion factor s must be >= 1, got " + std::to_string(p.s));
  if (p.r < h.k() * p.s)
    fail(errc::bad_params, "target uniformity r = " + std::to_string(p.r) +
         " below k*s = " + std::to_string(h.k() * p.s));
}

// Indices of the constructed vertices, grouped by origin. vertex_groups[v]
// lists the s vertices replacing base vertex v (main vertex first);
// edge_groups[e] lists the r - ks additional vertices of base edge e.
struct PowerVertexMap {
  std::vector<std::vector<int>> vertex_groups;
  std::vector<std::vector<int>> edge_groups;
};

struct PowerResult {
  Hypergraph hypergraph;
  PowerVertexMap map;
};

// Deterministic naming: copy j of vertex v is "v#j", additional vertex i of
// the t-th edge (1-based) is "e<t>@<i>".
inline PowerResult power(const Hypergraph& h, const PowerParams& p) {
  check_power_params(h, p);
  int extra = p.r - h.k() * p.s;
  std::vector<std::vector<std::string>> edge_tokens;
  edge_tokens.reserve(h.edge_count());
  for (int e = 0; e < h.edge_count(); ++e) {
    std::vector<std::string> toks;
    toks.reserve(p.r);
    for (int v : h.edge(e)) {
      toks.push_back(h.token(v));
      for (int j = 1; j < p.s; ++j) toks.push_back(h.token(v) + "#" + std::to_string(j));
    }
    for (int i = 1; i <= extra; ++i)
      toks.push_back("e" + std::to_string(e + 1) + "@" + std::to_string(i));
    edge_tokens.push_back(std::move(toks));
  }
  PowerResult res{build_hypergraph(p.r, edge_tokens), {}};
  long long expect = static_cast<long long>(p.s) * h.vertex_count() +
                     static_cast<long long>(extra) * h.edge_count();
  if (res.hypergraph.vertex_count() != expect)
    fail(errc::bad_params, "base vertex tokens collide with the power naming scheme");

  res.map.vertex_groups.resize(h.vertex_count());
  for (int v = 0; v < h.vertex_count(); ++v) {
    auto& grp = res.map.vertex_groups[v];
    grp.push_back(*res.hypergraph.index_of(h.token(v)));
    for (int j = 1; j < p.s; ++j)
      grp.push_back(*res.hypergraph.index_of(h.token(v) + "#" + std::to_string(j)));
  }
  res.map.edge_groups.resize(h.edge_count());
  for (int e = 0; e < h.edge_count(); ++e) {
    auto& grp = res.map.edge_groups[e];
    for (int i = 1; i <= extra; ++i)
      grp.push_back(*res.hypergraph.index_of("e" + std::to_string(e + 1) + "@" +
                                             std::to_string(i)));
  }
  return res;
}

// Full predicted spectrum of Q(H^r_s), values paired with multiplicities.
struct PredictedSpectrum {
  std::vector<EigenGroup> groups;  // descending by value
  int total = 0;                   // s n + (r - ks) m
  long long exact_trace = 0;       // integer trace, equals r m
  double tau_zero = 0.0;           // inherited zero threshold
};

// Transfer map: each nonzero base eigenvalue lambda contributes
// s(lambda - k) + r with its multiplicity; r - ks enters with multiplicity
// m - t (t = rank of the base Q); zero takes the rest. For r = ks the middle
// value is itself zero and the groups merge.
inline PredictedSpectrum predict_power_spectrum(const std::vector<EigenGroup>& base_groups,
                                                double base_tau_zero, int k, int n, int m,
                                                const PowerParams& p) {
  if (p.s < 1 || p.r < k * p.s)
    fail(errc::bad_params, "power parameters s = " + std::to_string(p.s) + ", r = " +
         std::to_string(p.r) + " invalid for k = " + std::to_string(k));
  int base_total = 0;
  for (const EigenGroup& g : base_groups) base_total += g.multiplicity;
  if (base_total != n)
    fail(errc::bad_params, "base spectrum has " + std::to_string(base_total) +
         " eigenvalues for n = " + std::to_string(n));

  int t = 0;
  PredictedSpectrum out;
  for (const EigenGroup& g : base_groups)
    if (std::abs(g.value) > base_tau_zero) {
      out.groups.push_back({p.s * (g.value - k) + p.r, g.multiplicity});
      t += g.multiplicity;
    }

  int extra = p.r - k * p.s;
  long long zero_mult;
  if (extra > 0) {
    if (m - t > 0) out.groups.push_back({static_cast<double>(extra), m - t});
    zero_mult = static_cast<long long>(extra - 1) * m + static_cast<long long>(p.s) * n;
  } else {
    zero_mult = static_cast<long long>(p.s) * n - t;
  }
  if (zero_mult > 0) out.groups.push_back({0.0, static_cast<int>(zero_mult)});

  out.total = p.s * n + extra * m;
  int check = 0;
  for (const EigenGroup& g : out.groups) check += g.multiplicity;
  if (check != out.total)
    fail(errc::internal_consistency, "predicted multiplicities do not sum to s n + (r-ks) m");

  // Integer trace bookkeeping: the nonzero block contributes s tr(Q) + t(r-ks)
  // with tr(Q) = k m, the middle block (m-t)(r-ks); total collapses to r m.
  out.exact_trace = static_cast<long long>(p.s) * k * m + static_cast<long long>(extra) * m;
  if (out.exact_trace != static_cast<long long>(p.r) * m)
    fail(errc::internal_consistency, "trace identity s k m + (r - ks) m = r m failed");

  out.tau_zero = base_tau_zero;
  std::stable_sort(out.groups.begin(), out.groups.end(),
                   [](const EigenGroup& a, const EigenGroup& b) { return a.value > b.value; });
  return out;
}

inline PredictedSpectrum predict_power_spectrum(const Spectrum& base, int k, int n, int m,
                                                const PowerParams& p) {
  return predict_power_spectrum(base.groups, base.tau_zero, k, n, m, p);
}

inline PredictedSpectrum predict_power_spectrum(const Hypergraph& h, const PowerParams& p,
                                                const Tolerances& tol = {}) {
  Spectrum base = eigen_decompose(signless_laplacian(h), tol);
  return predict_power_spectrum(base, h.k(), h.vertex_count(), h.edge_count(), p);
}

inline std::vector<double> expand_groups(const std::vector<EigenGroup>& groups) {
  std::vector<double> values;
  for (const EigenGroup& g : groups)
    values.insert(values.end(), g.multiplicity, g.value);
  return values;
}

// Prediction versus direct eigendecomposition of the constructed power,
// compared as multisets.
inline bool verify_power_spectrum(const Hypergraph& h, const PowerParams& p,
                                  const Tolerances& tol = {}) {
  Spectrum base = eigen_decompose(signless_laplacian(h), tol);
  PredictedSpectrum pred =
      predict_power_spectrum(base, h.k(), h.vertex_count(), h.edge_count(), p);
  PowerResult pw = power(h, p);
  Spectrum direct = eigen_decompose(signless_laplacian(pw.hypergraph), tol);
  double tau = std::max(direct.tau_group, p.s * base.tau_group);
  return multisets_close(expand_groups(pred.groups), direct.values, tau);
}

// Lifts a positive base eigenpair (mu, y) to the power: copies repeat the
// base entry, additional vertices of edge e receive s y(e) / (lambda - r + ks),
// and lambda = s(mu - k) + r. The returned vector keeps y's scale.
inline std::pair<double, std::vector<double>> lift_eigenvector(const Hypergraph& h,
                                                               const PowerParams& p, double mu,
                                                               std::span<const double> y,
                                                               const Tolerances& tol = {}) {
  check_power_params(h, p);
  if (static_cast<int>(y.size()) != h.vertex_count())
    fail(errc::dimension_mismatch, "base eigenvector of size " + std::to_string(y.size()) +
         " against " + std::to_string(h.vertex_count()) + " vertices");
  double base_tau = tol.zero_scale * std::max<double>(1.0, max_edge_degree_sum(h));
  if (mu <= base_tau)
    fail(errc::non_positive_eigenvalue, "lift needs a positive base eigenvalue, got " +
         std::to_string(mu));

  PowerResult pw = power(h, p);
  double lambda = p.s * (mu - h.k()) + p.r;
  double denom = lambda - p.r + h.k() * p.s;  // = s mu, positive
  std::vector<double> x(pw.hypergraph.vertex_count(), 0.0);
  for (int v = 0; v < h.vertex_count(); ++v)
    for (int idx : pw.map.vertex_groups[v]) x[idx] = y[v];
  for (int e = 0; e < h.edge_count(); ++e) {
    double edge_sum = 0;
    for (int v : h.edge(e)) edge_sum += y[v];
    double val = p.s * edge_sum / denom;
    for (int idx : pw.map.edge_groups[e]) x[idx] = val;
  }

  SymmetricMatrix q = signless_laplacian(pw.hypergraph);
  double res = eigenpair_residual(q, lambda, x);
  if (res > tol.zero_scale * std::max(1.0, q.frobenius_norm()) * norm2(x))
    fail(errc::internal_consistency, "lifted eigenvector failed its residual check");
  return {lambda, x};
}

struct WitnessFamily {
  double eigenvalue = 0.0;
  std::vector<std::vector<double>> vectors;
  int rank = 0;
};

// The three eigenvector families with closed-form constructions:
// (i)  differences of additional vertices inside one edge (eigenvalue 0),
// (ii) one main/copy vertex against a chosen additional vertex per incident
//      edge (eigenvalue 0),
// (iii) base line-Gram kernel vectors spread over additional vertices
//      (eigenvalue r - ks).
// All three need additional vertices, so they are empty when r = ks.
struct KernelWitnesses {
  WitnessFamily intra_edge;       // (i)
  WitnessFamily vertex_vs_added;  // (ii)
  WitnessFamily line_kernel;      // (iii)
  int combined_zero_rank = 0;     // rank of (i) and (ii) stacked
};

inline KernelWitnesses kernel_dimension_witnesses(const Hypergraph& h, const PowerParams& p,
                                                  const Tolerances& tol = {}) {
  check_power_params(h, p);
  PowerResult pw = power(h, p);
  int big_n = pw.hypergraph.vertex_count();
  int extra = p.r - h.k() * p.s;

  KernelWitnesses w;
  w.intra_edge.eigenvalue = 0.0;
  w.vertex_vs_added.eigenvalue = 0.0;
  w.line_kernel.eigenvalue = static_cast<double>(extra);

  if (extra > 0) {
    for (int e = 0; e < h.edge_count(); ++e)
      for (int i = 1; i < extra; ++i) {
        std::vector<double> z(big_n, 0.0);
        z[pw.map.edge_groups[e][0]] = 1.0;
        z[pw.map.edge_groups[e][i]] = -1.0;
        w.intra_edge.vectors.push_back(std::move(z));
      }
    for (int v = 0; v < h.vertex_count(); ++v)
      for (int idx : pw.map.vertex_groups[v]) {
        std::vector<double> z(big_n, 0.0);
        z[idx] = 1.0;
        for (int e : edge_neighborhood(h, v)) z[pw.map.edge_groups[e][0]] -= 1.0;
        w.vertex_vs_added.vectors.push_back(std::move(z));
      }
    Spectrum line = eigen_decompose(gram_line_matrix(h), tol);
    for (int i = 0; i < line.order(); ++i) {
      if (!line.is_zero(line.values[i])) continue;
      std::vector<double> z(big_n, 0.0);
      for (int e = 0; e < h.edge_count(); ++e)
        for (int idx : pw.map.edge_groups[e]) z[idx] = line.vectors[i][e];
      w.line_kernel.vectors.push_back(std::move(z));
    }
  }

  SymmetricMatrix q = signless_laplacian(pw.hypergraph);
  double scale = tol.zero_scale * std::max(1.0, q.frobenius_norm());
  auto check_family = [&](WitnessFamily& fam) {
    for (const auto& z : fam.vectors)
      if (eigenpair_residual(q, fam.eigenvalue, z) > scale * norm2(z))
        fail(errc::internal_consistency, "witness vector failed its residual check");
    fam.rank = numeric_rank(fam.vectors);
  };
  check_family(w.intra_edge);
  check_family(w.vertex_vs_added);
  check_family(w.line_kernel);

  std::vector<std::vector<double>> stacked = w.intra_edge.vectors;
  stacked.insert(stacked.end(), w.vertex_vs_added.vectors.begin(),
                 w.vertex_vs_added.vectors.end());
  w.combined_zero_rank = numeric_rank(stacked);
  return w;
}

}  // namespace hyperq

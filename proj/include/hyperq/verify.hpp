#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hyperq/eigen.hpp"
#include "hyperq/error.hpp"
#include "hyperq/generate.hpp"
#include "hyperq/hypergraph.hpp"
#include "hyperq/io.hpp"
#include "hyperq/power.hpp"
#include "hyperq/spectral.hpp"
#include "hyperq/structure.hpp"

namespace hyperq {

struct VerifyOptions {
  int trials = 100;
  int max_n = 8;
  int min_k = 2;
  int max_k = 3;
  std::uint64_t seed = 1;
  Tolerances tol;
  int charpoly_order_limit = kDefaultCharPolyOrderLimit;
};

struct SuiteResult {
  std::string name;
  int trials = 0;
  int passes = 0;
  int failures = 0;
  int skips = 0;
  std::vector<std::string> notes;
  std::optional<std::string> counterexample;  // serialized first failing instance
};

struct VerifySummary {
  std::uint64_t master_seed = 0;
  int requested_trials = 0;
  std::vector<SuiteResult> suites;

  bool all_passed() const {
    return std::all_of(suites.begin(), suites.end(),
                       [](const SuiteResult& s) { return s.failures == 0; });
  }
};

namespace detail {

inline void suite_fail(SuiteResult& suite, const Hypergraph& h, const std::string& why) {
  ++suite.failures;
  if (!suite.counterexample)
    suite.counterexample = serialize_hypergraph(h) + "-- " + why;
  if (suite.notes.size() < 10) suite.notes.push_back(why);
}

inline void suite_note(SuiteResult& suite, const std::string& text) {
  if (suite.notes.size() < 10) suite.notes.push_back(text);
}

inline Hypergraph random_instance(SeededRng& rng, int min_k, int max_k, int max_n,
                                  int m_cap = 0) {
  int k = rng.range_int(min_k, max_k);
  int n = rng.range_int(k, std::max(k, max_n));
  BigInt c = binomial_exact(n, k);
  long long hi = c > 1000 ? 1000 : c.convert_to<long long>();
  hi = std::min<long long>(hi, m_cap > 0 ? m_cap : 2LL * n);
  int m = rng.range_int(1, static_cast<int>(std::max<long long>(1, hi)));
  return random_hypergraph(k, n, m, rng.next_u64());
}

inline Hypergraph relabel_with_prefix(const Hypergraph& h, const std::string& prefix) {
  std::vector<std::vector<std::string>> edges;
  for (const Edge& e : h.edges()) {
    std::vector<std::string> toks;
    for (int v : e) toks.push_back(prefix + h.token(v));
    edges.push_back(std::move(toks));
  }
  return build_hypergraph(h.k(), edges);
}

// Exhaustive search for any valid (V0, V1, V2) split; feasible only at the
// small sizes the converse-search suite uses.
inline bool is_partially_bipartite_bruteforce(const Hypergraph& h) {
  int n = h.vertex_count();
  std::vector<int> label(n, 0);
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    bool has1 = false, has2 = false;
    for (int i = 0; i < n; ++i) {
      label[i] = static_cast<int>(c % 3);
      c /= 3;
      has1 |= label[i] == 1;
      has2 |= label[i] == 2;
    }
    if (!has1 || !has2) continue;
    bool ok = true;
    for (const Edge& e : h.edges()) {
      int in1 = 0, in2 = 0;
      for (int v : e) {
        if (label[v] == 1) ++in1;
        if (label[v] == 2) ++in2;
      }
      if (in1 + in2 != 0 && (in1 == 0 || in2 == 0)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace detail

// Seeded cross-module property suites. Each trial derives its generator from
// hash(masterSeed, suiteIndex * C + trialIndex), so trial outcomes do not
// depend on execution order.
inline VerifySummary run_verify(const VerifyOptions& opt) {
  VerifySummary summary;
  summary.master_seed = opt.seed;
  summary.requested_trials = opt.trials;
  if (opt.trials <= 0) return summary;

  struct SuiteDef {
    std::string name;
    std::function<void(SuiteResult&, SeededRng&)> body;
  };
  std::vector<SuiteDef> defs;

  defs.push_back({"factorizations", [&](SuiteResult& suite, SeededRng& rng) {
    Hypergraph h = detail::random_instance(rng, opt.min_k, opt.max_k, opt.max_n);
    SymmetricMatrix q = signless_laplacian(h);
    SymmetricMatrix g = gram_line_matrix(h);
    SymmetricMatrix clique = clique_multigraph(h).adjacency();
    DegreeProfile deg = degrees(h);
    for (int i = 0; i < h.vertex_count(); ++i)
      for (int j = 0; j < h.vertex_count(); ++j) {
        double expect = clique(i, j) + (i == j ? deg.per_vertex[i] : 0);
        if (q(i, j) != expect) return detail::suite_fail(suite, h, "Q != D + A_C entrywise");
      }
    SymmetricMatrix line = line_multigraph(h).adjacency();
    for (int e = 0; e < h.edge_count(); ++e)
      for (int f = 0; f < h.edge_count(); ++f) {
        double expect = line(e, f) + (e == f ? h.k() : 0);
        if (g(e, f) != expect) return detail::suite_fail(suite, h, "B^T B != kI + A_L entrywise");
      }
    if (q.trace() != static_cast<double>(h.k()) * h.edge_count())
      return detail::suite_fail(suite, h, "trace(Q) != k m");
    if (!line_degree_check(h))
      return detail::suite_fail(suite, h, "line degree identity failed");
    ++suite.passes;
  }});

  defs.push_back({"row-sums", [&](SuiteResult& suite, SeededRng& rng) {
    Hypergraph h = detail::random_instance(rng, opt.min_k, opt.max_k, opt.max_n);
    SymmetricMatrix q = signless_laplacian(h);
    DegreeProfile deg = degrees(h);
    std::vector<double> sums = q.row_sums();
    for (int i = 0; i < h.vertex_count(); ++i)
      if (sums[i] != static_cast<double>(h.k()) * deg.per_vertex[i])
        return detail::suite_fail(suite, h, "row sum != k d(i) at vertex " + h.token(i));
    ++suite.passes;
  }});

  defs.push_back({"polynomial-identities", [&](SuiteResult& suite, SeededRng& rng) {
    int limit = opt.charpoly_order_limit;
    Hypergraph h = detail::random_instance(rng, opt.min_k, opt.max_k,
                                           std::min(opt.max_n, limit - 2),
                                           std::min(12, limit - 2));
    if (!verify_poly_identity_line(h, limit))
      return detail::suite_fail(suite, h, "line polynomial identity failed");
    DegreeProfile deg = degrees(h);
    if (deg.min == deg.max && !verify_poly_identity_clique_regular(h, limit))
      return detail::suite_fail(suite, h, "clique polynomial identity failed on regular instance");
    SymmetricMatrix q = signless_laplacian(h);
    CharPoly p = char_poly_exact(q, limit);
    if (p.coeffs[1] != BigInt(-static_cast<long long>(h.k()) * h.edge_count()))
      return detail::suite_fail(suite, h, "first coefficient != -k m");
    Spectrum spec = eigen_decompose(q, opt.tol);
    for (double lambda : spec.values)
      if (std::abs(p.evaluate(lambda)) > 1e-8 * p.envelope(lambda))
        return detail::suite_fail(suite, h, "exact polynomial does not vanish at eigenvalue " +
                                  std::to_string(lambda));
    ++suite.passes;
  }});

  defs.push_back({"bounds", [&](SuiteResult& suite, SeededRng& rng) {
    int k = rng.range_int(opt.min_k, opt.max_k);
    int n = rng.range_int(k, std::max(k, opt.max_n));
    BigInt c = binomial_exact(n, k);
    long long hi = std::min<long long>(c > 1000 ? 1000 : c.convert_to<long long>(), 2LL * n);
    int m = rng.range_int(1, static_cast<int>(std::max<long long>(1, hi)));
    auto h = random_connected_hypergraph(k, n, m, rng.next_u64());
    if (!h) {
      ++suite.skips;
      return detail::suite_note(suite, "no connected instance after 100 resamples");
    }
    DegreeSumBounds b = degree_sum_bounds(*h, opt.tol);  // throws on violation
    Spectrum spec = eigen_decompose(signless_laplacian(*h), opt.tol);
    if (spec.min_value() < -spec.tau_zero)
      return detail::suite_fail(suite, *h, "Q has an eigenvalue below -tau_zero");
    Spectrum lspec = eigen_decompose(line_multigraph(*h).adjacency(), opt.tol);
    if (lspec.min_value() < -h->k() - lspec.tau_zero)
      return detail::suite_fail(suite, *h, "A_L has an eigenvalue below -k - tau_zero");
    double tau = std::max(spec.tau_group, lspec.tau_group);
    if (std::abs(lspec.values.front() - (b.rho - h->k())) > tau)
      return detail::suite_fail(suite, *h, "rho(A_L) != rho(Q) - k");
    ++suite.passes;
  }});

  defs.push_back({"regularity-equivalence", [&](SuiteResult& suite, SeededRng& rng) {
    int k = rng.range_int(opt.min_k, opt.max_k);
    int n = rng.range_int(k, std::max(k, opt.max_n));
    BigInt c = binomial_exact(n, k);
    long long hi = std::min<long long>(c > 1000 ? 1000 : c.convert_to<long long>(), 2LL * n);
    int m = rng.range_int(1, static_cast<int>(std::max<long long>(1, hi)));
    auto h = random_connected_hypergraph(k, n, m, rng.next_u64());
    if (!h) {
      ++suite.skips;
      return detail::suite_note(suite, "no connected instance after 100 resamples");
    }
    regularity_report(*h, opt.tol);  // throws InternalConsistency on disagreement
    ++suite.passes;
  }});

  defs.push_back({"zero-bipartition", [&](SuiteResult& suite, SeededRng& rng) {
    Hypergraph h = detail::random_instance(rng, opt.min_k, opt.max_k, opt.max_n);
    Spectrum spec = eigen_decompose(signless_laplacian(h), opt.tol);
    auto part = partial_bipartition_from_kernel(h, opt.tol);
    if (spec.zero_count() > 0) {
      if (!part) return detail::suite_fail(suite, h, "zero eigenvalue but no partition extracted");
      for (int i = 0; i < spec.order(); ++i)
        if (spec.is_zero(spec.values[i]) && !zero_eigenpair_valid(h, spec.vectors[i], opt.tol))
          return detail::suite_fail(suite, h, "kernel eigenvector rejected by x(e) test");
    } else if (part) {
      return detail::suite_fail(suite, h, "partition extracted without a zero eigenvalue");
    }
    if (auto pattern = detect_easy_balanced_patterns(h)) {
      std::vector<double> x = balanced_bipartition_to_kernel(h, *pattern, opt.tol);
      SymmetricMatrix q = signless_laplacian(h);
      double res = norm2(q.apply(x));
      if (res > 1e-8 * q.frobenius_norm() * norm2(x))
        return detail::suite_fail(suite, h, "balanced pattern vector is not in the kernel");
      if (spec.zero_count() == 0)
        return detail::suite_fail(suite, h, "balanced pattern found but spectrum lacks zero");
    }
    ++suite.passes;
  }});

  defs.push_back({"union-product-spectra", [&](SuiteResult& suite, SeededRng& rng) {
    int k = rng.range_int(opt.min_k, opt.max_k);
    int n1 = rng.range_int(k, std::min(std::max(k, opt.max_n), k + 2));
    int n2 = rng.range_int(k, std::min(std::max(k, opt.max_n), k + 2));
    auto cap = [&](int n) {
      BigInt c = binomial_exact(n, k);
      return static_cast<int>(std::min<long long>(c.convert_to<long long>(), 6));
    };
    Hypergraph g = random_hypergraph(k, n1, rng.range_int(1, cap(n1)), rng.next_u64());
    Hypergraph h2 = random_hypergraph(k, n2, rng.range_int(1, cap(n2)), rng.next_u64());
    if (!spectrum_union_check(g, detail::relabel_with_prefix(h2, "b"), opt.tol))
      return detail::suite_fail(suite, g, "union spectrum is not the multiset union");
    if (!product_eigsum_check(g, h2, opt.tol))
      return detail::suite_fail(suite, g, "product spectrum missing eigenvalue sums");
    ++suite.passes;
  }});

  defs.push_back({"subgraph-monotonicity", [&](SuiteResult& suite, SeededRng& rng) {
    int k = rng.range_int(opt.min_k, opt.max_k);
    int n = rng.range_int(k + 1, std::max(k + 1, opt.max_n));  // C(n,k) >= 2
    BigInt c = binomial_exact(n, k);
    long long hi = std::min<long long>(c > 1000 ? 1000 : c.convert_to<long long>(), 2LL * n);
    Hypergraph h = random_hypergraph(k, n, rng.range_int(2, static_cast<int>(std::max<long long>(2, hi))),
                                     rng.next_u64());
    if (h.edge_count() < 2) {
      ++suite.skips;
      return detail::suite_note(suite, "single-edge instance, no proper subgraph to test");
    }
    int keep = rng.range_int(1, h.edge_count() - 1);
    std::vector<int> ids(h.edge_count());
    std::iota(ids.begin(), ids.end(), 0);
    for (int i = 0; i < keep; ++i) {
      int j = i + static_cast<int>(rng.below(ids.size() - i));
      std::swap(ids[i], ids[j]);
    }
    ids.resize(keep);
    std::sort(ids.begin(), ids.end());
    std::vector<std::vector<std::string>> edges;
    for (int id : ids) {
      std::vector<std::string> toks;
      for (int v : h.edge(id)) toks.push_back(h.token(v));
      edges.push_back(std::move(toks));
    }
    Hypergraph sub = build_hypergraph(h.k(), edges);
    if (!subgraph_monotonicity_check(h, sub, opt.tol))
      return detail::suite_fail(suite, h, "edge-deleted subgraph has larger spectral radius");
    ++suite.passes;
  }});

  defs.push_back({"power-spectrum", [&](SuiteResult& suite, SeededRng& rng) {
    int k = rng.range_int(opt.min_k, std::min(opt.max_k, 3));
    int n = rng.range_int(k, std::min(std::max(k, opt.max_n), 6));
    BigInt c = binomial_exact(n, k);
    long long hi = std::min<long long>(c > 1000 ? 1000 : c.convert_to<long long>(), 8);
    int m = rng.range_int(1, static_cast<int>(std::max<long long>(1, hi)));
    Hypergraph h = random_hypergraph(k, n, m, rng.next_u64());
    int nv = h.vertex_count();  // sampled edges need not touch all n labels
    int ne = h.edge_count();
    PowerParams p{rng.range_int(1, 2), 0};
    p.r = k * p.s + rng.range_int(0, 2);
    if (!verify_power_spectrum(h, p, opt.tol))
      return detail::suite_fail(suite, h, "predicted power spectrum mismatched eigensolver (s=" +
                                std::to_string(p.s) + ", r=" + std::to_string(p.r) + ")");
    Spectrum base = eigen_decompose(signless_laplacian(h), opt.tol);
    PredictedSpectrum direct = predict_power_spectrum(base, k, nv, ne, p);
    PredictedSpectrum inner =
        predict_power_spectrum(base, k, nv, ne, PowerParams{p.s, k * p.s});
    PredictedSpectrum composed = predict_power_spectrum(
        inner.groups, inner.tau_zero, k * p.s, inner.total, ne, PowerParams{1, p.r});
    if (!multisets_close(expand_groups(direct.groups), expand_groups(composed.groups),
                         1e-9 * std::max(1.0, std::abs(direct.groups.front().value))))
      return detail::suite_fail(suite, h, "composed prediction differs from direct prediction");
    if (p.r > k * p.s) {
      KernelWitnesses w = kernel_dimension_witnesses(h, p, opt.tol);
      int extra = p.r - k * p.s;
      int t = nv - base.zero_count();
      long long expect_zero = static_cast<long long>(extra - 1) * ne +
                              static_cast<long long>(p.s) * nv;
      if (w.combined_zero_rank != expect_zero)
        return detail::suite_fail(suite, h, "stacked zero witnesses have rank " +
                                  std::to_string(w.combined_zero_rank) + ", expected " +
                                  std::to_string(expect_zero));
      if (w.line_kernel.rank != ne - t)
        return detail::suite_fail(suite, h, "line-kernel witness rank != m - t");
    }
    ++suite.passes;
  }});

  defs.push_back({"converse-search", [&](SuiteResult& suite, SeededRng& rng) {
    Hypergraph h = detail::random_instance(rng, opt.min_k, opt.max_k, std::min(opt.max_n, 8));
    Spectrum spec = eigen_decompose(signless_laplacian(h), opt.tol);
    if (spec.zero_count() == 0 && detail::is_partially_bipartite_bruteforce(h))
      detail::suite_note(suite, "partially bipartite without eigenvalue 0 (min = " +
                         std::to_string(spec.min_value()) + "): " + serialize_hypergraph(h));
    ++suite.passes;
  }});

  for (std::size_t si = 0; si < defs.size(); ++si) {
    SuiteResult suite;
    suite.name = defs[si].name;
    for (int trial = 0; trial < opt.trials; ++trial) {
      ++suite.trials;
      SeededRng rng(mix_seed(opt.seed, si * 1000003ull + static_cast<std::uint64_t>(trial)));
      try {
        defs[si].body(suite, rng);
      } catch (const error& e) {
        ++suite.failures;
        if (!suite.counterexample) suite.counterexample = e.what();
        if (suite.notes.size() < 10) suite.notes.push_back(e.what());
      } catch (const std::exception& e) {
        ++suite.failures;
        if (!suite.counterexample) suite.counterexample = e.what();
        if (suite.notes.size() < 10) suite.notes.push_back(e.what());
      }
    }
    summary.suites.push_back(std::move(suite));
  }
  return summary;
}

}  // namespace hyperq

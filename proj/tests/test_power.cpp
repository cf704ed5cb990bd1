#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <string>
#include <vector>

#include "hyperq/eigen.hpp"
#include "hyperq/generate.hpp"
#include "hyperq/hypergraph.hpp"
#include "hyperq/power.hpp"
#include "hyperq/spectral.hpp"

using namespace hyperq;

namespace {

Hypergraph p3() { return build_hypergraph_ints(2, {{1, 2}, {2, 3}}); }

Hypergraph c4() { return build_hypergraph_ints(2, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}); }

std::vector<double> values_of(const PredictedSpectrum& pred) {
  return expand_groups(pred.groups);
}

}  // namespace

TEST_CASE("power construction counts and names") {
  PowerResult pw = power(p3(), {1, 3});
  CHECK(pw.hypergraph.k() == 3);
  CHECK(pw.hypergraph.vertex_count() == 5);  // 3 + 1 per edge
  CHECK(pw.hypergraph.edge_count() == 2);
  CHECK(pw.hypergraph.index_of("e1@1").has_value());
  CHECK(pw.hypergraph.index_of("e2@1").has_value());
  CHECK(pw.map.vertex_groups.size() == 3);
  CHECK(pw.map.edge_groups[0].size() == 1);

  PowerResult two = power(p3(), {2, 5});
  CHECK(two.hypergraph.vertex_count() == 2 * 3 + 1 * 2);
  CHECK(two.hypergraph.index_of("2#1").has_value());
  CHECK(two.map.vertex_groups[0].size() == 2);

  // s = 1, r = k leaves the hypergraph unchanged.
  PowerResult same = power(p3(), {1, 2});
  CHECK(same.hypergraph.edges() == p3().edges());
  CHECK(same.map.edge_groups[0].empty());
}

TEST_CASE("power parameter validation") {
  CHECK_THROWS_AS(power(p3(), {0, 4}), error);
  CHECK_THROWS_AS(power(p3(), {1, 1}), error);
  CHECK_THROWS_AS(power(p3(), {2, 3}), error);

  // A base token that matches the naming scheme of the additional vertices.
  Hypergraph clash = build_hypergraph(2, {{"e1@1", "x"}});
  CHECK_THROWS_AS(power(clash, {1, 3}), error);
}

TEST_CASE("predicted spectrum of the two-edge path cubed") {
  PredictedSpectrum pred = predict_power_spectrum(p3(), {1, 3});
  // Base spectrum {3, 1, 0}: nonzero values map to lambda + 1, zero absorbs
  // the rest.
  std::vector<double> expect{4.0, 2.0, 0.0, 0.0, 0.0};
  std::vector<double> got = values_of(pred);
  REQUIRE(got.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i)
    CHECK(got[i] == Catch::Approx(expect[i]).margin(1e-8));
  CHECK(pred.total == 5);
  CHECK(pred.exact_trace == 6);  // r m = 3 * 2
}

TEST_CASE("predicted spectrum of the four-cycle cubed") {
  PredictedSpectrum pred = predict_power_spectrum(c4(), {1, 3});
  std::vector<double> expect{5.0, 3.0, 3.0, 1.0, 0.0, 0.0, 0.0, 0.0};
  std::vector<double> got = values_of(pred);
  REQUIRE(got.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i)
    CHECK(got[i] == Catch::Approx(expect[i]).margin(1e-8));
  CHECK(pred.exact_trace == 12);  // r m = 3 * 4
}

TEST_CASE("doubled path: copies only, no additional vertices") {
  // s = 2, r = 4 = ks: nonzero values double after the k-shift; the rest of
  // the doubled vertex set gives zeros.
  PredictedSpectrum pred = predict_power_spectrum(p3(), {2, 4});
  std::vector<double> expect{6.0, 2.0, 0.0, 0.0, 0.0, 0.0};
  std::vector<double> got = values_of(pred);
  REQUIRE(got.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i)
    CHECK(got[i] == Catch::Approx(expect[i]).margin(1e-8));
  CHECK(pred.total == 6);
  CHECK(pred.exact_trace == 8);
}

TEST_CASE("single 3-edge doubled to six vertices") {
  Hypergraph e3 = build_hypergraph_ints(3, {{1, 2, 3}});
  PredictedSpectrum pred = predict_power_spectrum(e3, {2, 6});
  std::vector<double> got = values_of(pred);
  REQUIRE(got.size() == 6);
  CHECK(got[0] == Catch::Approx(6.0).margin(1e-8));
  for (int i = 1; i < 6; ++i) CHECK(got[i] == Catch::Approx(0.0).margin(1e-8));
}

TEST_CASE("base spectrum is reproduced when s = 1 and r = k") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    SeededRng rng(mix_seed(808, seed));
    int k = rng.range_int(2, 3);
    int n = rng.range_int(k, 6);
    BigInt cap = binomial_exact(n, k);
    int m = rng.range_int(
        1, static_cast<int>(std::min<long long>(cap.convert_to<long long>(), 8)));
    Hypergraph h = random_hypergraph(k, n, m, rng.next_u64());
    Spectrum base = eigen_decompose(signless_laplacian(h), {});
    PredictedSpectrum pred = predict_power_spectrum(h, {1, k});
    CHECK(multisets_close(values_of(pred), base.values,
                          std::max(base.tau_group, 1e-10)));
  }
}

TEST_CASE("prediction matches the constructed power across the parameter grid") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SeededRng rng(mix_seed(909, seed));
    int k = rng.range_int(2, 3);
    int n = rng.range_int(k, 5);
    BigInt cap = binomial_exact(n, k);
    int m = rng.range_int(
        1, static_cast<int>(std::min<long long>(cap.convert_to<long long>(), 6)));
    Hypergraph h = random_hypergraph(k, n, m, rng.next_u64());
    for (int s = 1; s <= 2; ++s)
      for (int dr = 0; dr <= 2; ++dr) CHECK(verify_power_spectrum(h, {s, k * s + dr}));
  }
}

TEST_CASE("trace identity holds for every prediction") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SeededRng rng(mix_seed(4242, seed));
    int k = rng.range_int(2, 3);
    int n = rng.range_int(k, 6);
    BigInt cap = binomial_exact(n, k);
    int m = rng.range_int(
        1, static_cast<int>(std::min<long long>(cap.convert_to<long long>(), 8)));
    Hypergraph h = random_hypergraph(k, n, m, rng.next_u64());
    for (int s = 1; s <= 2; ++s)
      for (int dr = 0; dr <= 2; ++dr) {
        PowerParams p{s, k * s + dr};
        PredictedSpectrum pred = predict_power_spectrum(h, p);
        CHECK(pred.exact_trace == static_cast<long long>(p.r) * h.edge_count());
        double float_trace = 0;
        for (const EigenGroup& g : pred.groups) float_trace += g.value * g.multiplicity;
        CHECK(float_trace ==
              Catch::Approx(static_cast<double>(pred.exact_trace)).margin(1e-6));
      }
  }
}

TEST_CASE("prediction composes: blow up then pad equals one step") {
  Hypergraph h = c4();
  Spectrum base = eigen_decompose(signless_laplacian(h), {});
  PredictedSpectrum direct = predict_power_spectrum(base, 2, 4, 4, {2, 6});
  PredictedSpectrum inner = predict_power_spectrum(base, 2, 4, 4, {2, 4});
  PredictedSpectrum composed =
      predict_power_spectrum(inner.groups, inner.tau_zero, 4, inner.total, 4, {1, 6});
  CHECK(multisets_close(values_of(direct), values_of(composed), 1e-9));
}

TEST_CASE("lifting base eigenpairs to the power") {
  Hypergraph h = p3();
  Spectrum base = eigen_decompose(signless_laplacian(h), {});
  PowerParams p{1, 4};
  PowerResult pw = power(h, p);
  SymmetricMatrix q = signless_laplacian(pw.hypergraph);

  for (int i = 0; i < base.order(); ++i) {
    if (base.is_zero(base.values[i])) continue;
    auto [lambda, x] = lift_eigenvector(h, p, base.values[i], base.vectors[i]);
    CHECK(lambda == Catch::Approx(base.values[i] - h.k() + p.r).margin(1e-10));
    CHECK(eigenpair_residual(q, lambda, x) <= 1e-8 * std::max(1.0, q.frobenius_norm()));
    // Copies carry the base entries.
    for (int v = 0; v < h.vertex_count(); ++v)
      CHECK(x[pw.map.vertex_groups[v][0]] == base.vectors[i][v]);
  }

  // Zero eigenvalues do not lift: the additional-vertex formula divides by mu.
  std::vector<double> kernel(h.vertex_count(), 0.0);
  CHECK_THROWS_AS(lift_eigenvector(h, p, 0.0, kernel), error);
}

TEST_CASE("witness families span the predicted multiplicities") {
  Hypergraph h = p3();
  PowerParams p{2, 6};  // extra = 2 per edge
  KernelWitnesses w = kernel_dimension_witnesses(h, p);

  int n = h.vertex_count(), m = h.edge_count();
  int extra = p.r - h.k() * p.s;
  Spectrum base = eigen_decompose(signless_laplacian(h), {});
  int t = n - base.zero_count();

  CHECK(w.intra_edge.eigenvalue == 0.0);
  CHECK(static_cast<int>(w.intra_edge.vectors.size()) == (extra - 1) * m);
  CHECK(w.intra_edge.rank == (extra - 1) * m);

  CHECK(w.vertex_vs_added.eigenvalue == 0.0);
  CHECK(static_cast<int>(w.vertex_vs_added.vectors.size()) == p.s * n);
  CHECK(w.vertex_vs_added.rank == p.s * n);

  CHECK(w.line_kernel.eigenvalue == Catch::Approx(static_cast<double>(extra)));
  CHECK(w.line_kernel.rank == m - t);

  // The two zero families are jointly independent and match the predicted
  // zero multiplicity.
  PredictedSpectrum pred = predict_power_spectrum(h, p);
  int predicted_zero = 0;
  for (const EigenGroup& g : pred.groups)
    if (std::abs(g.value) <= pred.tau_zero) predicted_zero += g.multiplicity;
  CHECK(w.combined_zero_rank == predicted_zero);
  CHECK(w.combined_zero_rank == (extra - 1) * m + p.s * n);
}

TEST_CASE("witness families are empty when nothing is added") {
  KernelWitnesses w = kernel_dimension_witnesses(p3(), {2, 4});
  CHECK(w.intra_edge.vectors.empty());
  CHECK(w.vertex_vs_added.vectors.empty());
  CHECK(w.line_kernel.vectors.empty());
  CHECK(w.combined_zero_rank == 0);

  // The zero multiplicity is still real, just certified by the eigensolver.
  PowerResult pw = power(p3(), {2, 4});
  Spectrum s = eigen_decompose(signless_laplacian(pw.hypergraph), {});
  CHECK(s.zero_count() == 4);
}

TEST_CASE("prediction validates its inputs") {
  Spectrum base = eigen_decompose(signless_laplacian(p3()), {});
  CHECK_THROWS_AS(predict_power_spectrum(base, 2, 5, 2, {1, 2}), error);   // wrong n
  CHECK_THROWS_AS(predict_power_spectrum(base, 2, 3, 2, {1, 1}), error);   // r < ks
  CHECK_THROWS_AS(predict_power_spectrum(base, 2, 3, 2, {0, 2}), error);   // s < 1
}

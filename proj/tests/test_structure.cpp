#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "hyperq/eigen.hpp"
#include "hyperq/generate.hpp"
#include "hyperq/hypergraph.hpp"
#include "hyperq/spectral.hpp"
#include "hyperq/structure.hpp"

using namespace hyperq;

namespace {

Hypergraph k4_3() {
  return build_hypergraph_ints(3, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
}

Hypergraph example3() {
  return build_hypergraph_ints(3, {{1, 2, 3}, {1, 4, 5}, {3, 4, 5}});
}

// Vertices 1 and 2 lie in exactly the same edges.
Hypergraph twin_pair() {
  return build_hypergraph_ints(3, {{1, 2, 3}, {1, 2, 4}});
}

// Vertices 3 and 4 are the duplicated pair here.
Hypergraph twin_pair_back() {
  return build_hypergraph_ints(3, {{1, 3, 4}, {2, 3, 4}});
}

}  // namespace

TEST_CASE("max edge degree-sum bounds the spectral radius") {
  CHECK(max_edge_degree_sum(k4_3()) == 9);
  CHECK(max_edge_degree_sum(example3()) == 6);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SeededRng rng(mix_seed(5150, seed));
    int k = rng.range_int(2, 4);
    int n = rng.range_int(k, 9);
    BigInt cap = binomial_exact(n, k);
    int m = rng.range_int(
        1, static_cast<int>(std::min<long long>(cap.convert_to<long long>(), 12)));
    Hypergraph h = random_hypergraph(k, n, m, rng.next_u64());
    CHECK(spectral_radius(h) <=
          static_cast<double>(max_edge_degree_sum(h)) * (1 + 1e-12));
  }
}

TEST_CASE("regularity equivalences on a regular instance") {
  RegularityReport r = regularity_report(k4_3());
  CHECK(r.connected);
  CHECK(r.is_regular);
  CHECK(r.rho_equals_k_avg);
  CHECK(r.rho_equals_k_max);
  CHECK(r.principal_uniform);
  CHECK(r.rho == Catch::Approx(9.0).margin(1e-8));
}

TEST_CASE("regularity equivalences on an irregular instance") {
  RegularityReport r = regularity_report(example3());
  CHECK(r.connected);
  CHECK_FALSE(r.is_regular);
  CHECK_FALSE(r.rho_equals_k_avg);
  CHECK_FALSE(r.rho_equals_k_max);
  CHECK_FALSE(r.principal_uniform);
  CHECK(r.rho > r.k_avg_degree);
  CHECK(r.rho < r.k_max_degree);
}

TEST_CASE("zero eigenpair test sums entries over edges") {
  Hypergraph h = twin_pair();

  // Difference of the duplicated vertices is in the kernel: every edge
  // contains both 1 and 2 or neither.
  std::vector<double> good{1.0, -1.0, 0.0, 0.0};
  CHECK(zero_eigenpair_valid(h, good));

  // Difference of vertices 3 and 4 is not: edge {1,2,3} sums to 1.
  std::vector<double> bad{0.0, 0.0, 1.0, -1.0};
  CHECK_FALSE(zero_eigenpair_valid(h, bad));

  // In the mirrored instance the roles swap. Intern order of {1,3,4},{2,3,4}
  // is 1, 3, 4, 2, so the difference of labels 3 and 4 sits at indices 1, 2.
  Hypergraph b = twin_pair_back();
  CHECK(zero_eigenpair_valid(b, std::vector<double>{0.0, 1.0, -1.0, 0.0}));
  CHECK_FALSE(zero_eigenpair_valid(b, std::vector<double>{1.0, 0.0, 0.0, -1.0}));

  std::vector<double> zero(4, 0.0);
  CHECK_THROWS_AS(zero_eigenpair_valid(h, zero), error);
  std::vector<double> short_vec(3, 1.0);
  CHECK_THROWS_AS(zero_eigenpair_valid(h, short_vec), error);
}

TEST_CASE("partial bipartition validator") {
  Hypergraph h = twin_pair();

  PartialBipartition p;
  p.v1 = {0};
  p.v2 = {1};
  p.v0 = {2, 3};
  CHECK(validate_partial_bipartition(h, p));
  p.balanced = {{1, 1}};
  CHECK(validate_partial_bipartition(h, p));

  // V1 = {3}, V2 = {4} fails: edge {1,2,3} meets V1 but not V2.
  PartialBipartition q;
  q.v1 = {2};
  q.v2 = {3};
  q.v0 = {0, 1};
  CHECK_FALSE(validate_partial_bipartition(h, q));

  // Missing a vertex.
  PartialBipartition r;
  r.v1 = {0};
  r.v2 = {1};
  r.v0 = {2};
  CHECK_FALSE(validate_partial_bipartition(h, r));

  // Unbalanced ratio claim: K4 with V1 = {1,2}, V2 = {3,4} has per-edge
  // ratios 2 and 1/2.
  PartialBipartition s;
  s.v1 = {0, 1};
  s.v2 = {2, 3};
  CHECK(validate_partial_bipartition(k4_3(), s));
  s.balanced = {{1, 1}};
  CHECK_FALSE(validate_partial_bipartition(k4_3(), s));
}

TEST_CASE("kernel vector extracts a valid partition") {
  // The twin-pair kernel is two-dimensional, so the returned split depends on
  // which basis vector the solver lands on; validity is the contract.
  auto p = partial_bipartition_from_kernel(twin_pair());
  REQUIRE(p.has_value());
  CHECK_FALSE(p->v1.empty());
  CHECK_FALSE(p->v2.empty());
  CHECK(validate_partial_bipartition(twin_pair(), *p));

  // No zero eigenvalue, no partition.
  CHECK_FALSE(partial_bipartition_from_kernel(k4_3()).has_value());
}

TEST_CASE("balanced partition produces a kernel vector") {
  Hypergraph h = twin_pair();
  PartialBipartition p;
  p.v1 = {0};
  p.v2 = {1};
  p.v0 = {2, 3};
  p.balanced = {{1, 1}};
  std::vector<double> x = balanced_bipartition_to_kernel(h, p);
  CHECK(x == std::vector<double>{1.0, -1.0, 0.0, 0.0});
  SymmetricMatrix q = signless_laplacian(h);
  CHECK(norm2(q.apply(x)) <= 1e-8 * q.frobenius_norm() * norm2(x));

  // Without the ratio claim the construction refuses.
  PartialBipartition no_ratio = p;
  no_ratio.balanced.reset();
  CHECK_THROWS_AS(balanced_bipartition_to_kernel(h, no_ratio), error);

  // The invalid split V1 = {3}, V2 = {4} is rejected outright.
  PartialBipartition wrong;
  wrong.v1 = {2};
  wrong.v2 = {3};
  wrong.v0 = {0, 1};
  wrong.balanced = {{1, 1}};
  try {
    balanced_bipartition_to_kernel(h, wrong);
    FAIL("expected an error");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_balanced);
  }
}

TEST_CASE("easy balanced patterns: duplicated vertices first") {
  auto p = detect_easy_balanced_patterns(twin_pair());
  REQUIRE(p.has_value());
  CHECK(p->v1 == std::vector<int>{0});
  CHECK(p->v2 == std::vector<int>{1});
  REQUIRE(p->balanced.has_value());
  CHECK(p->ratio() == 1.0);

  // Complete 3-graph has no duplicate pair and no degree-1 vertex.
  CHECK_FALSE(detect_easy_balanced_patterns(k4_3()).has_value());
}

TEST_CASE("easy balanced patterns: degree-1 companions") {
  // Vertex 1 is in both edges; 3 and 5 are degree-1 companions.
  Hypergraph h = build_hypergraph_ints(2, {{1, 3}, {1, 5}});
  auto p = detect_easy_balanced_patterns(h);
  REQUIRE(p.has_value());
  std::vector<double> x = balanced_bipartition_to_kernel(h, *p);
  CHECK(zero_eigenpair_valid(h, x));
}

TEST_CASE("partially bipartite without eigenvalue zero") {
  // K4 in threes admits V1 = {1,2}, V2 = {3,4} yet its least eigenvalue is 1.
  Hypergraph h = k4_3();
  PartialBipartition p;
  p.v1 = {0, 1};
  p.v2 = {2, 3};
  CHECK(validate_partial_bipartition(h, p));
  Spectrum s = eigen_decompose(signless_laplacian(h), {});
  CHECK(s.min_value() == Catch::Approx(1.0).margin(1e-8));
  CHECK(s.zero_count() == 0);
}

TEST_CASE("degree-sum bounds on the running example") {
  DegreeSumBounds b = degree_sum_bounds(example3());
  CHECK(b.connected);
  CHECK(b.lower == 5);
  CHECK(b.upper == 6);
  CHECK(b.k_avg == Catch::Approx(5.4));
  CHECK(b.k_max == Catch::Approx(6.0));
  CHECK(b.rho >= 5.0);
  CHECK(b.rho <= 6.0);
  CHECK(b.edge_sum_bounds_hold);
  CHECK(b.k_degree_bounds_hold);
}

TEST_CASE("greedy coloring is proper and within the spectral bound") {
  Hypergraph h = k4_3();
  Coloring c = greedy_min_degree_coloring(h);
  CHECK(coloring_is_proper(h, c));
  CHECK(c.color_count == 2);
  CHECK(c.color_count <= chromatic_upper_bound(9.0, 3));
  CHECK(chromatic_upper_bound(9.0, 3) == 4);

  Coloring c3 = greedy_min_degree_coloring(example3());
  CHECK(coloring_is_proper(example3(), c3));
  CHECK(c3.color_count <= chromatic_upper_bound(spectral_radius(example3()), 3));

  // A single edge needs two colors (one vertex differs).
  Hypergraph single = build_hypergraph_ints(4, {{1, 2, 3, 4}});
  Coloring cs = greedy_min_degree_coloring(single);
  CHECK(coloring_is_proper(single, cs));
  CHECK(cs.color_count == 2);
}

TEST_CASE("improper colorings are caught") {
  Hypergraph h = build_hypergraph_ints(2, {{1, 2}});
  Coloring c;
  c.assignment = {1, 1};
  c.color_count = 1;
  CHECK_FALSE(coloring_is_proper(h, c));
}

TEST_CASE("chromatic bound survives a marginally-low radius") {
  // floor of 8.999999999 / 3 + 1 must still be 3 + 1.
  CHECK(chromatic_upper_bound(9.0 - 1e-9, 3) == 4);
  CHECK(chromatic_upper_bound(2.0, 2) == 2);
}

TEST_CASE("edge count recovered from the spectrum") {
  Spectrum s = eigen_decompose(signless_laplacian(example3()), {});
  CHECK(spectral_edge_count(s, 3) == 3);
  Spectrum sk = eigen_decompose(signless_laplacian(k4_3()), {});
  CHECK(spectral_edge_count(sk, 3) == 4);
}

TEST_CASE("distinct eigenvalues exceed the diameter") {
  DiameterSpectrumReport r = distinct_eigenvalues_vs_diameter(example3());
  CHECK(r.distinct == 4);
  CHECK(r.diameter == 2);
  CHECK(r.holds);

  DiameterSpectrumReport rk = distinct_eigenvalues_vs_diameter(k4_3());
  CHECK(rk.distinct == 2);
  CHECK(rk.diameter == 1);
  CHECK(rk.holds);

  CHECK_THROWS_AS(
      distinct_eigenvalues_vs_diameter(build_hypergraph_ints(2, {{1, 2}, {3, 4}})), error);
}

TEST_CASE("log-ratio diameter bound") {
  // Complete 3-graph: floor(1 + ln 3 / ln 9) = 1 = its diameter.
  CHECK(diameter_upper_bound(k4_3()) == 1);
  CHECK(diameter_upper_bound(example3()) == 4);

  // Single edge: no second eigenvalue to take a ratio with.
  try {
    diameter_upper_bound(build_hypergraph_ints(3, {{1, 2, 3}}));
    FAIL("expected an error");
  } catch (const error& e) {
    CHECK(e.code() == errc::too_few_edges);
  }

  CHECK_THROWS_AS(diameter_upper_bound(build_hypergraph_ints(2, {{1, 2}, {3, 4}})), error);
}

TEST_CASE("bound is tight against the true diameter on random connected input") {
  int tested = 0;
  for (std::uint64_t seed = 0; tested < 25 && seed < 200; ++seed) {
    SeededRng rng(mix_seed(31337, seed));
    int k = rng.range_int(2, 3);
    int n = rng.range_int(k, 9);
    BigInt cap = binomial_exact(n, k);
    int m = rng.range_int(
        1, static_cast<int>(std::min<long long>(cap.convert_to<long long>(), 12)));
    auto h = random_connected_hypergraph(k, n, m, rng.next_u64());
    if (!h || h->edge_count() < 2) continue;
    Spectrum s = eigen_decompose(signless_laplacian(*h), {});
    if (s.values[0] - s.values[1] <= s.tau_group) continue;
    ++tested;
    int d = *diameter(*h);
    CHECK(distinct_eigenvalues_vs_diameter(*h).holds);
    CHECK(diameter_upper_bound(*h) >= d);
  }
  CHECK(tested >= 20);
}

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "hyperq/eigen.hpp"
#include "hyperq/hypergraph.hpp"
#include "hyperq/spectral.hpp"

using namespace hyperq;

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST_CASE("2x2 eigenvalues in closed form") {
  SymmetricMatrix m(2);
  m.set(0, 0, 2.0);
  m.set(1, 1, 1.0);
  m.set(0, 1, 2.0);
  // Eigenvalues (3 +- sqrt(17)) / 2.
  Spectrum s = eigen_decompose(m, {});
  CHECK(s.values[0] == Catch::Approx((3 + std::sqrt(17.0)) / 2).epsilon(1e-12));
  CHECK(s.values[1] == Catch::Approx((3 - std::sqrt(17.0)) / 2).epsilon(1e-12));
}

TEST_CASE("complete 3-graph on four vertices: 9 once, 1 thrice") {
  Hypergraph h = build_hypergraph_ints(3, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  Spectrum s = eigen_decompose(signless_laplacian(h), {});
  REQUIRE(s.groups.size() == 2);
  CHECK(s.groups[0].value == Catch::Approx(9.0).margin(1e-8));
  CHECK(s.groups[0].multiplicity == 1);
  CHECK(s.groups[1].value == Catch::Approx(1.0).margin(1e-8));
  CHECK(s.groups[1].multiplicity == 3);
}

TEST_CASE("three pairwise-overlapping 3-edges: 4 +- sqrt(3), 1, 0, 0") {
  Hypergraph h = build_hypergraph_ints(3, {{1, 2, 3}, {1, 4, 5}, {3, 4, 5}});
  Spectrum s = eigen_decompose(signless_laplacian(h), {});
  REQUIRE(s.order() == 5);
  CHECK(s.values[0] == Catch::Approx(4 + std::sqrt(3.0)).margin(1e-10));
  CHECK(s.values[1] == Catch::Approx(4 - std::sqrt(3.0)).margin(1e-10));
  CHECK(s.values[2] == Catch::Approx(1.0).margin(1e-10));
  CHECK(s.zero_count() == 2);
  CHECK(s.rho() == s.values[0]);
  CHECK(s.min_value() == s.values[4]);
  CHECK(s.first_zero_index() == 3);
}

TEST_CASE("eigenpairs have small residuals and orthonormal vectors") {
  Hypergraph h = build_hypergraph_ints(3, {{1, 2, 3}, {1, 4, 5}, {3, 4, 5}, {2, 4, 5}, {1, 2, 5}});
  SymmetricMatrix q = signless_laplacian(h);
  Spectrum s = eigen_decompose(q, {});
  for (int i = 0; i < s.order(); ++i) {
    CHECK(eigenpair_residual(q, s.values[i], s.vectors[i]) <= s.tau_solve);
    CHECK(dot(s.vectors[i], s.vectors[i]) == Catch::Approx(1.0).epsilon(1e-12));
    for (int j = i + 1; j < s.order(); ++j)
      CHECK(std::abs(dot(s.vectors[i], s.vectors[j])) < 1e-10);
  }
  // Values are sorted descending and sum to the trace.
  double sum = 0;
  for (int i = 0; i + 1 < s.order(); ++i) CHECK(s.values[i] >= s.values[i + 1]);
  for (double v : s.values) sum += v;
  CHECK(sum == Catch::Approx(q.trace()).epsilon(1e-12));
}

TEST_CASE("sign convention: largest entry positive, ties at the lowest index") {
  SymmetricMatrix m(2);
  m.set(0, 0, 1.0);
  m.set(1, 1, 1.0);
  Spectrum s = eigen_decompose(m, {});
  for (const auto& v : s.vectors) {
    double big = 0;
    for (double e : v) big = std::max(big, std::abs(e));
    std::size_t at = 0;
    while (std::abs(v[at]) != big) ++at;
    CHECK(v[at] > 0);
  }
}

TEST_CASE("grouping merges near-degenerate values under tau_group") {
  SymmetricMatrix m = SymmetricMatrix::diagonal({5.0, 5.0 + 1e-12, 2.0, 0.0});
  Spectrum s = eigen_decompose(m, {});
  REQUIRE(s.groups.size() == 3);
  CHECK(s.groups[0].multiplicity == 2);
  CHECK(s.groups[0].value == Catch::Approx(5.0).margin(1e-9));

  // With group_scale below the gap the pair separates.
  Tolerances tight;
  tight.group_scale = 1e-14;
  Spectrum t = eigen_decompose(m, tight);
  CHECK(t.groups.size() == 4);
}

TEST_CASE("tolerances scale with the spectral radius") {
  SymmetricMatrix m = SymmetricMatrix::diagonal({100.0, 1.0});
  Spectrum s = eigen_decompose(m, {});
  CHECK(s.tau_group == Catch::Approx(1e-6));
  CHECK(s.tau_zero == Catch::Approx(1e-6));

  SymmetricMatrix small = SymmetricMatrix::diagonal({0.25, 0.0});
  Spectrum t = eigen_decompose(small, {});
  CHECK(t.tau_zero == Catch::Approx(1e-8));  // floor at scale 1
}

TEST_CASE("zero classification uses tau_zero") {
  SymmetricMatrix m = SymmetricMatrix::diagonal({3.0, 1e-12, -1e-12});
  Spectrum s = eigen_decompose(m, {});
  CHECK(s.zero_count() == 2);
  CHECK(s.is_zero(1e-12));
  CHECK_FALSE(s.is_zero(1.0));
}

TEST_CASE("empty and 1x1 matrices") {
  SymmetricMatrix one(1);
  one.set(0, 0, 7.0);
  Spectrum s = eigen_decompose(one, {});
  CHECK(s.values == std::vector<double>{7.0});
  CHECK(s.vectors[0] == std::vector<double>{1.0});
}

TEST_CASE("multiset comparison") {
  CHECK(multisets_close({1.0, 2.0, 3.0}, {3.0, 1.0, 2.0}, 1e-12));
  CHECK(multisets_close({1.0, 1.0 + 1e-10}, {1.0, 1.0}, 1e-9));
  CHECK_FALSE(multisets_close({1.0, 2.0}, {1.0, 2.1}, 1e-3));
  CHECK_FALSE(multisets_close({1.0}, {1.0, 1.0}, 1.0));
}

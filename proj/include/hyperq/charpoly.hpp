#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <string>
#include <vector>

#include "hyperq/error.hpp"
#include "hyperq/matrix.hpp"

namespace hyperq {

using BigInt = boost::multiprecision::cpp_int;

// Coefficient growth is factorial-like in the order, and the recurrence costs
// O(n^4) big-integer multiplies; 16 keeps both trivial at desk scale.
inline constexpr int kDefaultCharPolyOrderLimit = 16;

// det(lambda*I - M) with exact integer coefficients: coeffs[j] multiplies
// lambda^(degree - j), coeffs[0] = 1.
struct CharPoly {
  std::vector<BigInt> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  bool operator==(const CharPoly& other) const = default;

  double evaluate(double lambda) const {
    double acc = 0;
    for (const BigInt& c : coeffs) acc = acc * lambda + c.convert_to<double>();
    return acc;
  }

  // Worst-case magnitude of the Horner evaluation: sum |c_j| |lambda|^(d-j).
  // Serves as the scale for "P(lambda_hat) is numerically zero" decisions.
  // Floored by the largest coefficient so it cannot degenerate near
  // lambda = 0 when the constant term vanishes.
  double envelope(double lambda) const {
    double acc = 0;
    double al = std::abs(lambda);
    double floor_scale = 0;
    for (const BigInt& c : coeffs) {
      double ac = std::abs(c.convert_to<double>());
      acc = acc * al + ac;
      floor_scale = std::max(floor_scale, ac);
    }
    return std::max(acc, floor_scale);
  }

  // P(lambda + a), exact.
  CharPoly shifted(long long a) const {
    int n = degree();
    CharPoly out;
    out.coeffs.assign(n + 1, 0);
    std::vector<BigInt> bin{1};  // coefficients of (lambda + a)^p, p = 0 initially
    for (int p = 0; p <= n; ++p) {
      const BigInt& cj = coeffs[n - p];
      for (int i = 0; i <= p; ++i) out.coeffs[n - p + i] += cj * bin[i];
      if (p == n) break;
      bin.push_back(0);
      for (int t = p + 1; t >= 1; --t) bin[t] = bin[t] + a * bin[t - 1];
    }
    return out;
  }

  // P(lambda) * (lambda + a)^power, exact.
  CharPoly times_power_of_linear(long long a, int power) const {
    CharPoly out = *this;
    for (int rep = 0; rep < power; ++rep) {
      out.coeffs.push_back(0);
      for (int t = static_cast<int>(out.coeffs.size()) - 1; t >= 1; --t)
        out.coeffs[t] = out.coeffs[t] + a * out.coeffs[t - 1];
    }
    return out;
  }

  std::vector<std::string> coefficient_strings() const {
    std::vector<std::string> s;
    s.reserve(coeffs.size());
    for (const BigInt& c : coeffs) s.push_back(c.str());
    return s;
  }
};

inline CharPoly char_poly_exact(const SymmetricMatrix& m,
                                int order_limit = kDefaultCharPolyOrderLimit) {
  int n = m.order();
  if (n > order_limit)
    fail(errc::order_limit_exceeded, "order " + std::to_string(n) +
         " exceeds the exact-polynomial limit " + std::to_string(order_limit));
  if (!m.has_integer_entries())
    fail(errc::bad_params, "exact characteristic polynomial needs integer entries");

  std::vector<BigInt> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[static_cast<std::size_t>(i) * n + j] = static_cast<long long>(std::llround(m(i, j)));

  // Faddeev-LeVerrier: N_1 = I; c_j = -tr(A N_j)/j; N_{j+1} = A N_j + c_j I.
  std::vector<BigInt> nmat(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) nmat[static_cast<std::size_t>(i) * n + i] = 1;

  CharPoly p;
  p.coeffs.assign(n + 1, 0);
  p.coeffs[0] = 1;
  std::vector<BigInt> an(static_cast<std::size_t>(n) * n);
  for (int j = 1; j <= n; ++j) {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        BigInt s = 0;
        for (int t = 0; t < n; ++t)
          s += a[static_cast<std::size_t>(r) * n + t] * nmat[static_cast<std::size_t>(t) * n + c];
        an[static_cast<std::size_t>(r) * n + c] = s;
      }
    BigInt tr = 0;
    for (int i = 0; i < n; ++i) tr += an[static_cast<std::size_t>(i) * n + i];
    if (tr % j != 0)
      fail(errc::internal_consistency, "trace recurrence produced a non-integer coefficient");
    BigInt cj = -tr / j;
    p.coeffs[j] = cj;
    nmat = an;
    for (int i = 0; i < n; ++i) nmat[static_cast<std::size_t>(i) * n + i] += cj;
  }
  return p;
}

}  // namespace hyperq

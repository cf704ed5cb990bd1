#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hyperq/error.hpp"
#include "hyperq/hypergraph.hpp"

namespace hyperq {

using BigInt = boost::multiprecision::cpp_int;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Per-trial seed derivation; order-independent across trials.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t trial) {
  return splitmix64(splitmix64(master) ^ splitmix64(trial + 0x9E3779B97F4A7C15ull));
}

// mt19937_64 with hand-rolled bounded sampling, so the byte stream depends
// only on the seed, not on the standard library's distribution internals.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) fail(errc::bad_params, "empty sampling range");
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % bound;
  }

  int range_int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 eng_;
};

inline BigInt binomial_exact(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

// Uniform sample of m distinct k-subsets of {1..n}, emitted in lexicographic
// order. Small universes select from the full enumeration; large ones use
// rejection into a set. Both paths are deterministic in the seed.
inline Hypergraph random_hypergraph(int k, int n, int m, std::uint64_t seed) {
  if (k < 2 || n < k || m < 1)
    fail(errc::bad_params, "need k >= 2, n >= k, m >= 1; got k = " + std::to_string(k) +
         ", n = " + std::to_string(n) + ", m = " + std::to_string(m));
  BigInt total = binomial_exact(n, k);
  if (total < m)
    fail(errc::too_many_edges, std::to_string(m) + " edges requested but only " +
         total.str() + " distinct " + std::to_string(k) + "-subsets exist");

  SeededRng rng(seed);
  std::set<Edge> chosen;
  if (total <= 100000) {
    std::vector<Edge> pool;
    Edge cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
      pool.push_back(cur);
      int i = k - 1;
      while (i >= 0 && cur[i] == n - k + i) --i;
      if (i < 0) break;
      ++cur[i];
      for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    for (int i = 0; i < m; ++i) {
      std::size_t j = i + rng.below(pool.size() - i);
      std::swap(pool[i], pool[j]);
      chosen.insert(pool[i]);
    }
  } else {
    while (static_cast<int>(chosen.size()) < m) {
      std::set<int> pick;
      while (static_cast<int>(pick.size()) < k)
        pick.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
      chosen.insert(Edge(pick.begin(), pick.end()));
    }
  }

  std::vector<std::vector<std::string>> edge_tokens;
  for (const Edge& e : chosen) {
    std::vector<std::string> toks;
    for (int v : e) toks.push_back(std::to_string(v + 1));
    edge_tokens.push_back(std::move(toks));
  }
  return build_hypergraph(k, edge_tokens);
}

// Resamples until connected, up to `attempts` tries (sub-seeded from `seed`);
// nullopt when every attempt came out disconnected.
inline std::optional<Hypergraph> random_connected_hypergraph(int k, int n, int m,
                                                             std::uint64_t seed,
                                                             int attempts = 100) {
  for (int a = 0; a < attempts; ++a) {
    Hypergraph h = random_hypergraph(k, n, m, mix_seed(seed, static_cast<std::uint64_t>(a)));
    if (is_connected(h)) return h;
  }
  return std::nullopt;
}

}  // namespace hyperq

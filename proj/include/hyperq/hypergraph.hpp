#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hyperq/error.hpp"

namespace hyperq {

// An edge stored as sorted, distinct vertex indices.
using Edge = std::vector<int>;

// A k-uniform hypergraph. Vertices carry opaque string tokens and are indexed
// by first appearance in the edge list; edges form a set (duplicates are a
// construction error). Immutable after construction.
class Hypergraph {
 public:
  Hypergraph(int k, const std::vector<std::vector<std::string>>& edge_tokens) {
    if (k < 2) fail(errc::bad_params, "uniformity k must be >= 2, got " + std::to_string(k));
    if (edge_tokens.empty()) fail(errc::empty_edge_list, "a hypergraph needs at least one edge");
    k_ = k;
    std::set<Edge> seen;
    edges_.reserve(edge_tokens.size());
    for (std::size_t i = 0; i < edge_tokens.size(); ++i) {
      Edge e;
      e.reserve(edge_tokens[i].size());
      for (const std::string& tok : edge_tokens[i]) e.push_back(intern(tok));
      std::sort(e.begin(), e.end());
      e.erase(std::unique(e.begin(), e.end()), e.end());
      if (static_cast<int>(e.size()) != k_)
        fail(errc::non_uniform_edge, "edge " + std::to_string(i + 1) + " has " +
             std::to_string(e.size()) + " distinct vertices, expected " + std::to_string(k_));
      if (!seen.insert(e).second)
        fail(errc::duplicate_edge, "edge " + std::to_string(i + 1) + " repeats an earlier edge");
      edges_.push_back(std::move(e));
    }
  }

  int k() const { return k_; }
  int vertex_count() const { return static_cast<int>(tokens_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::string>& tokens() const { return tokens_; }
  const std::string& token(int v) const { return tokens_[check_vertex(v)]; }

  std::optional<int> index_of(std::string_view tok) const {
    auto it = index_.find(std::string(tok));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  int require_vertex(std::string_view tok) const {
    auto idx = index_of(tok);
    if (!idx) fail(errc::unknown_vertex, "no vertex with token '" + std::string(tok) + "'");
    return *idx;
  }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_.at(i); }

  bool contains_edge(const Edge& sorted_edge) const {
    return std::find(edges_.begin(), edges_.end(), sorted_edge) != edges_.end();
  }

  int check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
      fail(errc::unknown_vertex, "vertex index " + std::to_string(v) + " out of range [0, " +
           std::to_string(vertex_count()) + ")");
    return v;
  }

  // Vertex adjacency lists of the underlying co-edge relation (u ~ w iff some
  // edge contains both), deduplicated. Walk metrics run over this relation.
  std::vector<std::vector<int>> adjacency_lists() const {
    std::vector<std::set<int>> nb(vertex_count());
    for (const Edge& e : edges_)
      for (int u : e)
        for (int w : e)
          if (u != w) nb[u].insert(w);
    std::vector<std::vector<int>> adj(vertex_count());
    for (int v = 0; v < vertex_count(); ++v) adj[v].assign(nb[v].begin(), nb[v].end());
    return adj;
  }

 private:
  int intern(const std::string& tok) {
    auto [it, inserted] = index_.try_emplace(tok, static_cast<int>(tokens_.size()));
    if (inserted) tokens_.push_back(tok);
    return it->second;
  }

  int k_ = 0;
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> index_;
  std::vector<Edge> edges_;
};

inline Hypergraph build_hypergraph(int k, const std::vector<std::vector<std::string>>& edge_tokens) {
  return Hypergraph(k, edge_tokens);
}

// Convenience for fixtures: edges given as integer vertex labels.
inline Hypergraph build_hypergraph_ints(int k, const std::vector<std::vector<int>>& edges) {
  std::vector<std::vector<std::string>> toks;
  toks.reserve(edges.size());
  for (const auto& e : edges) {
    std::vector<std::string> t;
    t.reserve(e.size());
    for (int v : e) t.push_back(std::to_string(v));
    toks.push_back(std::move(t));
  }
  return build_hypergraph(k, toks);
}

struct DegreeProfile {
  std::vector<int> per_vertex;
  int min = 0;
  int max = 0;
  long long sum = 0;  // average d(H) = sum / n, held exactly

  double average() const {
    return static_cast<double>(sum) / static_cast<double>(per_vertex.size());
  }
};

inline DegreeProfile degrees(const Hypergraph& h) {
  DegreeProfile p;
  p.per_vertex.assign(h.vertex_count(), 0);
  for (const Edge& e : h.edges())
    for (int v : e) ++p.per_vertex[v];
  p.min = *std::min_element(p.per_vertex.begin(), p.per_vertex.end());
  p.max = *std::max_element(p.per_vertex.begin(), p.per_vertex.end());
  for (int d : p.per_vertex) p.sum += d;
  return p;
}

// Multiset of co-edge neighbors: w -> number of edges containing both v and w.
inline std::map<int, int> neighborhood(const Hypergraph& h, int v) {
  h.check_vertex(v);
  std::map<int, int> mult;
  for (const Edge& e : h.edges()) {
    if (std::find(e.begin(), e.end(), v) == e.end()) continue;
    for (int w : e)
      if (w != v) ++mult[w];
  }
  return mult;
}

inline std::vector<int> edge_neighborhood(const Hypergraph& h, int v) {
  h.check_vertex(v);
  std::vector<int> ids;
  for (int i = 0; i < h.edge_count(); ++i) {
    const Edge& e = h.edge(i);
    if (std::find(e.begin(), e.end(), v) != e.end()) ids.push_back(i);
  }
  return ids;
}

inline std::vector<int> bfs_distances(const Hypergraph& h, int source) {
  h.check_vertex(source);
  auto adj = h.adjacency_lists();
  std::vector<int> dist(h.vertex_count(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

// Walk distance; nullopt when u and w lie in different components.
inline std::optional<int> distance(const Hypergraph& h, int u, int w) {
  h.check_vertex(w);
  int d = bfs_distances(h, u)[w];
  if (d < 0) return std::nullopt;
  return d;
}

inline std::optional<int> distance(const Hypergraph& h, std::string_view u, std::string_view w) {
  return distance(h, h.require_vertex(u), h.require_vertex(w));
}

inline bool is_connected(const Hypergraph& h) {
  auto dist = bfs_distances(h, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

// Largest pairwise distance; nullopt (infinite) iff disconnected.
inline std::optional<int> diameter(const Hypergraph& h) {
  int best = 0;
  for (int v = 0; v < h.vertex_count(); ++v) {
    auto dist = bfs_distances(h, v);
    for (int d : dist) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

// Set-union of vertex tokens and edges. Shared tokens identify vertices;
// edges equal as token sets are merged.
inline Hypergraph union_of(const Hypergraph& g, const Hypergraph& h) {
  if (g.k() != h.k())
    fail(errc::uniformity_mismatch, "union of a " + std::to_string(g.k()) + "-graph and a " +
         std::to_string(h.k()) + "-graph");
  std::vector<std::vector<std::string>> edge_tokens;
  std::set<std::vector<std::string>> seen;
  auto add_edges = [&](const Hypergraph& src) {
    for (const Edge& e : src.edges()) {
      std::vector<std::string> toks;
      for (int v : e) toks.push_back(src.token(v));
      std::sort(toks.begin(), toks.end());
      if (seen.insert(toks).second) edge_tokens.push_back(std::move(toks));
    }
  };
  add_edges(g);
  add_edges(h);
  return build_hypergraph(g.k(), edge_tokens);
}

inline std::string product_token(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

// Cartesian product: vertices V(G) x V(H); edges {v} x e for v in V(G),
// e in E(H), then a x {u} for u in V(H), a in E(G).
inline Hypergraph cartesian_product(const Hypergraph& g, const Hypergraph& h) {
  if (g.k() != h.k())
    fail(errc::uniformity_mismatch, "product of a " + std::to_string(g.k()) + "-graph and a " +
         std::to_string(h.k()) + "-graph");
  std::vector<std::vector<std::string>> edge_tokens;
  edge_tokens.reserve(static_cast<std::size_t>(g.vertex_count()) * h.edge_count() +
                      static_cast<std::size_t>(h.vertex_count()) * g.edge_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    for (const Edge& e : h.edges()) {
      std::vector<std::string> toks;
      for (int u : e) toks.push_back(product_token(g.token(v), h.token(u)));
      edge_tokens.push_back(std::move(toks));
    }
  for (int u = 0; u < h.vertex_count(); ++u)
    for (const Edge& a : g.edges()) {
      std::vector<std::string> toks;
      for (int v : a) toks.push_back(product_token(g.token(v), h.token(u)));
      edge_tokens.push_back(std::move(toks));
    }
  Hypergraph prod = build_hypergraph(g.k(), edge_tokens);
  if (prod.vertex_count() != g.vertex_count() * h.vertex_count() ||
      prod.edge_count() != g.vertex_count() * h.edge_count() + h.vertex_count() * g.edge_count())
    fail(errc::internal_consistency, "cartesian product size mismatch");
  return prod;
}

}  // namespace hyperq

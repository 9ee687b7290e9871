// Brute-force references for the tests. Nothing here touches the bit-row
// kernels: graphs come in as plain edge lists or boolean matrices.
#ifndef SQCC_TESTS_ORACLES_HPP
#define SQCC_TESTS_ORACLES_HPP

#include <cstddef>
#include <cstdint>
#include <queue>
#include <random>
#include <utility>
#include <vector>

#include "sqcc/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;
using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

inline constexpr std::uint64_t kDefaultSeed = 20240611;

inline Matrix matrix_of(const sqcc::SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  Matrix m(n, std::vector<bool>(n, false));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v) m[u][v] = g.has_edge(u, v);
  return m;
}

inline Matrix matrix_of(std::size_t n, const EdgeList& edges) {
  Matrix m(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges) m[u][v] = m[v][u] = true;
  return m;
}

// Pairs at BFS distance 1 or 2.
inline Matrix distance_two(const Matrix& adj) {
  const std::size_t n = adj.size();
  Matrix out(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::queue<std::size_t> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (std::size_t v = 0; v < n; ++v)
        if (adj[u][v] && dist[v] < 0) {
          dist[v] = dist[u] + 1;
          q.push(v);
        }
    }
    for (std::size_t t = 0; t < n; ++t) out[s][t] = t != s && dist[t] > 0 && dist[t] <= 2;
  }
  return out;
}

// Total graph straight from its three-case definition; elements are the
// vertices followed by the edges (u<v) in lexicographic order.
inline Matrix total_by_definition(std::size_t n, const EdgeList& sorted_edges) {
  struct Element {
    bool is_edge;
    std::size_t a, b;
  };
  std::vector<Element> el;
  for (std::size_t v = 0; v < n; ++v) el.push_back({false, v, v});
  for (auto [u, v] : sorted_edges) el.push_back({true, u, v});
  const Matrix adj = matrix_of(n, sorted_edges);
  Matrix out(el.size(), std::vector<bool>(el.size(), false));
  for (std::size_t x = 0; x < el.size(); ++x)
    for (std::size_t y = 0; y < el.size(); ++y) {
      if (x == y) continue;
      const auto& p = el[x];
      const auto& q = el[y];
      bool hit = false;
      if (!p.is_edge && !q.is_edge) hit = adj[p.a][q.a];
      else if (p.is_edge && q.is_edge)
        hit = p.a == q.a || p.a == q.b || p.b == q.a || p.b == q.b;
      else {
        const auto& vert = p.is_edge ? q : p;
        const auto& edge = p.is_edge ? p : q;
        hit = vert.a == edge.a || vert.a == edge.b;
      }
      out[x][y] = hit;
    }
  return out;
}

// Tries every assignment from the lists (odometer order).
inline bool list_colorable_by_enumeration(const Matrix& adj, const std::vector<std::vector<int>>& lists) {
  const std::size_t n = adj.size();
  for (const auto& l : lists)
    if (l.empty()) return false;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = u + 1; v < n && ok; ++v)
        if (adj[u][v] && lists[u][pick[u]] == lists[v][pick[v]]) ok = false;
    if (ok) return true;
    std::size_t i = 0;
    while (i < n && ++pick[i] == lists[i].size()) pick[i++] = 0;
    if (i == n) return false;
  }
}

// Smallest k with a proper k-coloring, by enumerating all k^n colorings.
inline int chromatic_by_enumeration(const Matrix& adj) {
  const std::size_t n = adj.size();
  if (n == 0) return 0;
  for (int k = 1;; ++k) {
    std::vector<std::vector<int>> lists(n);
    for (auto& l : lists)
      for (int c = 0; c < k; ++c) l.push_back(c);
    if (list_colorable_by_enumeration(adj, lists)) return k;
  }
}

inline std::size_t edge_total(const Matrix& m) {
  std::size_t c = 0;
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = u + 1; v < m.size(); ++v) c += m[u][v];
  return c;
}

inline sqcc::SimpleGraph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  sqcc::SimpleGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace oracle

#endif  // SQCC_TESTS_ORACLES_HPP

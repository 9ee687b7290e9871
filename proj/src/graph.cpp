#include "sqcc/graph.hpp"

#include <algorithm>
#include <string>

namespace sqcc {

std::size_t SimpleGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

void SimpleGraph::check_pair(Vertex u, Vertex v) const {
  if (u >= rows_.size() || v >= rows_.size())
    throw InvalidInput("vertex out of range: (" + std::to_string(u) + ", " +
                       std::to_string(v) + ") with " + std::to_string(rows_.size()) +
                       " vertices");
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
  rows_[u].set(v);
  rows_[v].set(u);
}

void SimpleGraph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  rows_[u].reset(v);
  rows_[v].reset(u);
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const {
  check_pair(u, v);
  return rows_[u].test(v);
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < rows_.size(); ++u) {
    for (auto v = rows_[u].find_next(u); v != BitRow::npos; v = rows_[u].find_next(v))
      out.emplace_back(u, v);
  }
  return out;
}

std::size_t PartitionWitness::vertex_count() const noexcept {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  return total;
}

std::vector<std::size_t> PartitionWitness::membership(std::size_t vertex_count) const {
  constexpr auto kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(vertex_count, kUnassigned);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].empty()) throw InvalidInput("partition part " + std::to_string(p) + " is empty");
    for (Vertex v : parts[p]) {
      if (v >= vertex_count)
        throw InvalidInput("partition vertex " + std::to_string(v) + " out of range");
      if (owner[v] != kUnassigned)
        throw InvalidInput("vertex " + std::to_string(v) + " appears in more than one part");
      owner[v] = p;
    }
  }
  for (Vertex v = 0; v < vertex_count; ++v)
    if (owner[v] == kUnassigned)
      throw InvalidInput("vertex " + std::to_string(v) + " is not covered by the partition");
  return owner;
}

SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph path_graph(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

SimpleGraph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidParameter("a cycle needs at least 3 vertices");
  SimpleGraph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

SimpleGraph graph_from_edges(std::size_t n, const std::vector<Edge>& edges) {
  SimpleGraph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

SimpleGraph complete_multipartite(std::size_t part_size, std::size_t part_count) {
  const std::size_t n = part_size * part_count;
  SimpleGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (u / part_size != v / part_size) g.add_edge(u, v);
  return g;
}

PartitionWitness equal_parts(std::size_t part_size, std::size_t part_count) {
  PartitionWitness w;
  w.parts.resize(part_count);
  for (std::size_t p = 0; p < part_count; ++p)
    for (std::size_t k = 0; k < part_size; ++k) w.parts[p].push_back(p * part_size + k);
  return w;
}

SimpleGraph square(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  SimpleGraph sq(n);
  for (Vertex v = 0; v < n; ++v) {
    BitRow reach = g.neighbors(v);
    g.neighbors(v).for_each([&](std::size_t u) { reach |= g.neighbors(u); });
    reach.reset(v);
    reach.for_each([&](std::size_t u) {
      if (u > v) sq.add_edge(v, u);
    });
  }
  return sq;
}

SimpleGraph square_oracle(const SimpleGraph& g) {
  if (g.vertex_count() > kSquareOracleMaxVertices)
    throw CapacityError("square_oracle supports at most " +
                        std::to_string(kSquareOracleMaxVertices) + " vertices, got " +
                        std::to_string(g.vertex_count()));
  const Eigen::MatrixXi a = adjacency_matrix<int>(g);
  Eigen::MatrixXi reach = a + a * a;
  reach.diagonal().setZero();
  return graph_from_matrix(reach);
}

InducedSubgraph induced_subgraph(const SimpleGraph& g, const VertexSet& s) {
  BitRow seen(g.vertex_count());
  for (Vertex v : s) {
    if (v >= g.vertex_count())
      throw InvalidInput("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    if (seen.test(v))
      throw InvalidInput("induced_subgraph: vertex " + std::to_string(v) + " repeated");
    seen.set(v);
  }
  InducedSubgraph out{SimpleGraph(s.size()), s};
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (g.has_edge(s[a], s[b])) out.graph.add_edge(a, b);
  return out;
}

namespace {

BitRow as_mask(const SimpleGraph& g, const VertexSet& s) {
  BitRow mask(g.vertex_count());
  for (Vertex v : s) {
    if (v >= g.vertex_count())
      throw InvalidInput("vertex " + std::to_string(v) + " out of range");
    mask.set(v);
  }
  return mask;
}

}  // namespace

bool is_independent_set(const SimpleGraph& g, const VertexSet& s) {
  const BitRow mask = as_mask(g, s);
  for (Vertex v : s)
    if (intersects(g.neighbors(v), mask)) return false;
  return true;
}

bool is_clique(const SimpleGraph& g, const VertexSet& s) {
  BitRow mask = as_mask(g, s);
  for (Vertex v : s) {
    mask.reset(v);
    const bool ok = mask.is_subset_of(g.neighbors(v));
    mask.set(v);
    if (!ok) return false;
  }
  return true;
}

bool is_complete_multipartite(const SimpleGraph& g, const PartitionWitness& w) {
  w.membership(g.vertex_count());
  BitRow all(g.vertex_count());
  all.fill();
  for (const auto& part : w.parts) {
    BitRow expected = all;
    expected.subtract(as_mask(g, part));
    for (Vertex v : part)
      if (!(g.neighbors(v) == expected)) return false;
  }
  return true;
}

std::string ElementLabel::name() const {
  if (kind == Kind::kVertex) return "x" + std::to_string(first);
  return "e" + std::to_string(first) + "_" + std::to_string(second);
}

namespace {

ElementGraph element_skeleton(const SimpleGraph& g) {
  const auto edges = g.edges();
  ElementGraph out{SimpleGraph(g.vertex_count() + edges.size()), {}};
  out.labels.reserve(out.graph.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    out.labels.push_back({ElementLabel::Kind::kVertex, v, 0});
  for (const auto& [u, v] : edges) out.labels.push_back({ElementLabel::Kind::kEdge, u, v});
  return out;
}

}  // namespace

ElementGraph subdivision(const SimpleGraph& g) {
  ElementGraph out = element_skeleton(g);
  const Vertex base = g.vertex_count();
  const auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    out.graph.add_edge(edges[e].first, base + e);
    out.graph.add_edge(edges[e].second, base + e);
  }
  return out;
}

ElementGraph total_graph(const SimpleGraph& g) {
  ElementGraph out = element_skeleton(g);
  const Vertex base = g.vertex_count();
  const auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    out.graph.add_edge(u, v);
    out.graph.add_edge(u, base + e);
    out.graph.add_edge(v, base + e);
    for (std::size_t f = e + 1; f < edges.size(); ++f) {
      const auto [a, b] = edges[f];
      if (a == u || a == v || b == u || b == v) out.graph.add_edge(base + e, base + f);
    }
  }
  return out;
}

}  // namespace sqcc

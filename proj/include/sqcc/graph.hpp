#ifndef SQCC_GRAPH_HPP
#define SQCC_GRAPH_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sqcc/bitrow.hpp"
#include "sqcc/error.hpp"

namespace sqcc {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;

/// Simple undirected graph on vertices 0..vertex_count-1.
///
/// Each vertex owns a bit row of its neighbours. Adjacency is kept symmetric
/// and irreflexive by the mutators; inserting an existing edge is a no-op.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t vertex_count)
      : rows_(vertex_count, BitRow(vertex_count)) {}

  std::size_t vertex_count() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  const BitRow& neighbors(Vertex v) const { return rows_.at(v); }
  std::size_t degree(Vertex v) const { return rows_.at(v).count(); }

  // Sorted lexicographically, u < v in every pair.
  std::vector<Edge> edges() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void check_pair(Vertex u, Vertex v) const;

  std::vector<BitRow> rows_;
};

/// Ordered list of disjoint nonempty vertex sets covering the vertex set.
struct PartitionWitness {
  std::vector<VertexSet> parts;

  std::size_t vertex_count() const noexcept;
  // part index of every vertex; throws InvalidInput unless this partitions 0..vertex_count-1
  std::vector<std::size_t> membership(std::size_t vertex_count) const;
};

SimpleGraph complete_graph(std::size_t n);
SimpleGraph path_graph(std::size_t n);
SimpleGraph cycle_graph(std::size_t n);
SimpleGraph graph_from_edges(std::size_t n, const std::vector<Edge>& edges);

/// K_{part_size * part_count}; vertex k of part i is i*part_size + k.
SimpleGraph complete_multipartite(std::size_t part_size, std::size_t part_count);
PartitionWitness equal_parts(std::size_t part_size, std::size_t part_count);

/// Distance-at-most-2 graph, built from neighbour-row unions.
SimpleGraph square(const SimpleGraph& g);

inline constexpr std::size_t kSquareOracleMaxVertices = 512;

/// Reference square via the dense product A + A*A with the diagonal cleared.
/// Throws CapacityError above kSquareOracleMaxVertices.
SimpleGraph square_oracle(const SimpleGraph& g);

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adjacency_matrix(const SimpleGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    a(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = Scalar(1);
    a(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) = Scalar(1);
  }
  return a;
}

/// Nonzero off-diagonal entries become edges. The matrix must be square and
/// symmetric in its zero pattern.
template <typename Derived>
SimpleGraph graph_from_matrix(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw InvalidInput("adjacency matrix is not square");
  using Scalar = typename Derived::Scalar;
  SimpleGraph g(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      const bool a = m(i, j) != Scalar(0);
      const bool b = m(j, i) != Scalar(0);
      if (a != b) throw InvalidInput("adjacency matrix is not symmetric");
      if (a) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return g;
}

struct InducedSubgraph {
  SimpleGraph graph;
  VertexSet original;  // new index -> vertex of the source graph
};

/// Vertices of the result follow the order of s. Duplicates in s are rejected.
InducedSubgraph induced_subgraph(const SimpleGraph& g, const VertexSet& s);

bool is_independent_set(const SimpleGraph& g, const VertexSet& s);
bool is_clique(const SimpleGraph& g, const VertexSet& s);

/// Every part independent and every cross-part pair adjacent.
/// Throws InvalidInput if w does not partition V(g).
bool is_complete_multipartite(const SimpleGraph& g, const PartitionWitness& w);

// Shared labelling of subdivision and total graph: original vertices keep
// their indices, then one element per edge (u,v), u<v, in lexicographic order.
struct ElementLabel {
  enum class Kind { kVertex, kEdge };
  Kind kind = Kind::kVertex;
  Vertex first = 0;
  Vertex second = 0;  // unused for kVertex

  std::string name() const;
  friend bool operator==(const ElementLabel&, const ElementLabel&) = default;
};

struct ElementGraph {
  SimpleGraph graph;
  std::vector<ElementLabel> labels;
};

ElementGraph subdivision(const SimpleGraph& g);
ElementGraph total_graph(const SimpleGraph& g);

}  // namespace sqcc

#endif  // SQCC_GRAPH_HPP

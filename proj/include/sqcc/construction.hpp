#ifndef SQCC_CONSTRUCTION_HPP
#define SQCC_CONSTRUCTION_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqcc/graph.hpp"

namespace sqcc {

/// v_{i,j} (kind P, i,j in 1..n) or w_{i,j} (kind Q, i in 1..n-1, j in 1..n).
struct VertexLabel {
  enum class Kind { P, Q };
  Kind kind = Kind::P;
  int first = 1;
  int second = 1;

  // "v_i_j" / "w_i_j"
  std::string name() const;
  static std::optional<VertexLabel> parse(std::string_view text);

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

inline VertexLabel v_label(int i, int j) { return {VertexLabel::Kind::P, i, j}; }
inline VertexLabel w_label(int i, int j) { return {VertexLabel::Kind::Q, i, j}; }

/// The counterexample graph on 2n^2 - n vertices.
///
/// Layout: v_{i,j} -> (i-1)n + (j-1), w_{i,j} -> n^2 + (i-1)n + (j-1).
/// Edges are the Latin-row edges w_{i,j} v_{k, L_i(j,k)} plus the cliques T_j.
struct ConstructedGraph {
  int n = 0;
  SimpleGraph graph;
  std::vector<VertexLabel> labels;  // indexed by vertex
  std::vector<VertexSet> p_sets;    // P_1..P_n
  std::vector<VertexSet> q_sets;    // Q_1..Q_{n-1}
  std::vector<VertexSet> t_sets;    // T_1..T_n

  Vertex index_of(const VertexLabel& label) const;
  Vertex v_index(int i, int j) const { return index_of(v_label(i, j)); }
  Vertex w_index(int i, int j) const { return index_of(w_label(i, j)); }

  // P_1..P_n then Q_1..Q_{n-1}: the claimed partite sets of the square.
  PartitionWitness square_parts() const;
  VertexSet p_union() const;
  VertexSet q_union() const;
};

ConstructedGraph construct_counterexample(int n);

/// (v_{1,L_i(j,1)}, ..., v_{n,L_i(j,n)}) in column order.
std::vector<VertexLabel> neighbors_of_w(int n, int i, int j);

/// Vertex indices of T_j = {v_{1,j}, ..., v_{n,j}}.
VertexSet t_set(const ConstructedGraph& gc, int j);

}  // namespace sqcc

#endif  // SQCC_CONSTRUCTION_HPP

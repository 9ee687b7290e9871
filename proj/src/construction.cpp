#include "sqcc/construction.hpp"

#include <charconv>

#include "sqcc/error.hpp"
#include "sqcc/latin.hpp"

namespace sqcc {

std::string VertexLabel::name() const {
  return std::string(kind == Kind::P ? "v_" : "w_") + std::to_string(first) + "_" +
         std::to_string(second);
}

std::optional<VertexLabel> VertexLabel::parse(std::string_view text) {
  if (text.size() < 5 || (text[0] != 'v' && text[0] != 'w') || text[1] != '_')
    return std::nullopt;
  const auto sep = text.find('_', 2);
  if (sep == std::string_view::npos) return std::nullopt;
  VertexLabel label{text[0] == 'v' ? Kind::P : Kind::Q, 0, 0};
  const auto a = text.substr(2, sep - 2);
  const auto b = text.substr(sep + 1);
  auto r1 = std::from_chars(a.data(), a.data() + a.size(), label.first);
  auto r2 = std::from_chars(b.data(), b.data() + b.size(), label.second);
  if (r1.ec != std::errc{} || r1.ptr != a.data() + a.size() || r2.ec != std::errc{} ||
      r2.ptr != b.data() + b.size() || a.empty() || b.empty())
    return std::nullopt;
  return label;
}

Vertex ConstructedGraph::index_of(const VertexLabel& label) const {
  const int max_first = label.kind == VertexLabel::Kind::P ? n : n - 1;
  if (label.first < 1 || label.first > max_first || label.second < 1 || label.second > n)
    throw InvalidParameter("label " + label.name() + " out of range for n = " + std::to_string(n));
  const auto base = label.kind == VertexLabel::Kind::P ? 0 : static_cast<Vertex>(n * n);
  return base + static_cast<Vertex>((label.first - 1) * n + (label.second - 1));
}

PartitionWitness ConstructedGraph::square_parts() const {
  PartitionWitness w;
  w.parts = p_sets;
  w.parts.insert(w.parts.end(), q_sets.begin(), q_sets.end());
  return w;
}

VertexSet ConstructedGraph::p_union() const {
  VertexSet out;
  for (const auto& s : p_sets) out.insert(out.end(), s.begin(), s.end());
  return out;
}

VertexSet ConstructedGraph::q_union() const {
  VertexSet out;
  for (const auto& s : q_sets) out.insert(out.end(), s.begin(), s.end());
  return out;
}

std::vector<VertexLabel> neighbors_of_w(int n, int i, int j) {
  const LatinSquare square = build_latin(n, i);
  if (j < 1 || j > n)
    throw InvalidParameter("row index j must lie in 1.." + std::to_string(n) + ", got " +
                           std::to_string(j));
  std::vector<VertexLabel> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) out.push_back(v_label(k, square(j, k)));
  return out;
}

ConstructedGraph construct_counterexample(int n) {
  const MolsFamily mols = build_mols_family(n);

  ConstructedGraph gc;
  gc.n = n;
  const auto count = static_cast<std::size_t>(2 * n * n - n);
  gc.graph = SimpleGraph(count);
  gc.labels.resize(count);
  gc.p_sets.resize(static_cast<std::size_t>(n));
  gc.q_sets.resize(static_cast<std::size_t>(n - 1));
  gc.t_sets.resize(static_cast<std::size_t>(n));

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const Vertex v = gc.v_index(i, j);
      gc.labels[v] = v_label(i, j);
      gc.p_sets[static_cast<std::size_t>(i - 1)].push_back(v);
      gc.t_sets[static_cast<std::size_t>(j - 1)].push_back(v);
    }
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n; ++j) {
      const Vertex w = gc.w_index(i, j);
      gc.labels[w] = w_label(i, j);
      gc.q_sets[static_cast<std::size_t>(i - 1)].push_back(w);
    }

  // Latin-row edges
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) gc.graph.add_edge(gc.w_index(i, j), gc.v_index(k, mols[i](j, k)));

  // clique edges inside each T_j
  for (const auto& t : gc.t_sets)
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = a + 1; b < t.size(); ++b) gc.graph.add_edge(t[a], t[b]);

  return gc;
}

VertexSet t_set(const ConstructedGraph& gc, int j) {
  if (j < 1 || j > gc.n)
    throw InvalidParameter("clique index must lie in 1.." + std::to_string(gc.n) + ", got " +
                           std::to_string(j));
  return gc.t_sets[static_cast<std::size_t>(j - 1)];
}

}  // namespace sqcc

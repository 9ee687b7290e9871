#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sqcc/error.hpp"
#include "sqcc/graph.hpp"

using namespace sqcc;

TEST_CASE("BitRow word-boundary behaviour") {
  BitRow r(130);
  r.set(0);
  r.set(63);
  r.set(64);
  r.set(129);
  CHECK(r.count() == 4);
  CHECK(r.find_first() == 0);
  CHECK(r.find_next(0) == 63);
  CHECK(r.find_next(64) == 129);
  CHECK(r.find_next(129) == BitRow::npos);
  CHECK(r.to_indices() == std::vector<std::size_t>{0, 63, 64, 129});

  BitRow f(130);
  f.fill();
  CHECK(f.count() == 130);
  CHECK(intersection_count(r, f) == 4);
  f.subtract(r);
  CHECK(f.count() == 126);
  CHECK_FALSE(intersects(f, r));
  CHECK(r.is_subset_of(r | f));
}

TEST_CASE("SimpleGraph mutators keep adjacency symmetric and loop-free") {
  SimpleGraph g(4);
  g.add_edge(0, 2);
  g.add_edge(2, 0);
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(2, 0));
  CHECK_THROWS_AS(g.add_edge(1, 1), InvalidInput);
  CHECK_THROWS_AS(g.add_edge(0, 4), InvalidInput);
  g.add_edge(3, 1);
  CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 3}});
  g.remove_edge(0, 2);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("square on small graphs") {
  CHECK(square(path_graph(3)) == complete_graph(3));
  CHECK(square(SimpleGraph(6)) == SimpleGraph(6));
  CHECK(square_oracle(path_graph(3)) == complete_graph(3));
  // C_5: every pair is at distance <= 2, confirmed by BFS
  CHECK(oracle::edge_total(oracle::distance_two(oracle::matrix_of(cycle_graph(5)))) == 10);
  CHECK(square_oracle(cycle_graph(5)) == complete_graph(5));
  CHECK(square(cycle_graph(5)) == complete_graph(5));
  CHECK(square(cycle_graph(6)).edge_count() == 12);
}

TEST_CASE("square agrees with the dense oracle and BFS on random graphs") {
  std::mt19937_64 rng(oracle::kDefaultSeed);
  std::uniform_int_distribution<std::size_t> size(0, 40);
  std::uniform_real_distribution<double> density(0.0, 0.4);
  for (int t = 0; t < 200; ++t) {
    const auto g = oracle::random_graph(rng, size(rng), density(rng));
    const auto sq = square(g);
    CHECK(sq == square_oracle(g));
    CHECK(oracle::matrix_of(sq) == oracle::distance_two(oracle::matrix_of(g)));
    for (const auto& [u, v] : g.edges()) CHECK(sq.has_edge(u, v));
  }
}

TEST_CASE("square_oracle size guard") {
  CHECK_THROWS_AS(square_oracle(SimpleGraph(kSquareOracleMaxVertices + 1)), CapacityError);
}

TEST_CASE("adjacency matrix round trip through Eigen") {
  const auto g = cycle_graph(7);
  const Eigen::MatrixXd a = adjacency_matrix<double>(g);
  CHECK(a.sum() == doctest::Approx(14.0));
  CHECK(graph_from_matrix(a) == g);
  Eigen::MatrixXi lopsided = Eigen::MatrixXi::Zero(3, 3);
  lopsided(0, 1) = 1;
  CHECK_THROWS_AS(graph_from_matrix(lopsided), InvalidInput);
}

TEST_CASE("induced_subgraph") {
  const auto tri = complete_graph(3);
  CHECK(induced_subgraph(tri, {}).graph.vertex_count() == 0);
  const auto two = induced_subgraph(tri, {2, 0});
  CHECK(two.graph == complete_graph(2));
  CHECK(two.original == VertexSet{2, 0});
  CHECK_THROWS_AS(induced_subgraph(tri, {0, 3}), InvalidInput);
  CHECK_THROWS_AS(induced_subgraph(tri, {1, 1}), InvalidInput);
}

TEST_CASE("independent sets and cliques") {
  const auto tri = complete_graph(3);
  CHECK(is_independent_set(tri, {1}));
  CHECK_FALSE(is_independent_set(tri, {0, 1, 2}));
  CHECK(is_clique(tri, {0, 1, 2}));
  CHECK(is_clique(path_graph(4), {2}));
  CHECK_FALSE(is_clique(path_graph(3), {0, 1, 2}));
  CHECK_THROWS_AS(is_clique(tri, {5}), InvalidInput);
  CHECK_THROWS_AS(is_independent_set(tri, {5}), InvalidInput);
}

TEST_CASE("is_clique matches the induced edge count") {
  std::mt19937_64 rng(oracle::kDefaultSeed + 1);
  for (int t = 0; t < 300; ++t) {
    const auto g = oracle::random_graph(rng, 9, 0.7);
    VertexSet s;
    for (Vertex v = 0; v < 9; ++v)
      if (rng() % 2) s.push_back(v);
    const auto k = s.size();
    CHECK(is_clique(g, s) == (induced_subgraph(g, s).graph.edge_count() == k * (k - 1) / 2));
  }
}

TEST_CASE("is_complete_multipartite") {
  CHECK(is_complete_multipartite(complete_graph(4), PartitionWitness{{{0}, {1}, {2}, {3}}}));
  const auto c5 = cycle_graph(5);
  CHECK_FALSE(is_complete_multipartite(c5, PartitionWitness{{{0, 2}, {1, 3, 4}}}));
  CHECK_FALSE(is_complete_multipartite(c5, PartitionWitness{{{0, 1, 2}, {3, 4}}}));
  CHECK(is_complete_multipartite(complete_multipartite(3, 4), equal_parts(3, 4)));
  CHECK_FALSE(is_complete_multipartite(complete_multipartite(3, 4), equal_parts(4, 3)));
  CHECK_THROWS_AS(is_complete_multipartite(c5, PartitionWitness{{{0, 1}, {1, 2, 3, 4}}}),
                  InvalidInput);
  CHECK_THROWS_AS(is_complete_multipartite(c5, PartitionWitness{{{0, 1}, {2, 3}}}), InvalidInput);
  CHECK_THROWS_AS(is_complete_multipartite(c5, PartitionWitness{{{0, 1, 2, 3, 4}, {}}}),
                  InvalidInput);
}

TEST_CASE("subdivision and total graph on small graphs") {
  const auto edge = complete_graph(2);
  CHECK(subdivision(edge).graph == graph_from_edges(3, {{0, 2}, {1, 2}}));
  CHECK(total_graph(edge).graph == complete_graph(3));
  CHECK(subdivision(SimpleGraph(4)).graph == SimpleGraph(4));
  CHECK(total_graph(SimpleGraph(4)).graph == SimpleGraph(4));

  const auto tri = complete_graph(3);
  const auto sub = subdivision(tri);
  CHECK(sub.graph.vertex_count() == 6);
  CHECK(sub.graph.edge_count() == 6);
  for (Vertex v = 0; v < 6; ++v) CHECK(sub.graph.degree(v) == 2);
  CHECK(sub.labels[3] == ElementLabel{ElementLabel::Kind::kEdge, 0, 1});
  CHECK(sub.labels[5] == ElementLabel{ElementLabel::Kind::kEdge, 1, 2});
  // connected 2-regular on 6 vertices: a 6-cycle
  CHECK(oracle::edge_total(oracle::distance_two(oracle::matrix_of(sub.graph))) == 12);

  const auto tot = total_graph(tri);
  CHECK(tot.graph.edge_count() == 12);
  for (Vertex v = 0; v < 6; ++v) CHECK(tot.graph.degree(v) == 4);
  CHECK(oracle::matrix_of(tot.graph) == oracle::total_by_definition(3, tri.edges()));
}

TEST_CASE("square of the subdivision is the total graph") {
  // exhaustive over all graphs on 5 vertices
  const std::size_t n = 5;
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
    SimpleGraph g(n);
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1U) g.add_edge(pairs[b].first, pairs[b].second);
    const auto tot = total_graph(g);
    REQUIRE(square(subdivision(g).graph) == tot.graph);
    REQUIRE(oracle::matrix_of(tot.graph) == oracle::total_by_definition(n, g.edges()));
  }
  std::mt19937_64 rng(oracle::kDefaultSeed + 2);
  for (int t = 0; t < 300; ++t) {
    const auto g = oracle::random_graph(rng, 7, 0.5);
    CHECK(square(subdivision(g).graph) == total_graph(g).graph);
  }
}

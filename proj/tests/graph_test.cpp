#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "rigclique/errors.hpp"
#include "rigclique/graph.hpp"
#include "rigclique/graph_io.hpp"

using namespace rigclique;

TEST_CASE("neighbors") {
  CHECK(neighbors(fixtures::path(3), 1) == VertexSet{0, 2});
  CHECK(neighbors(fixtures::complete(4), 0) == VertexSet{1, 2, 3});
  CHECK(neighbors(fixtures::empty(3), 2).empty());
  CHECK_THROWS_AS(neighbors(fixtures::path(3), 3), InputError);
}

TEST_CASE("neighborhood_of_set") {
  CHECK(neighborhood_of_set(fixtures::path(3), {0}) == VertexSet{1});
  CHECK(neighborhood_of_set(fixtures::complete(4), {0, 1}) == VertexSet{0, 1, 2, 3});
  const Edge two_edges[] = {{0, 1}, {2, 3}};
  CHECK(neighborhood_of_set(make_graph(4, two_edges), {0}) == VertexSet{1});
  CHECK_THROWS_AS(neighborhood_of_set(fixtures::path(3), {0, 7}), InputError);
}

TEST_CASE("common_neighborhood") {
  const Graph k4 = fixtures::complete(4);
  CHECK(common_neighborhood(k4, {0, 1}) == VertexSet{2, 3});
  CHECK(common_neighborhood(fixtures::path(3), {0, 2}) == VertexSet{1});
  CHECK(common_neighborhood(fixtures::path(3), {1}) == VertexSet{0, 2});
  CHECK(common_neighborhood(fixtures::cycle(5), {0, 1}).empty());
  CHECK(common_neighborhood(fixtures::path(3), {}).size() == 3);
}

TEST_CASE("induced_subgraph") {
  const auto k3 = induced_subgraph(fixtures::complete(4), {0, 1, 2});
  CHECK(k3.graph == fixtures::complete(3));
  CHECK(k3.to_original == std::vector<Vertex>{0, 1, 2});

  const auto e = induced_subgraph(fixtures::cycle(5), {3, 4});
  CHECK(e.graph.order() == 2);
  CHECK(e.graph.edge_count() == 1);
  CHECK(e.to_original == std::vector<Vertex>{3, 4});

  const auto none = induced_subgraph(fixtures::petersen(), {});
  CHECK(none.graph.order() == 0);
  CHECK(none.graph.edge_count() == 0);

  // local ids follow ascending original ids
  const auto p = induced_subgraph(fixtures::petersen(), {9, 0, 5});
  CHECK(p.to_original == std::vector<Vertex>{0, 5, 9});
  CHECK(p.graph.adjacent(0, 1));
  CHECK_FALSE(p.graph.adjacent(0, 2));
  CHECK_THROWS_AS(induced_subgraph(fixtures::path(3), {5}), InputError);
}

TEST_CASE("is_clique") {
  CHECK(is_clique(fixtures::complete(4), {0, 1, 2, 3}));
  CHECK_FALSE(is_clique(fixtures::path(3), {0, 1, 2}));
  CHECK(is_clique(fixtures::petersen(), {7}));
  CHECK(is_clique(fixtures::petersen(), {}));
  CHECK_THROWS_AS(is_clique(fixtures::path(3), {3}), InputError);
}

TEST_CASE("adjacency_matrix") {
  Eigen::MatrixXd k2(2, 2);
  k2 << 0, 1, 1, 0;
  CHECK(adjacency_matrix(fixtures::complete(2)) == k2);
  CHECK(adjacency_matrix(fixtures::empty(3)) == Eigen::MatrixXd::Zero(3, 3));
  Eigen::MatrixXd p3(3, 3);
  p3 << 0, 1, 0, 1, 0, 1, 0, 1, 0;
  CHECK(adjacency_matrix(fixtures::path(3)) == p3);
}

TEST_CASE("builder rejects bad edges and collapses repeats") {
  GraphBuilder b(3);
  CHECK(b.add_edge(0, 1));
  CHECK_FALSE(b.add_edge(1, 0));
  CHECK_THROWS_AS(b.add_edge(2, 2), InputError);
  CHECK_THROWS_AS(b.add_edge(0, 3), InputError);
  const Graph g = std::move(b).build();
  CHECK(g.edge_count() == 1);
  CHECK(edge_list(g) == std::vector<Edge>{{0, 1}});
}

TEST_CASE("bit rows span word boundaries") {
  GraphBuilder b(130);
  b.add_edge(0, 129);
  b.add_edge(63, 64);
  b.add_edge(64, 127);
  const Graph g = std::move(b).build();
  CHECK(g.words_per_row() == 3);
  CHECK(g.adjacent(129, 0));
  CHECK(neighbors(g, 64) == VertexSet{63, 127});
  CHECK(edge_list(g) == std::vector<Edge>{{0, 129}, {63, 64}, {64, 127}});
}

TEST_CASE("graph invariants on random graphs") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 1 + rng() % 90;
    const Graph g = fixtures::erdos_renyi(n, 0.3, rng);
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < n; ++v) {
      CHECK_FALSE(g.adjacent(v, v));
      CHECK_FALSE(neighbors(g, v).contains(v));
      degree_sum += g.degree(v);
      for (Vertex u = 0; u < n; ++u) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
    CHECK(degree_sum == 2 * g.edge_count());

    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    CHECK(induced_subgraph(g, VertexSet(all)).graph == g);

    const Eigen::MatrixXd a = adjacency_matrix(g);
    CHECK(a == a.transpose());
    CHECK(a.trace() == 0.0);

    std::vector<Vertex> pick;
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 4 == 0) pick.push_back(v);
    const VertexSet s(pick);
    const auto sub = induced_subgraph(g, s);
    CHECK(is_clique(g, s) == (2 * sub.graph.edge_count() == s.size() * (s.size() - 1)));
    CHECK(is_clique(g, s) == oracle::pairwise_clique(g, s));
  }
}

TEST_CASE("edge list round trip") {
  std::mt19937_64 rng(5);
  const Graph g = fixtures::erdos_renyi(70, 0.2, rng);
  std::stringstream ss;
  write_edge_list(ss, g);
  CHECK(read_edge_list(ss) == g);

  std::stringstream empty_graph("0 0\n");
  CHECK(read_edge_list(empty_graph).order() == 0);
}

TEST_CASE("edge list reader rejects malformed input") {
  const char* bad[] = {
      "3 1\n1 1\n",          // self-loop
      "3 2\n0 1\n1 0\n",     // duplicate, reversed
      "3 2\n0 1\n0 1\n",     // duplicate
      "3 1\n0 3\n",          // out of range
      "3 2\n0 1\n",          // too few edges
      "3 1\n0 1\n1 2\n",     // trailing data
      "x y\n",               // bad header
      "3 1\n0 -1\n",         // negative id
      "",
  };
  for (const char* text : bad) {
    std::stringstream ss(text);
    CHECK_THROWS_AS(read_edge_list(ss), InputError);
  }
}

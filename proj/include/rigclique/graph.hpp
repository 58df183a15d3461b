#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "rigclique/bitset.hpp"
#include "rigclique/vertex_set.hpp"

namespace rigclique {

/// Immutable undirected simple graph on vertices 0..n-1.
///
/// Adjacency is stored as packed bit rows, one row of words_per_row() words
/// per vertex, so pairwise tests are O(1) and neighbourhood intersections are
/// word-parallel. Instances are built through GraphBuilder and never change
/// afterwards, which makes them safe to share between worker threads.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_; }
  std::size_t words_per_row() const noexcept { return stride_; }

  bool adjacent(Vertex u, Vertex v) const { return bits::test(row(u), v); }
  std::size_t degree(Vertex v) const { return bits::count(row(v)); }

  /// Bit row of N(v); bit u is set iff {u, v} is an edge.
  std::span<const Word> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * stride_, stride_};
  }

  /// Throws InputError if v >= order().
  void check_vertex(Vertex v) const;
  void check_members(const VertexSet& s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::size_t edges_ = 0;
  std::vector<Word> bits_;
};

/// Mutable staging area for a Graph. Self-loops are rejected; repeated
/// edges collapse.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  std::size_t order() const noexcept { return n_; }

  /// Returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  /// Makes every pair of members adjacent.
  void add_clique(const VertexSet& members);

  Graph build() &&;

 private:
  std::span<Word> row(Vertex v) { return {bits_.data() + static_cast<std::size_t>(v) * stride_, stride_}; }

  std::size_t n_;
  std::size_t stride_;
  std::vector<Word> bits_;
};

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

Graph make_graph(std::size_t n, std::span<const Edge> edges);

/// Edges with u < v in lexicographic order.
std::vector<Edge> edge_list(const Graph& g);

VertexSet neighbors(const Graph& g, Vertex v);

/// N(S): vertices with at least one neighbour in s. May intersect s.
VertexSet neighborhood_of_set(const Graph& g, const VertexSet& s);

/// Z(S): vertices adjacent to every member of s (never includes s itself).
/// For empty s this is every vertex.
VertexSet common_neighborhood(const Graph& g, const VertexSet& s);

struct InducedSubgraph {
  Graph graph;
  /// to_original[i] is the id in the host graph of local vertex i.
  std::vector<Vertex> to_original;
};

/// G[s] with local ids assigned in ascending order of original id.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_clique(const Graph& g, const VertexSet& s);

/// Dense symmetric 0/1 matrix in vertex order 0..n-1.
Eigen::MatrixXd adjacency_matrix(const Graph& g);

BitSet to_bitset(const VertexSet& s, std::size_t n);
VertexSet to_vertex_set(const BitSet& b);

}  // namespace rigclique

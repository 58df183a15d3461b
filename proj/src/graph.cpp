#include "rigclique/graph.hpp"

#include <string>

#include "rigclique/errors.hpp"

namespace rigclique {

void Graph::check_vertex(Vertex v) const {
  if (v >= n_)
    throw InputError("vertex " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(n_));
}

void Graph::check_members(const VertexSet& s) const {
  if (!s.empty()) check_vertex(s.max());
}

GraphBuilder::GraphBuilder(std::size_t n) : n_(n), stride_(words_for(n)), bits_(n * stride_, 0) {}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  return bits::test({bits_.data() + static_cast<std::size_t>(u) * stride_, stride_}, v);
}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_)
    throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                     "} out of range for graph of order " + std::to_string(n_));
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) return false;
  bits::set(row(u), v);
  bits::set(row(v), u);
  return true;
}

void GraphBuilder::add_clique(const VertexSet& members) {
  if (members.empty()) return;
  if (members.max() >= n_)
    throw InputError("clique member " + std::to_string(members.max()) + " out of range");
  BitSet mask(n_);
  for (Vertex v : members) mask.set(v);
  for (Vertex v : members) {
    auto r = row(v);
    for (std::size_t w = 0; w < stride_; ++w) r[w] |= mask.words()[w];
    bits::reset(r, v);
  }
}

Graph GraphBuilder::build() && {
  Graph g;
  g.n_ = n_;
  g.stride_ = stride_;
  g.bits_ = std::move(bits_);
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < n_; ++v) degree_sum += g.degree(v);
  g.edges_ = degree_sum / 2;
  return g;
}

Graph make_graph(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& e : edges) b.add_edge(e.u, e.v);
  return std::move(b).build();
}

std::vector<Edge> edge_list(const Graph& g) {
  std::vector<Edge> out;
  out.reserve(g.edge_count());
  for (Vertex u = 0; u < g.order(); ++u) {
    bits::for_each_set(g.row(u), [&](std::size_t v) {
      if (v > u) out.push_back({u, static_cast<Vertex>(v)});
    });
  }
  return out;
}

VertexSet neighbors(const Graph& g, Vertex v) {
  g.check_vertex(v);
  std::vector<Vertex> out;
  out.reserve(g.degree(v));
  bits::for_each_set(g.row(v), [&](std::size_t u) { out.push_back(static_cast<Vertex>(u)); });
  return VertexSet(std::move(out));
}

VertexSet neighborhood_of_set(const Graph& g, const VertexSet& s) {
  g.check_members(s);
  BitSet acc(g.order());
  for (Vertex v : s) acc |= g.row(v);
  return to_vertex_set(acc);
}

VertexSet common_neighborhood(const Graph& g, const VertexSet& s) {
  g.check_members(s);
  BitSet acc(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) acc.set(v);
  for (Vertex v : s) acc &= g.row(v);
  return to_vertex_set(acc);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  g.check_members(s);
  InducedSubgraph out{.graph = {}, .to_original = s.members()};
  const std::size_t d = s.size();
  GraphBuilder b(d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto host_row = g.row(s[i]);
    for (std::size_t j = i + 1; j < d; ++j)
      if (bits::test(host_row, s[j])) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  out.graph = std::move(b).build();
  return out;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  g.check_members(s);
  if (s.size() <= 1) return true;
  BitSet mask = to_bitset(s, g.order());
  for (Vertex v : s) {
    // Every other member must be a neighbour of v.
    mask.reset(v);
    const bool ok = bits::is_subset(mask.words(), g.row(v));
    mask.set(v);
    if (!ok) return false;
  }
  return true;
}

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Vertex u = 0; u < g.order(); ++u)
    bits::for_each_set(g.row(u), [&](std::size_t v) { a(u, static_cast<Eigen::Index>(v)) = 1.0; });
  return a;
}

BitSet to_bitset(const VertexSet& s, std::size_t n) {
  BitSet b(n);
  for (Vertex v : s) {
    if (v >= n) throw InputError("vertex " + std::to_string(v) + " out of range");
    b.set(v);
  }
  return b;
}

VertexSet to_vertex_set(const BitSet& b) {
  std::vector<Vertex> out;
  out.reserve(b.count());
  b.for_each([&](std::size_t v) { out.push_back(static_cast<Vertex>(v)); });
  return VertexSet(std::move(out));
}

}  // namespace rigclique

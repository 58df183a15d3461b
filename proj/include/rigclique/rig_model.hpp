#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rigclique/graph.hpp"
#include "rigclique/vertex_set.hpp"

namespace rigclique {

/// Parameters of the random intersection graph model: n vertices, m = round(n^alpha)
/// labels, each (vertex, label) membership drawn with probability p.
class RigParams {
 public:
  /// Throws InputError unless n >= 1, 0 < alpha <= 1 and 0 <= p <= 1.
  RigParams(std::size_t n, double alpha, double p);

  std::size_t n() const noexcept { return n_; }
  double alpha() const noexcept { return alpha_; }
  double p() const noexcept { return p_; }
  std::size_t m() const noexcept { return m_; }

 private:
  std::size_t n_;
  double alpha_;
  double p_;
  std::size_t m_;
};

/// round(n^alpha) with halves rounded up, never below 1.
std::size_t label_count(std::size_t n, double alpha);

struct Seed {
  std::uint64_t master_seed = 0;
  std::uint64_t trial_index = 0;
  friend bool operator==(const Seed&, const Seed&) = default;
};

/// Per-label vertex sets L_l over n vertices. The per-vertex label sets S_v are
/// derived on demand.
class LabelRepresentation {
 public:
  LabelRepresentation() = default;
  /// Throws InputError if any member is >= n.
  LabelRepresentation(std::size_t n, std::vector<VertexSet> label_sets);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t label_count() const noexcept { return labels_.size(); }
  const VertexSet& label(std::size_t l) const { return labels_.at(l); }
  const std::vector<VertexSet>& label_sets() const noexcept { return labels_; }

  /// S_v for every vertex, as sorted label ids.
  std::vector<std::vector<std::uint32_t>> vertex_label_sets() const;

  friend bool operator==(const LabelRepresentation&, const LabelRepresentation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<VertexSet> labels_;
};

struct RigSample {
  Graph graph;
  LabelRepresentation labels;
};

/// Draws one G_{n,m,p} instance. Memberships are drawn vertex-major from a
/// stream keyed by (seed.master_seed, seed.trial_index, substream), so equal
/// inputs give identical samples on any thread.
RigSample sample_rig(const RigParams& params, Seed seed, std::uint32_t substream = 0);

/// Graph with an edge {u, v} iff some label contains both u and v.
Graph project_labels(const LabelRepresentation& rep, std::size_t n);

struct HeaviestLabel {
  std::size_t label;
  VertexSet members;
};

/// Label with the most members, smallest id on ties. Empty when every label set
/// is empty (the maximum clique is then a single vertex).
std::optional<HeaviestLabel> heaviest_label(const LabelRepresentation& rep);

/// Probability 1 - (1 - p^2)^m that a fixed pair of vertices is adjacent.
double edge_probability(const RigParams& params);

/// alpha < 1 and p >= m^(-2/3). Informational only.
bool is_dense_regime(const RigParams& params);

}  // namespace rigclique

#include "rigclique/rig_model.hpp"

#include <cmath>
#include <random>
#include <string>

#include "rigclique/errors.hpp"

namespace rigclique {

std::size_t label_count(std::size_t n, double alpha) {
  const double raw = std::pow(static_cast<double>(n), alpha);
  const auto m = static_cast<std::size_t>(std::floor(raw + 0.5));
  return m < 1 ? 1 : m;
}

RigParams::RigParams(std::size_t n, double alpha, double p) : n_(n), alpha_(alpha), p_(p), m_(0) {
  if (n < 1) throw InputError("RigParams: n must be >= 1");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw InputError("RigParams: alpha must lie in (0, 1], got " + std::to_string(alpha));
  if (!(p >= 0.0 && p <= 1.0))
    throw InputError("RigParams: p must lie in [0, 1], got " + std::to_string(p));
  m_ = label_count(n, alpha);
}

LabelRepresentation::LabelRepresentation(std::size_t n, std::vector<VertexSet> label_sets)
    : n_(n), labels_(std::move(label_sets)) {
  for (std::size_t l = 0; l < labels_.size(); ++l) {
    if (!labels_[l].empty() && labels_[l].max() >= n)
      throw InputError("label " + std::to_string(l) + " has member " +
                       std::to_string(labels_[l].max()) + " >= n = " + std::to_string(n));
  }
}

std::vector<std::vector<std::uint32_t>> LabelRepresentation::vertex_label_sets() const {
  std::vector<std::vector<std::uint32_t>> out(n_);
  for (std::size_t l = 0; l < labels_.size(); ++l)
    for (Vertex v : labels_[l]) out[v].push_back(static_cast<std::uint32_t>(l));
  return out;
}

namespace {

std::mt19937_64 make_stream(Seed seed, std::uint32_t substream) {
  // seed_seq's mixing is fully specified by the standard, so the stream is
  // the same on every conforming implementation.
  std::seed_seq seq{static_cast<std::uint32_t>(seed.master_seed),
                    static_cast<std::uint32_t>(seed.master_seed >> 32),
                    static_cast<std::uint32_t>(seed.trial_index),
                    static_cast<std::uint32_t>(seed.trial_index >> 32), substream};
  return std::mt19937_64(seq);
}

// Uniform in [0, 1) from the top 53 bits; std::bernoulli_distribution is not
// reproducible across standard libraries.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

RigSample sample_rig(const RigParams& params, Seed seed, std::uint32_t substream) {
  auto rng = make_stream(seed, substream);
  const std::size_t n = params.n();
  const std::size_t m = params.m();
  const double p = params.p();

  std::vector<std::vector<Vertex>> members(m);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t l = 0; l < m; ++l)
      if (unit_uniform(rng) < p) members[l].push_back(static_cast<Vertex>(v));

  std::vector<VertexSet> sets;
  sets.reserve(m);
  for (auto& mem : members) sets.emplace_back(std::move(mem));
  LabelRepresentation rep(n, std::move(sets));
  Graph g = project_labels(rep, n);
  return {std::move(g), std::move(rep)};
}

Graph project_labels(const LabelRepresentation& rep, std::size_t n) {
  GraphBuilder b(n);
  for (const auto& members : rep.label_sets()) {
    if (!members.empty() && members.max() >= n)
      throw InputError("label member " + std::to_string(members.max()) + " >= n");
    b.add_clique(members);
  }
  return std::move(b).build();
}

std::optional<HeaviestLabel> heaviest_label(const LabelRepresentation& rep) {
  std::optional<std::size_t> best;
  for (std::size_t l = 0; l < rep.label_count(); ++l) {
    if (rep.label(l).empty()) continue;
    if (!best || rep.label(l).size() > rep.label(*best).size()) best = l;
  }
  if (!best) return std::nullopt;
  return HeaviestLabel{*best, rep.label(*best)};
}

double edge_probability(const RigParams& params) {
  const double p = params.p();
  // 1 - (1 - p^2)^m, evaluated without cancellation for small p.
  return -std::expm1(static_cast<double>(params.m()) * std::log1p(-p * p));
}

bool is_dense_regime(const RigParams& params) {
  if (params.alpha() >= 1.0) return false;
  const double bound = std::pow(static_cast<double>(params.m()), -2.0 / 3.0);
  return params.p() > 0.0 && params.p() >= bound;
}

}  // namespace rigclique

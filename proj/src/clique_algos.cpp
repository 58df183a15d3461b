#include "rigclique/clique_algos.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "rigclique/errors.hpp"

namespace rigclique {

namespace {

CliqueResult finish(const Graph& g, VertexSet vertices) {
  const bool ok = is_clique(g, vertices);
  return {std::move(vertices), ok};
}

// True iff the members of `mask` are pairwise adjacent in g.
bool mask_is_clique(const Graph& g, const BitSet& mask) {
  bool ok = true;
  BitSet others = mask;
  mask.for_each([&](std::size_t v) {
    if (!ok) return;
    others.reset(v);
    ok = bits::is_subset(others.words(), g.row(static_cast<Vertex>(v)));
    others.set(v);
  });
  return ok;
}

void check_witness(const Graph& g, const VertexSet& witness, std::size_t k, const char* who) {
  if (witness.size() != k)
    throw InputError(std::string(who) + ": seeded set has " + std::to_string(witness.size()) +
                     " members, expected k = " + std::to_string(k));
  g.check_members(witness);
  if (!is_clique(g, witness)) throw InputError(std::string(who) + ": seeded set is not a clique");
}

void clear_through(BitSet& b, std::size_t v) {
  auto w = b.words();
  const std::size_t last = v / kWordBits;
  for (std::size_t i = 0; i < last; ++i) w[i] = 0;
  const std::size_t shift = v % kWordBits;
  w[last] &= (shift == kWordBits - 1) ? Word{0} : ~((Word{2} << shift) - 1);
}

bool enumerate(const Graph& g, std::size_t k, std::vector<Vertex>& current, const BitSet& cand,
               std::size_t& visited, std::optional<std::size_t> cap,
               const std::function<bool(const VertexSet&)>& visit) {
  std::vector<Vertex> members;
  members.reserve(cand.count());
  cand.for_each([&](std::size_t v) { members.push_back(static_cast<Vertex>(v)); });
  for (Vertex v : members) {
    if (cap && visited >= *cap) return false;
    current.push_back(v);
    bool keep_going = true;
    if (current.size() == k) {
      ++visited;
      keep_going = visit(VertexSet(current));
    } else {
      BitSet next = cand;
      next &= g.row(v);
      clear_through(next, v);
      if (next.count() + current.size() >= k)
        keep_going = enumerate(g, k, current, next, visited, cap, visit);
    }
    current.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

std::size_t for_each_k_clique(const Graph& g, std::size_t k, std::optional<std::size_t> cap,
                              const std::function<bool(const VertexSet&)>& visit) {
  if (k == 0) throw InputError("for_each_k_clique: k must be >= 1");
  BitSet all(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) all.set(v);
  std::vector<Vertex> current;
  std::size_t visited = 0;
  enumerate(g, k, current, all, visited, cap, visit);
  return visited;
}

void SpectralConfig::validate() const {
  if (k < 1) throw InputError("SpectralConfig: k must be >= 1");
  if (t < k)
    throw InputError("SpectralConfig: need k <= t, got k = " + std::to_string(k) +
                     ", t = " + std::to_string(t));
  if (threshold_den == 0 || threshold_num == 0 || threshold_num > threshold_den)
    throw InputError("SpectralConfig: threshold fraction must lie in (0, 1]");
  if (seeded_set && seeded_set->size() != k)
    throw InputError("SpectralConfig: seeded set must have exactly k members");
  if (!(eigen_tolerance > 0.0)) throw InputError("SpectralConfig: eigen tolerance must be positive");
}

std::size_t SpectralConfig::neighbor_threshold() const {
  const std::size_t num = static_cast<std::size_t>(threshold_num) * t;
  return (num + threshold_den - 1) / threshold_den;
}

VertexSet spectral_candidate_clique(const Graph& g, const VertexSet& witness,
                                    const SpectralConfig& cfg,
                                    std::optional<SpectrumSummary>* spectrum) {
  cfg.validate();
  check_witness(g, witness, cfg.k, "spectral_max_clique");

  const VertexSet around = cfg.neighborhood == WitnessNeighborhood::Union
                               ? neighborhood_of_set(g, witness)
                               : common_neighborhood(g, witness);
  const auto h = induced_subgraph(g, set_union(witness, around));
  const std::size_t d = h.graph.order();

  std::vector<Vertex> order;
  if (d >= 2) {
    const SpectralResult eig = second_eigenpair(adjacency_matrix(h.graph), cfg.eigen_tolerance);
    order = rank_by_x2(eig);
    if (spectrum) *spectrum = SpectrumSummary{eig.lambda1, eig.lambda2, eig.residual, d};
  } else {
    order.resize(d);
    std::iota(order.begin(), order.end(), Vertex{0});
    if (spectrum) spectrum->reset();
  }

  BitSet top(d);
  for (std::size_t i = 0; i < std::min(cfg.t, d); ++i) top.set(order[i]);

  const std::size_t need = cfg.neighbor_threshold();
  BitSet compatible(d);  // adjacent to every vertex of Q so far
  for (std::size_t v = 0; v < d; ++v) compatible.set(v);
  if (cfg.scan_order == ScanOrder::VertexId) std::iota(order.begin(), order.end(), Vertex{0});
  std::vector<Vertex> q;
  for (Vertex v : order) {
    if (!compatible.test(v)) continue;
    if (bits::and_count(h.graph.row(v), top) < need) continue;
    q.push_back(h.to_original[v]);
    compatible &= h.graph.row(v);
  }
  return VertexSet(std::move(q));
}

SpectralRun spectral_max_clique_run(const Graph& g, const SpectralConfig& cfg) {
  cfg.validate();
  if (g.order() == 0) throw InputError("spectral_max_clique: graph is empty");

  SpectralRun run;
  std::optional<VertexSet> best;
  std::optional<VertexSet> first_witness;

  auto evaluate = [&](const VertexSet& witness) {
    if (!first_witness) first_witness = witness;
    ++run.candidates_evaluated;
    std::optional<SpectrumSummary> spectrum;
    VertexSet q;
    try {
      q = spectral_candidate_clique(g, witness, cfg, &spectrum);
    } catch (const NumericError&) {
      ++run.candidates_skipped;
      return true;
    }
    if (!best || q.size() > best->size()) {
      best = std::move(q);
      run.spectrum = spectrum;
    }
    return true;
  };

  if (cfg.seeded_set) {
    check_witness(g, *cfg.seeded_set, cfg.k, "spectral_max_clique");
    evaluate(*cfg.seeded_set);
  } else {
    for_each_k_clique(g, cfg.k, cfg.candidate_cap, evaluate);
  }

  run.best_candidate_size = best ? best->size() : 0;
  VertexSet answer;
  if (best && !best->empty())
    answer = std::move(*best);
  else if (first_witness)
    answer = *first_witness;
  run.clique = finish(g, std::move(answer));
  return run;
}

CliqueResult spectral_max_clique(const Graph& g, const SpectralConfig& cfg) {
  return spectral_max_clique_run(g, cfg).clique;
}

CliqueResult greedy_clique(const Graph& g) {
  if (g.order() == 0) throw InputError("greedy_clique: graph is empty");
  std::vector<std::size_t> degree(g.order());
  for (Vertex v = 0; v < g.order(); ++v) degree[v] = g.degree(v);
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return degree[a] > degree[b]; });

  BitSet compatible(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) compatible.set(v);
  std::vector<Vertex> q;
  for (Vertex v : order) {
    if (!compatible.test(v)) continue;
    q.push_back(v);
    compatible &= g.row(v);
  }
  return finish(g, VertexSet(std::move(q)));
}

CliqueResult mono_clique(const Graph& g) {
  if (g.order() == 0) throw InputError("mono_clique: graph is empty");
  const auto edges = edge_list(g);
  std::vector<std::size_t> common(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i)
    common[i] = bits::and_count(g.row(edges[i].u), g.row(edges[i].v));
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return common[a] > common[b]; });

  for (std::size_t idx : order) {
    const auto [u, v] = edges[idx];
    BitSet s(g.order());
    s |= g.row(u);
    s &= g.row(v);
    if (!mask_is_clique(g, s)) continue;
    s.set(u);
    s.set(v);
    return finish(g, to_vertex_set(s));
  }
  return finish(g, VertexSet{0});
}

CliqueResult maximum_clique_bt06(const Graph& g, std::size_t k,
                                 const std::optional<VertexSet>& seeded_set,
                                 const Bt06Options& options) {
  if (k < 1) throw InputError("maximum_clique_bt06: k must be >= 1");
  const std::size_t n = g.order();

  struct Recorded {
    BitSet mask;
    std::size_t size;
  };
  std::vector<Recorded> recorded;
  std::optional<VertexSet> first_witness;

  auto evaluate = [&](const VertexSet& u) {
    if (!first_witness) first_witness = u;
    for (const auto& r : recorded) {
      if (std::all_of(u.begin(), u.end(), [&](Vertex x) { return r.mask.test(x); })) return true;
    }
    BitSet z(n);
    z |= g.row(u[0]);
    for (std::size_t i = 1; i < u.size(); ++i) z &= g.row(u[i]);
    if (!mask_is_clique(g, z)) return true;
    if (options.output == Bt06Output::ZUnionU)
      for (Vertex x : u) z.set(x);
    const std::size_t size = z.count();
    if (size == 0) return true;  // empty Z in Z-only mode
    recorded.push_back({std::move(z), size});
    return true;
  };

  if (seeded_set) {
    check_witness(g, *seeded_set, k, "maximum_clique_bt06");
    evaluate(*seeded_set);
  } else {
    for_each_k_clique(g, k, options.candidate_cap, evaluate);
  }

  if (recorded.empty()) return finish(g, first_witness.value_or(VertexSet{}));

  std::vector<std::size_t> order(recorded.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return recorded[a].size > recorded[b].size; });

  // Edge-coverage filter: accept cliques, largest first, while each still
  // contributes an uncovered edge.
  const std::size_t stride = g.words_per_row();
  std::vector<Word> covered(n * stride, 0);
  std::vector<std::size_t> accepted;
  std::vector<Word> scratch(stride);
  for (std::size_t idx : order) {
    const BitSet& z = recorded[idx].mask;
    bool adds_edge = false;
    z.for_each([&](std::size_t v) {
      if (adds_edge) return;
      for (std::size_t w = 0; w < stride; ++w) {
        const Word edges = g.row(static_cast<Vertex>(v))[w] & z.words()[w];
        if (edges & ~covered[v * stride + w]) {
          adds_edge = true;
          return;
        }
      }
    });
    if (!adds_edge) continue;
    z.for_each([&](std::size_t v) {
      for (std::size_t w = 0; w < stride; ++w)
        covered[v * stride + w] |= g.row(static_cast<Vertex>(v))[w] & z.words()[w];
    });
    accepted.push_back(idx);
  }

  // Edgeless candidates never pass the filter; fall back to the largest recorded.
  const std::size_t pick = accepted.empty() ? order.front() : accepted.front();
  return finish(g, to_vertex_set(recorded[pick].mask));
}

namespace {

using Mask = std::uint64_t;

struct ExactSearch {
  std::vector<Mask> adj;
  std::vector<Vertex> current;
  std::vector<Vertex> best;

  void expand(Mask candidates) {
    // Greedy colouring gives each vertex an upper bound on the clique it can
    // still complete.
    std::vector<Vertex> order;
    std::vector<std::size_t> colour;
    Mask uncoloured = candidates;
    std::size_t c = 0;
    while (uncoloured) {
      ++c;
      Mask available = uncoloured;
      while (available) {
        const auto v = static_cast<Vertex>(std::countr_zero(available));
        available &= ~adj[v] & ~(Mask{1} << v);
        uncoloured &= ~(Mask{1} << v);
        order.push_back(v);
        colour.push_back(c);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + colour[i] <= best.size()) return;
      const Vertex v = order[i];
      current.push_back(v);
      const Mask next = candidates & adj[v];
      if (next == 0) {
        if (current.size() > best.size()) best = current;
      } else {
        expand(next);
      }
      current.pop_back();
      candidates &= ~(Mask{1} << v);
    }
  }
};

}  // namespace

CliqueResult exact_max_clique(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kExactCliqueLimit)
    throw InputError("exact_max_clique: graph has " + std::to_string(n) +
                     " vertices, limit is " + std::to_string(kExactCliqueLimit));
  if (n == 0) return {VertexSet{}, true};
  ExactSearch search;
  search.adj.resize(n);
  for (Vertex v = 0; v < n; ++v) search.adj[v] = g.row(v)[0];
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  search.expand(all);
  return finish(g, VertexSet(search.best));
}

}  // namespace rigclique

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rigclique/clique_algos.hpp"
#include "rigclique/errors.hpp"
#include "rigclique/rig_model.hpp"

using namespace rigclique;

namespace {

// K_6 on 0..5 plus 4 isolated vertices.
Graph k6_plus_isolated() {
  GraphBuilder b(10);
  b.add_clique({0, 1, 2, 3, 4, 5});
  return std::move(b).build();
}

SpectralConfig seeded(std::size_t k, std::size_t t, VertexSet s) {
  SpectralConfig cfg;
  cfg.k = k;
  cfg.t = t;
  cfg.seeded_set = std::move(s);
  return cfg;
}

}  // namespace

TEST_CASE("SpectralConfig validation and threshold") {
  SpectralConfig cfg;
  cfg.k = 2;
  cfg.t = 6;
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.neighbor_threshold() == 5);  // ceil(4.5)
  cfg.t = 8;
  CHECK(cfg.neighbor_threshold() == 6);
  cfg.t = 1;
  CHECK_THROWS_AS(cfg.validate(), InputError);
  cfg.t = 6;
  cfg.threshold_num = 0;
  CHECK_THROWS_AS(cfg.validate(), InputError);
  cfg.threshold_num = 5;
  CHECK_THROWS_AS(cfg.validate(), InputError);
  cfg.threshold_num = 3;
  cfg.seeded_set = VertexSet{1, 2, 3};
  CHECK_THROWS_AS(cfg.validate(), InputError);
  cfg.k = 0;
  cfg.seeded_set.reset();
  CHECK_THROWS_AS(cfg.validate(), InputError);
}

TEST_CASE("spectral recovers K6 next to isolated vertices") {
  const Graph g = k6_plus_isolated();
  for (auto hood : {WitnessNeighborhood::Common, WitnessNeighborhood::Union}) {
    for (auto order : {ScanOrder::VertexId, ScanOrder::SpectralRank}) {
      auto cfg = seeded(2, 6, {0, 1});
      cfg.neighborhood = hood;
      cfg.scan_order = order;
      const auto r = spectral_max_clique(g, cfg);
      CHECK(r.verified);
      CHECK(r.vertices == VertexSet{0, 1, 2, 3, 4, 5});
    }
  }
}

TEST_CASE("spectral on a single vertex returns it") {
  const auto r = spectral_max_clique(fixtures::empty(1), seeded(1, 1, {0}));
  CHECK(r.verified);
  CHECK(r.vertices == VertexSet{0});
}

TEST_CASE("spectral rejects a non-clique seed and an empty graph") {
  CHECK_THROWS_AS(spectral_max_clique(fixtures::path(3), seeded(2, 2, {0, 2})), InputError);
  CHECK_THROWS_AS(spectral_max_clique(fixtures::path(3), seeded(2, 2, {0, 5})), InputError);
  CHECK_THROWS_AS(spectral_max_clique(fixtures::empty(0), seeded(1, 1, {0})), InputError);
}

TEST_CASE("spectral seeded run equals its single candidate") {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 25; ++rep) {
    const auto s = sample_rig(RigParams(120, 1.0 / 3.0, 0.15), {77, static_cast<std::uint64_t>(rep)});
    const auto heavy = heaviest_label(s.labels);
    if (!heavy || heavy->members.size() < 3) continue;
    const VertexSet witness{heavy->members[0], heavy->members[1], heavy->members[2]};
    const auto cfg = seeded(3, 18, witness);
    const auto run = spectral_max_clique_run(s.graph, cfg);
    const auto single = spectral_candidate_clique(s.graph, witness, cfg);
    CHECK(run.candidates_evaluated == 1);
    CHECK(run.clique.verified);
    CHECK(run.clique.vertices == (single.empty() ? witness : single));
    CHECK(is_clique(s.graph, single));
  }
}

TEST_CASE("spectral unseeded result dominates every candidate") {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 15; ++rep) {
    const Graph g = fixtures::erdos_renyi(24, 0.45, rng);
    SpectralConfig cfg;
    cfg.k = 2;
    cfg.t = 6;
    const auto run = spectral_max_clique_run(g, cfg);
    CHECK(run.clique.verified);
    std::size_t best = 0;
    std::size_t count = 0;
    for_each_k_clique(g, 2, std::nullopt, [&](const VertexSet& s) {
      best = std::max(best, spectral_candidate_clique(g, s, cfg).size());
      ++count;
      return true;
    });
    CHECK(run.candidates_evaluated + run.candidates_skipped == count);
    CHECK(run.best_candidate_size == best);
    CHECK(run.clique.vertices.size() >= best);
  }
}

TEST_CASE("candidate cap bounds enumeration") {
  SpectralConfig cfg;
  cfg.k = 2;
  cfg.t = 8;
  cfg.candidate_cap = 4;
  const auto run = spectral_max_clique_run(fixtures::complete(8), cfg);
  CHECK(run.candidates_evaluated == 4);
  CHECK(run.clique.vertices.size() == 8);
}

TEST_CASE("greedy_clique") {
  CHECK(greedy_clique(fixtures::complete(4)).vertices == VertexSet{0, 1, 2, 3});
  CHECK(greedy_clique(fixtures::star(3)).vertices == VertexSet{0, 1});
  CHECK(greedy_clique(fixtures::path(3)).vertices == VertexSet{0, 1});
  CHECK(greedy_clique(fixtures::empty(3)).vertices == VertexSet{0});
  CHECK_THROWS_AS(greedy_clique(fixtures::empty(0)), InputError);

  std::mt19937_64 rng(4);
  const Graph g = fixtures::erdos_renyi(60, 0.4, rng);
  CHECK(greedy_clique(g).vertices == greedy_clique(g).vertices);
}

TEST_CASE("mono_clique") {
  CHECK(mono_clique(fixtures::complete(4)).vertices == VertexSet{0, 1, 2, 3});
  const auto c5 = mono_clique(fixtures::cycle(5));
  CHECK(c5.vertices == VertexSet{0, 1});
  CHECK(mono_clique(fixtures::empty(3)).vertices == VertexSet{0});

  // edge {2,3} has D = 2 but its common neighbourhood {0,1} is not a clique;
  // edges of the triangle 0-1-2 come next and qualify
  GraphBuilder b(5);
  b.add_edge(0, 2);
  b.add_edge(0, 3);
  b.add_edge(1, 2);
  b.add_edge(1, 3);
  b.add_edge(2, 3);
  b.add_edge(3, 4);
  const auto r = mono_clique(std::move(b).build());
  CHECK(r.verified);
  CHECK(r.vertices.size() == 3);
}

TEST_CASE("maximum_clique_bt06") {
  CHECK(maximum_clique_bt06(fixtures::complete(4), 2, VertexSet{0, 1}).vertices == VertexSet{0, 1, 2, 3});

  const auto p3 = maximum_clique_bt06(fixtures::path(3), 1, std::nullopt);
  CHECK(p3.verified);
  CHECK(p3.vertices.size() == 2);
  // the seeded middle vertex alone has an incomplete Z and falls back to U
  CHECK(maximum_clique_bt06(fixtures::path(3), 1, VertexSet{1}).vertices == VertexSet{1});

  for (Vertex v = 0; v < 5; ++v) {
    const VertexSet edge{v, static_cast<Vertex>((v + 1) % 5)};
    CHECK(maximum_clique_bt06(fixtures::cycle(5), 2, edge).vertices == edge);
  }

  const Bt06Options z_only{Bt06Output::ZOnly, std::nullopt};
  CHECK(maximum_clique_bt06(fixtures::complete(4), 2, VertexSet{0, 1}, z_only).vertices == VertexSet{2, 3});
  // every Z is empty on an edgeless graph; the witness is returned instead
  CHECK(maximum_clique_bt06(fixtures::empty(4), 1, std::nullopt, z_only).vertices == VertexSet{0});
  CHECK(maximum_clique_bt06(fixtures::cycle(5), 2, VertexSet{1, 2}, z_only).vertices == VertexSet{1, 2});

  CHECK_THROWS_AS(maximum_clique_bt06(fixtures::path(3), 2, VertexSet{0, 2}), InputError);
  CHECK_THROWS_AS(maximum_clique_bt06(fixtures::path(3), 2, VertexSet{0}), InputError);
  CHECK_THROWS_AS(maximum_clique_bt06(fixtures::path(3), 0, std::nullopt), InputError);
}

TEST_CASE("bt06 coverage filter prefers the larger of overlapping cliques") {
  // K5 on 0..4 and a triangle 4-5-6 sharing vertex 4
  GraphBuilder b(7);
  b.add_clique({0, 1, 2, 3, 4});
  b.add_clique({4, 5, 6});
  const auto r = maximum_clique_bt06(std::move(b).build(), 1, std::nullopt);
  CHECK(r.vertices == VertexSet{0, 1, 2, 3, 4});
}

TEST_CASE("exact_max_clique") {
  CHECK(exact_max_clique(fixtures::complete(7)).vertices.size() == 7);
  CHECK(exact_max_clique(fixtures::cycle(5)).vertices.size() == 2);
  CHECK(oracle::brute_force_clique_number(fixtures::petersen()) == 2);
  CHECK(exact_max_clique(fixtures::petersen()).vertices.size() == 2);
  CHECK(exact_max_clique(fixtures::empty(4)).vertices.size() == 1);
  CHECK_THROWS_AS(exact_max_clique(fixtures::empty(65)), InputError);

  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t n = 1 + rng() % 18;
    const Graph g = fixtures::erdos_renyi(n, 0.2 + 0.06 * (rep % 12), rng);
    const auto r = exact_max_clique(g);
    CHECK(r.verified);
    CHECK(oracle::pairwise_clique(g, r.vertices));
    CHECK(r.vertices.size() == oracle::brute_force_clique_number(g));
  }
  const Graph big = fixtures::erdos_renyi(64, 0.5, rng);
  CHECK(oracle::pairwise_clique(big, exact_max_clique(big).vertices));
}

TEST_CASE("for_each_k_clique enumerates lexicographically") {
  std::vector<VertexSet> seen;
  const auto count = for_each_k_clique(fixtures::complete(4), 2, std::nullopt, [&](const VertexSet& s) {
    seen.push_back(s);
    return true;
  });
  CHECK(count == 6);
  CHECK(seen.front() == VertexSet{0, 1});
  CHECK(seen.back() == VertexSet{2, 3});
  CHECK(std::is_sorted(seen.begin(), seen.end()));

  CHECK(for_each_k_clique(fixtures::petersen(), 3, std::nullopt, [](const VertexSet&) { return true; }) == 0);
  CHECK(for_each_k_clique(fixtures::complete(6), 3, 5, [](const VertexSet&) { return true; }) == 5);
  CHECK(for_each_k_clique(fixtures::complete(6), 3, std::nullopt, [](const VertexSet&) { return false; }) == 1);
}

TEST_CASE("every algorithm is sound and bounded by the exact answer") {
  std::mt19937_64 rng(1234);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t n = 2 + rng() % 30;
    const Graph g = fixtures::erdos_renyi(n, 0.15 + 0.1 * (rep % 7), rng);
    const std::size_t omega = exact_max_clique(g).vertices.size();
    SpectralConfig cfg;
    cfg.k = 1;
    cfg.t = std::max<std::size_t>(2, n / 4);
    const CliqueResult results[] = {spectral_max_clique(g, cfg), greedy_clique(g), mono_clique(g),
                                    maximum_clique_bt06(g, 1, std::nullopt)};
    for (const auto& r : results) {
      CHECK(r.verified);
      CHECK(oracle::pairwise_clique(g, r.vertices));
      CHECK(r.vertices.size() <= omega);
      CHECK_FALSE(r.vertices.empty());
    }
  }
}

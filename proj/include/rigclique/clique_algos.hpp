#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "rigclique/graph.hpp"
#include "rigclique/spectral.hpp"
#include "rigclique/vertex_set.hpp"

namespace rigclique {

struct CliqueResult {
  VertexSet vertices;  // original graph ids
  bool verified = false;
};

/// Which vertices around a witness S form the host subgraph H.
enum class WitnessNeighborhood {
  Union,   // H = G[S u N(S)], N(S) = vertices with a neighbour in S
  Common,  // H = G[S u Z(S)], Z(S) = vertices adjacent to every member of S
};

/// Order in which the vertices of H are offered to the growing clique Q.
enum class ScanOrder {
  VertexId,      // ascending vertex id
  SpectralRank,  // the |x2|-descending order used to pick W
};

/// Parameters of the spectral clique search.
struct SpectralConfig {
  std::size_t k = 1;  // witness clique size
  std::size_t t = 1;  // ranking cutoff |W|, normally round(n p)
  std::uint32_t threshold_num = 3;
  std::uint32_t threshold_den = 4;
  std::optional<VertexSet> seeded_set;
  /// Upper bound on enumerated witness cliques when unseeded.
  std::optional<std::size_t> candidate_cap;
  double eigen_tolerance = kDefaultEigenTolerance;
  WitnessNeighborhood neighborhood = WitnessNeighborhood::Common;
  ScanOrder scan_order = ScanOrder::VertexId;

  /// Throws InputError unless 1 <= k <= t, 0 < num/den <= 1 and any seeded
  /// set has exactly k members.
  void validate() const;

  /// ceil(threshold * t): minimum number of neighbours in W.
  std::size_t neighbor_threshold() const;
};

struct SpectrumSummary {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double residual = 0.0;
  std::size_t dimension = 0;
};

struct SpectralRun {
  CliqueResult clique;
  std::size_t candidates_evaluated = 0;
  /// Candidates dropped because the eigensolver missed its tolerance.
  std::size_t candidates_skipped = 0;
  /// Spectrum of H for the candidate that produced the answer.
  std::optional<SpectrumSummary> spectrum;
  /// Best per-candidate clique before the witness fallback.
  std::size_t best_candidate_size = 0;
};

/// Clique built from a single witness clique s: ranks the host subgraph H
/// (s plus its common or union neighbourhood) by |x2| of the second
/// eigenvector, takes the top t as W, then scans H in cfg.scan_order, keeping
/// each vertex with at least neighbor_threshold() neighbours in W that is
/// adjacent to everything kept so far.
VertexSet spectral_candidate_clique(const Graph& g, const VertexSet& witness,
                                    const SpectralConfig& cfg,
                                    std::optional<SpectrumSummary>* spectrum = nullptr);

/// Runs spectral_candidate_clique over the seeded witness, or over every
/// k-clique in lexicographic order (up to the cap), and keeps the largest
/// result; the earliest candidate wins ties. If every candidate yields an
/// empty set the first witness itself is returned.
SpectralRun spectral_max_clique_run(const Graph& g, const SpectralConfig& cfg);
CliqueResult spectral_max_clique(const Graph& g, const SpectralConfig& cfg);

/// Vertices by decreasing degree (ascending id on ties), each kept if it is
/// adjacent to every vertex kept before it.
CliqueResult greedy_clique(const Graph& g);

/// Edges by decreasing common-neighbourhood size (lexicographic on ties); the
/// first edge whose common neighbourhood is a clique gives the answer. Falls
/// back to {0} when no edge qualifies.
CliqueResult mono_clique(const Graph& g);

enum class Bt06Output {
  ZUnionU,  // record Z(U) together with the witness U
  ZOnly,    // record the common neighbourhood Z(U) alone
};

struct Bt06Options {
  Bt06Output output = Bt06Output::ZUnionU;
  std::optional<std::size_t> candidate_cap;
};

/// Common-neighbourhood clique search over complete k-subsets U, followed by
/// the edge-coverage filter; returns the largest accepted clique. When no
/// candidate's common neighbourhood is complete, the first witness U examined
/// is returned.
CliqueResult maximum_clique_bt06(const Graph& g, std::size_t k,
                                 const std::optional<VertexSet>& seeded_set,
                                 const Bt06Options& options = {});

inline constexpr std::size_t kExactCliqueLimit = 64;

/// Exact maximum clique by branch and bound with a colouring bound. Only for
/// graphs with at most kExactCliqueLimit vertices.
CliqueResult exact_max_clique(const Graph& g);

/// Calls visit(clique) for every k-clique in lexicographic order until visit
/// returns false or `cap` cliques were produced. Returns the number visited.
std::size_t for_each_k_clique(const Graph& g, std::size_t k, std::optional<std::size_t> cap,
                              const std::function<bool(const VertexSet&)>& visit);

}  // namespace rigclique

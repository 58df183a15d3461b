// Command-line front end: generate instances, run a single algorithm, or
// sweep p and write failure-rate / clique-fraction curves.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rigclique/bench.hpp"
#include "rigclique/clique_algos.hpp"
#include "rigclique/errors.hpp"
#include "rigclique/graph_io.hpp"
#include "rigclique/rig_model.hpp"

namespace fs = std::filesystem;
using namespace rigclique;

namespace {

VertexSet parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    const unsigned long v = std::stoul(tok, &used);
    if (used != tok.size()) throw InputError("bad vertex id '" + tok + "'");
    out.push_back(static_cast<Vertex>(v));
  }
  return VertexSet(std::move(out));
}

struct GenerateArgs {
  std::size_t n = 1000;
  double alpha = 1.0 / 3.0;
  double p = 0.1;
  std::uint64_t seed = 1;
  std::uint64_t trial = 0;
  std::string out;
  bool with_labels = false;
  std::string labels_out;
};

int run_generate(const GenerateArgs& a) {
  const RigParams params(a.n, a.alpha, a.p);
  const RigSample s = sample_rig(params, Seed{a.seed, a.trial});
  save_edge_list(a.out, s.graph);
  if (a.with_labels) save_labels(a.labels_out.empty() ? a.out + ".labels" : a.labels_out, s.labels);
  std::cerr << "n=" << params.n() << " m=" << params.m() << " p=" << params.p()
            << " edges=" << s.graph.edge_count()
            << " dense_regime=" << (is_dense_regime(params) ? "yes" : "no") << "\n";
  return 0;
}

struct SolveArgs {
  std::string algo = "spectral";
  std::size_t k = 0;
  std::size_t t = 0;
  std::string seed_set;
  std::string graph;
  std::string labels;
  bool dump_spectrum = false;
  std::size_t candidate_cap = 0;
  std::string bt06_output = "z_union_u";
  std::string neighborhood = "common";
  std::string scan_order = "id";
};

int run_solve(const SolveArgs& a) {
  const Graph g = load_edge_list(a.graph);
  std::optional<VertexSet> seeded;
  std::optional<LabelRepresentation> labels;
  if (!a.seed_set.empty()) seeded = parse_vertex_list(a.seed_set);
  if (!a.labels.empty()) labels = load_labels(a.labels);

  std::size_t k = a.k;
  if (k == 0) k = seeded ? seeded->size() : 1;
  if (!seeded && labels) {
    const auto heavy = heaviest_label(*labels);
    if (!heavy || heavy->members.size() < k)
      throw InputError("heaviest label has fewer than k members; cannot auto-seed");
    seeded = VertexSet(std::vector<Vertex>(heavy->members.begin(),
                                           heavy->members.begin() + static_cast<long>(k)));
  }
  const std::optional<std::size_t> cap =
      a.candidate_cap ? std::optional<std::size_t>(a.candidate_cap) : std::nullopt;

  CliqueResult result;
  if (a.algo == "spectral") {
    SpectralConfig cfg;
    cfg.k = k;
    cfg.t = a.t;
    if (cfg.t == 0) {
      if (!labels) throw InputError("--t is required for spectral without --labels");
      // Mean label size estimates n p.
      std::size_t total = 0;
      for (const auto& l : labels->label_sets()) total += l.size();
      cfg.t = static_cast<std::size_t>(
          std::llround(static_cast<double>(total) / static_cast<double>(labels->label_count())));
      cfg.t = std::max(cfg.t, k);
    }
    cfg.seeded_set = seeded;
    cfg.candidate_cap = cap;
    cfg.neighborhood = a.neighborhood == "union" ? WitnessNeighborhood::Union : WitnessNeighborhood::Common;
    cfg.scan_order = a.scan_order == "rank" ? ScanOrder::SpectralRank : ScanOrder::VertexId;
    const SpectralRun run = spectral_max_clique_run(g, cfg);
    result = run.clique;
    if (a.dump_spectrum) {
      if (run.spectrum)
        std::cout << "spectrum lambda1=" << run.spectrum->lambda1 << " lambda2=" << run.spectrum->lambda2
                  << " residual=" << run.spectrum->residual << " dim=" << run.spectrum->dimension << "\n";
      std::cout << "candidates evaluated=" << run.candidates_evaluated
                << " skipped=" << run.candidates_skipped << "\n";
    }
  } else if (a.algo == "greedy") {
    result = greedy_clique(g);
  } else if (a.algo == "mono") {
    result = mono_clique(g);
  } else if (a.algo == "bt06") {
    Bt06Options opt;
    opt.output = a.bt06_output == "z" ? Bt06Output::ZOnly : Bt06Output::ZUnionU;
    opt.candidate_cap = cap;
    result = maximum_clique_bt06(g, k, seeded, opt);
  } else if (a.algo == "exact") {
    result = exact_max_clique(g);
  } else {
    throw InputError("unknown algorithm '" + a.algo + "'");
  }

  std::cout << a.algo << ' ' << result.vertices.size();
  for (Vertex v : result.vertices) std::cout << ' ' << v;
  std::cout << "\nverified " << (result.verified ? "true" : "false") << "\n";
  return result.verified ? 0 : 3;
}

struct BenchArgs {
  double alpha = 1.0 / 3.0;
  std::size_t n = 1000;
  std::size_t k = 3;
  double p_start = 0.1;
  double p_end = 0.4;
  double p_step = 0.01;
  std::size_t trials = 0;
  std::string algos = "spectral,bt06";
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  std::string out = "results";
  std::string config;
  std::string bt06_output = "z_union_u";
  std::string neighborhood = "common";
  std::string scan_order = "id";
  bool quiet = false;
};

int run_bench(const BenchArgs& a, const CLI::App& cmd) {
  ExperimentConfig cfg;
  const bool from_file = !a.config.empty();
  if (from_file) cfg = ExperimentConfig::from_json_file(a.config);
  // Without a config file every flag applies; with one, only flags given explicitly.
  auto given = [&](const char* flag) { return !from_file || cmd.count(flag) > 0; };

  if (given("--alpha")) cfg.alpha = a.alpha;
  if (given("--n")) cfg.n = a.n;
  if (given("--k")) cfg.k = a.k;
  if (given("--p-start") || given("--p-end") || given("--p-step"))
    cfg.p_grid = make_p_grid(a.p_start, a.p_end, a.p_step);
  if (given("--trials")) cfg.trials_per_point = a.trials ? a.trials : default_trials_for_k(cfg.k);
  if (given("--algos")) cfg.algorithms = parse_algorithm_list(a.algos);
  if (given("--seed")) cfg.master_seed = a.seed;
  if (given("--workers")) cfg.workers = a.workers;
  if (given("--bt06-output"))
    cfg.trial_options.bt06_output = a.bt06_output == "z" ? Bt06Output::ZOnly : Bt06Output::ZUnionU;
  if (given("--neighborhood"))
    cfg.trial_options.neighborhood =
        a.neighborhood == "union" ? WitnessNeighborhood::Union : WitnessNeighborhood::Common;
  if (given("--scan-order"))
    cfg.trial_options.scan_order = a.scan_order == "rank" ? ScanOrder::SpectralRank : ScanOrder::VertexId;
  cfg.validate();

  fs::path dir = cmd.count("--out") || cfg.output_path.empty() ? fs::path(a.out) : cfg.output_path;
  fs::create_directories(dir);
  cfg.output_path = dir / "curves.csv";

  const CurveTable table = run_sweep(cfg);
  emit_plot_script(table, cfg.output_path, dir / "curves.gp");
  if (!a.quiet) write_csv(std::cout, table);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum cliques in random intersection graphs"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Sample a G(n,m,p) instance");
  g->add_option("--n", gen.n, "Vertex count")->check(CLI::PositiveNumber);
  g->add_option("--alpha", gen.alpha, "Label exponent, m = round(n^alpha)");
  g->add_option("--p", gen.p, "Label selection probability");
  g->add_option("--seed", gen.seed, "Master seed");
  g->add_option("--trial", gen.trial, "Trial index");
  g->add_option("--out", gen.out, "Edge-list output file")->required();
  g->add_flag("--with-labels", gen.with_labels, "Also write the label representation");
  g->add_option("--labels-out", gen.labels_out, "Label file path (default: <out>.labels)");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Run one clique algorithm on an edge-list file");
  s->add_option("--algo", solve.algo, "spectral|greedy|mono|bt06|exact")
      ->check(CLI::IsMember({"spectral", "greedy", "mono", "bt06", "exact"}));
  s->add_option("--k", solve.k, "Witness clique size");
  s->add_option("--t", solve.t, "Ranking cutoff (spectral)");
  s->add_option("--seed-set", solve.seed_set, "Comma-separated witness clique");
  s->add_option("--graph", solve.graph, "Edge-list file")->required();
  s->add_option("--labels", solve.labels, "Label file; seeds from the heaviest label");
  s->add_flag("--dump-spectrum", solve.dump_spectrum, "Print lambda1, lambda2 and residual");
  s->add_option("--candidate-cap", solve.candidate_cap, "Limit on enumerated witness cliques");
  s->add_option("--bt06-output", solve.bt06_output, "z_union_u|z")
      ->check(CLI::IsMember({"z_union_u", "z"}));
  s->add_option("--neighborhood", solve.neighborhood, "Spectral host subgraph: common|union")
      ->check(CLI::IsMember({"common", "union"}));
  s->add_option("--scan-order", solve.scan_order, "Spectral scan order: id|rank")
      ->check(CLI::IsMember({"id", "rank"}));

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Sweep p and write curve CSV plus a gnuplot script");
  b->add_option("--alpha", bench.alpha);
  b->add_option("--n", bench.n);
  b->add_option("--k", bench.k);
  b->add_option("--p-start", bench.p_start);
  b->add_option("--p-end", bench.p_end);
  b->add_option("--p-step", bench.p_step);
  b->add_option("--trials", bench.trials, "Trials per p (default depends on k)");
  b->add_option("--algos", bench.algos, "Comma-separated: spectral,bt06,greedy,mono");
  b->add_option("--seed", bench.seed);
  b->add_option("--workers", bench.workers)->check(CLI::PositiveNumber);
  b->add_option("--out", bench.out, "Output directory");
  b->add_option("--config", bench.config, "JSON experiment config");
  b->add_option("--bt06-output", bench.bt06_output)->check(CLI::IsMember({"z_union_u", "z"}));
  b->add_option("--neighborhood", bench.neighborhood, "Spectral host subgraph: common|union")
      ->check(CLI::IsMember({"common", "union"}));
  b->add_option("--scan-order", bench.scan_order, "Spectral scan order: id|rank")
      ->check(CLI::IsMember({"id", "rank"}));
  b->add_flag("--quiet", bench.quiet, "Do not echo the CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (g->parsed()) return run_generate(gen);
    if (s->parsed()) return run_solve(solve);
    if (b->parsed()) return run_bench(bench, *b);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rigclique/clique_algos.hpp"
#include "rigclique/rig_model.hpp"

namespace rigclique {

enum class Algorithm { Spectral, Bt06, Greedy, Mono };

std::string_view to_string(Algorithm a);
/// Accepts "spectral", "bt06", "greedy", "mono"; throws InputError otherwise.
Algorithm parse_algorithm(std::string_view name);
std::vector<Algorithm> parse_algorithm_list(std::string_view comma_separated);

struct TrialOutcome {
  double p = 0.0;
  Algorithm algorithm = Algorithm::Spectral;
  std::size_t found_size = 0;
  std::size_t truth_size = 0;
  bool success = false;  // found_size >= truth_size
  std::chrono::nanoseconds elapsed{0};
};

struct TrialOptions {
  Bt06Output bt06_output = Bt06Output::ZUnionU;
  WitnessNeighborhood neighborhood = WitnessNeighborhood::Common;
  ScanOrder scan_order = ScanOrder::VertexId;
  std::uint32_t threshold_num = 3;
  std::uint32_t threshold_den = 4;
};

/// Upper bound on resamples when the heaviest label has fewer than k members.
inline constexpr std::uint32_t kMaxTrialAttempts = 100;

/// One Monte Carlo trial: samples G_{n,m,p}, takes |L_max| of the heaviest
/// label as the true clique number, seeds spectral and bt06 with the k
/// smallest members of L_max, runs each algorithm on the graph alone and
/// scores it strictly (found >= truth). Samples whose heaviest label has fewer
/// than k members are redrawn from the next substream; after
/// kMaxTrialAttempts such draws InputError is thrown.
std::vector<TrialOutcome> run_trial(const RigParams& params, std::size_t k,
                                    std::span<const Algorithm> algorithms, Seed seed,
                                    const TrialOptions& options = {});

/// Trial counts per p-point: 2000 for k <= 3, then 1600, 1400, 800, 700, 500 for
/// k = 4..8 (and 500 beyond).
std::size_t default_trials_for_k(std::size_t k);

/// start, start+step, ... up to end inclusive (within step/1000).
std::vector<double> make_p_grid(double start, double end, double step);

struct ExperimentConfig {
  double alpha = 1.0 / 3.0;
  std::size_t n = 1000;
  std::size_t k = 3;
  std::vector<double> p_grid;
  std::size_t trials_per_point = 0;
  std::vector<Algorithm> algorithms{Algorithm::Spectral, Algorithm::Bt06};
  std::uint64_t master_seed = 1;
  std::size_t workers = 1;
  /// CSV destination; nothing is written when empty.
  std::filesystem::path output_path;
  TrialOptions trial_options;

  /// Throws InputError on an empty/unsorted grid, p outside [0,1], zero
  /// trials, no algorithms or bad model parameters.
  void validate() const;

  /// Reads the JSON form. Keys mirror the bench CLI flags: alpha, n, k,
  /// p_start/p_end/p_step or p_grid, trials, algos, seed, workers, out,
  /// bt06_output ("z_union_u" | "z"), neighborhood ("common" | "union"),
  /// scan_order ("id" | "rank").
  static ExperimentConfig from_json_file(const std::filesystem::path& path);
  static ExperimentConfig from_json_text(const std::string& text);
};

struct CurvePoint {
  double alpha = 0.0;
  std::size_t n = 0;
  std::size_t m = 0;
  double p = 0.0;
  std::size_t k = 0;
  Algorithm algorithm = Algorithm::Spectral;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double failure_rate = 0.0;
  double mean_fraction = 0.0;
  double fraction_std = 0.0;
};

using CurveTable = std::vector<CurvePoint>;

/// Folds trial outcomes for one (p, algorithm) cell, in the given order.
CurvePoint aggregate(std::span<const TrialOutcome> outcomes, const RigParams& params,
                     std::size_t k, Algorithm algorithm);

/// Runs every (p, trial) work unit on `workers` threads. Trial j of grid point
/// i uses Seed{master_seed, i * trials_per_point + j}; results are reduced in
/// index order so the table does not depend on scheduling. When output_path is
/// set the CSV is rewritten after every grid point, so a failing trial leaves
/// the completed rows on disk.
CurveTable run_sweep(const ExperimentConfig& cfg);

inline constexpr std::string_view kCsvHeader =
    "alpha,n,m,p,k,algorithm,trials,failures,failure_rate,mean_fraction,fraction_std";

void write_csv(std::ostream& out, const CurveTable& table);
std::string to_csv(const CurveTable& table);
/// Parses CSV produced by write_csv.
CurveTable read_csv(std::istream& in);

/// Writes a gnuplot script plotting failure rate and mean fraction against p,
/// one row of two panels per (alpha, n, k) group and one series per algorithm,
/// reading its data from `csv_path`. Throws InputError for an empty table.
void emit_plot_script(const CurveTable& table, const std::filesystem::path& csv_path,
                      const std::filesystem::path& script_path);
std::string plot_script(const CurveTable& table, const std::filesystem::path& csv_path);

}  // namespace rigclique

#include "rigclique/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "rigclique/errors.hpp"

namespace rigclique {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Spectral: return "spectral";
    case Algorithm::Bt06: return "bt06";
    case Algorithm::Greedy: return "greedy";
    case Algorithm::Mono: return "mono";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::Spectral, Algorithm::Bt06, Algorithm::Greedy, Algorithm::Mono})
    if (to_string(a) == name) return a;
  throw InputError("unknown algorithm '" + std::string(name) + "'");
}

std::vector<Algorithm> parse_algorithm_list(std::string_view text) {
  std::vector<Algorithm> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const auto token = text.substr(pos, comma - pos);
    if (!token.empty()) {
      const Algorithm a = parse_algorithm(token);
      if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    }
    pos = comma + 1;
  }
  if (out.empty()) throw InputError("empty algorithm list");
  return out;
}

std::size_t default_trials_for_k(std::size_t k) {
  switch (k) {
    case 0:
    case 1:
    case 2:
    case 3: return 2000;
    case 4: return 1600;
    case 5: return 1400;
    case 6: return 800;
    case 7: return 700;
    default: return 500;
  }
}

std::vector<double> make_p_grid(double start, double end, double step) {
  if (!(step > 0.0)) throw InputError("p grid: step must be positive");
  if (!(end >= start)) throw InputError("p grid: end must be >= start");
  const auto count = static_cast<std::size_t>(std::floor((end - start) / step + 1e-3)) + 1;
  std::vector<double> grid;
  grid.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    // Snap to 1e-9 so 0.1 + 7 * 0.01 is stored and printed as 0.17.
    grid.push_back(std::round((start + static_cast<double>(i) * step) * 1e9) / 1e9);
  }
  return grid;
}

std::vector<TrialOutcome> run_trial(const RigParams& params, std::size_t k,
                                    std::span<const Algorithm> algorithms, Seed seed,
                                    const TrialOptions& options) {
  if (k < 1) throw InputError("run_trial: k must be >= 1");
  for (std::uint32_t attempt = 0; attempt < kMaxTrialAttempts; ++attempt) {
    const RigSample sample = sample_rig(params, seed, attempt);
    const auto heavy = heaviest_label(sample.labels);
    const std::size_t truth = heavy ? heavy->members.size() : 1;
    if (!heavy || truth < k) continue;

    const VertexSet witness(
        std::vector<Vertex>(heavy->members.begin(), heavy->members.begin() + static_cast<long>(k)));
    const auto target = static_cast<std::size_t>(std::llround(static_cast<double>(params.n()) * params.p()));

    std::vector<TrialOutcome> out;
    out.reserve(algorithms.size());
    for (Algorithm algo : algorithms) {
      const auto start = std::chrono::steady_clock::now();
      CliqueResult result;
      switch (algo) {
        case Algorithm::Spectral: {
          SpectralConfig cfg;
          cfg.k = k;
          cfg.t = std::max(target, k);
          cfg.threshold_num = options.threshold_num;
          cfg.threshold_den = options.threshold_den;
          cfg.seeded_set = witness;
          cfg.neighborhood = options.neighborhood;
          cfg.scan_order = options.scan_order;
          result = spectral_max_clique(sample.graph, cfg);
          break;
        }
        case Algorithm::Bt06:
          result = maximum_clique_bt06(sample.graph, k, witness, {options.bt06_output, std::nullopt});
          break;
        case Algorithm::Greedy: result = greedy_clique(sample.graph); break;
        case Algorithm::Mono: result = mono_clique(sample.graph); break;
      }
      const auto elapsed = std::chrono::steady_clock::now() - start;
      if (!result.verified)
        throw std::logic_error(std::string(to_string(algo)) + " returned a non-clique");
      TrialOutcome o;
      o.p = params.p();
      o.algorithm = algo;
      o.found_size = result.vertices.size();
      o.truth_size = truth;
      o.success = o.found_size >= o.truth_size;
      o.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed);
      out.push_back(o);
    }
    return out;
  }
  std::ostringstream msg;
  msg << "run_trial: heaviest label has fewer than k = " << k << " members in "
      << kMaxTrialAttempts << " draws (n = " << params.n() << ", alpha = " << params.alpha()
      << ", p = " << params.p() << ", seed = " << seed.master_seed << "/" << seed.trial_index << ")";
  throw InputError(msg.str());
}

void ExperimentConfig::validate() const {
  if (p_grid.empty()) throw InputError("experiment: p grid is empty");
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    if (!(p_grid[i] >= 0.0 && p_grid[i] <= 1.0)) throw InputError("experiment: p outside [0, 1]");
    if (i > 0 && !(p_grid[i] > p_grid[i - 1]))
      throw InputError("experiment: p grid must be strictly increasing");
  }
  if (trials_per_point < 1) throw InputError("experiment: trials per point must be >= 1");
  if (algorithms.empty()) throw InputError("experiment: no algorithms selected");
  if (k < 1) throw InputError("experiment: k must be >= 1");
  if (workers < 1) throw InputError("experiment: workers must be >= 1");
  RigParams(n, alpha, p_grid.front());
}

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("experiment config: ") + e.what());
  }
  ExperimentConfig cfg;
  try {
    cfg.alpha = j.value("alpha", cfg.alpha);
    cfg.n = j.value("n", cfg.n);
    cfg.k = j.value("k", cfg.k);
    if (j.contains("p_grid")) {
      cfg.p_grid = j.at("p_grid").get<std::vector<double>>();
    } else {
      cfg.p_grid = make_p_grid(j.at("p_start").get<double>(), j.at("p_end").get<double>(),
                               j.value("p_step", 0.01));
    }
    cfg.trials_per_point = j.value("trials", default_trials_for_k(cfg.k));
    if (j.contains("algos")) {
      const auto& a = j.at("algos");
      if (a.is_string()) {
        cfg.algorithms = parse_algorithm_list(a.get<std::string>());
      } else {
        cfg.algorithms.clear();
        for (const auto& name : a) cfg.algorithms.push_back(parse_algorithm(name.get<std::string>()));
      }
    }
    cfg.master_seed = j.value("seed", cfg.master_seed);
    cfg.workers = j.value("workers", cfg.workers);
    if (j.contains("out")) cfg.output_path = j.at("out").get<std::string>();
    const std::string bt06 = j.value("bt06_output", std::string("z_union_u"));
    if (bt06 == "z")
      cfg.trial_options.bt06_output = Bt06Output::ZOnly;
    else if (bt06 != "z_union_u")
      throw InputError("experiment config: bt06_output must be 'z_union_u' or 'z'");
    const std::string hood = j.value("neighborhood", std::string("common"));
    if (hood == "union")
      cfg.trial_options.neighborhood = WitnessNeighborhood::Union;
    else if (hood != "common")
      throw InputError("experiment config: neighborhood must be 'common' or 'union'");
    const std::string scan = j.value("scan_order", std::string("id"));
    if (scan == "rank")
      cfg.trial_options.scan_order = ScanOrder::SpectralRank;
    else if (scan != "id")
      throw InputError("experiment config: scan_order must be 'id' or 'rank'");
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("experiment config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig ExperimentConfig::from_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return from_json_text(buf.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

CurvePoint aggregate(std::span<const TrialOutcome> outcomes, const RigParams& params,
                     std::size_t k, Algorithm algorithm) {
  CurvePoint pt;
  pt.alpha = params.alpha();
  pt.n = params.n();
  pt.m = params.m();
  pt.p = params.p();
  pt.k = k;
  pt.algorithm = algorithm;
  double sum = 0.0;
  std::vector<double> fractions;
  for (const auto& o : outcomes) {
    if (o.algorithm != algorithm) continue;
    ++pt.trials;
    if (!o.success) ++pt.failures;
    // Values above 1 are kept: they flag samples where the heaviest label is
    // not the maximum clique.
    const double f = static_cast<double>(o.found_size) / static_cast<double>(o.truth_size);
    fractions.push_back(f);
    sum += f;
  }
  if (pt.trials == 0) return pt;
  const auto t = static_cast<double>(pt.trials);
  pt.failure_rate = static_cast<double>(pt.failures) / t;
  pt.mean_fraction = sum / t;
  if (pt.trials > 1) {
    double ss = 0.0;
    for (double f : fractions) ss += (f - pt.mean_fraction) * (f - pt.mean_fraction);
    pt.fraction_std = std::sqrt(ss / (t - 1.0));
  }
  return pt;
}

namespace {

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

void write_csv_file(const std::filesystem::path& path, const CurveTable& table) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_csv(out, table);
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

CurveTable run_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  CurveTable table;
  const std::size_t trials = cfg.trials_per_point;

  for (std::size_t point = 0; point < cfg.p_grid.size(); ++point) {
    const RigParams params(cfg.n, cfg.alpha, cfg.p_grid[point]);
    std::vector<std::vector<TrialOutcome>> results(trials);
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    std::size_t error_index = trials;

    auto work = [&] {
      for (std::size_t j = next.fetch_add(1); j < trials; j = next.fetch_add(1)) {
        try {
          results[j] = run_trial(params, cfg.k, cfg.algorithms,
                                 Seed{cfg.master_seed, point * trials + j}, cfg.trial_options);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          // Keep the lowest failing index so the reported error is schedule-independent.
          if (j < error_index) {
            error_index = j;
            error = std::current_exception();
          }
        }
      }
    };

    const std::size_t nthreads = std::min(cfg.workers, trials);
    if (nthreads <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(nthreads);
      for (std::size_t w = 0; w < nthreads; ++w) pool.emplace_back(work);
    }

    if (error) {
      if (!cfg.output_path.empty()) write_csv_file(cfg.output_path, table);
      std::rethrow_exception(error);
    }

    std::vector<TrialOutcome> flat;
    flat.reserve(trials * cfg.algorithms.size());
    for (auto& r : results) flat.insert(flat.end(), r.begin(), r.end());
    for (Algorithm a : cfg.algorithms) table.push_back(aggregate(flat, params, cfg.k, a));
    if (!cfg.output_path.empty()) write_csv_file(cfg.output_path, table);
  }
  return table;
}

void write_csv(std::ostream& out, const CurveTable& table) {
  out << kCsvHeader << '\n';
  for (const auto& pt : table) {
    out << fmt_double(pt.alpha) << ',' << pt.n << ',' << pt.m << ',' << fmt_double(pt.p) << ','
        << pt.k << ',' << to_string(pt.algorithm) << ',' << pt.trials << ',' << pt.failures << ','
        << fmt_double(pt.failure_rate) << ',' << fmt_double(pt.mean_fraction) << ','
        << fmt_double(pt.fraction_std) << '\n';
  }
}

std::string to_csv(const CurveTable& table) {
  std::ostringstream out;
  write_csv(out, table);
  return out.str();
}

CurveTable read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw InputError("curve CSV: bad header");
  CurveTable table;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 11) throw InputError("curve CSV: expected 11 columns in '" + line + "'");
    try {
      CurvePoint pt;
      pt.alpha = std::stod(f[0]);
      pt.n = std::stoull(f[1]);
      pt.m = std::stoull(f[2]);
      pt.p = std::stod(f[3]);
      pt.k = std::stoull(f[4]);
      pt.algorithm = parse_algorithm(f[5]);
      pt.trials = std::stoull(f[6]);
      pt.failures = std::stoull(f[7]);
      pt.failure_rate = std::stod(f[8]);
      pt.mean_fraction = std::stod(f[9]);
      pt.fraction_std = std::stod(f[10]);
      table.push_back(pt);
    } catch (const std::logic_error&) {
      throw InputError("curve CSV: malformed row '" + line + "'");
    }
  }
  return table;
}

}  // namespace rigclique

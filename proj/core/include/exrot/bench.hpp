#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exrot/bandwidth.hpp"
#include "exrot/kde.hpp"
#include "exrot/mixture.hpp"

namespace exrot {

/// Configuration of a benchmark run. Trials are distributed across workers
/// with per-trial seeds derived from (seed, density, n, trial); both rules see
/// byte-identical samples within a trial, and outputs do not depend on the
/// worker count.
struct ExperimentConfig {
  std::vector<int> density_ids = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
  std::vector<std::size_t> n_samples = {10000};
  int n_trials = 20;
  std::uint64_t seed = 42;
  std::vector<Rule> rules = {Rule::rot, Rule::exrot};
  int grid_points = 4096;
  std::string output_path;
  int workers = 0;            // 0: hardware concurrency
  bool measure_time = false;  // wall time breaks byte-identical output; opt-in

  void validate() const;
};

struct TrialRow {
  int density_id;
  std::size_t n;
  int trial;
  Rule rule;
  double h;
  double imse;
  double elapsed_seconds;
};

/// Trapezoid integral of (estimate - truth)² on the estimate's grid. Aborts
/// when the truth's mass outside the grid exceeds 1e-6 instead of silently
/// truncating.
double imse(const DensityEstimate& est, const NormalMixture& truth);

/// One trial: sample once, apply every configured rule to the same draw,
/// evaluate each estimate and its integrated squared error.
std::vector<TrialRow> run_trial(int density_id, std::size_t n, int trial,
                                const ExperimentConfig& cfg);

/// Table-1-style experiment: every (density, trial) pair at each n.
std::vector<TrialRow> run_cross_density(const ExperimentConfig& cfg);

/// Table-2-style experiment across sample sizes (same machinery; the config
/// must carry more than one n).
std::vector<TrialRow> run_size_sweep(const ExperimentConfig& cfg);

enum class ReportFormat { csv, json };

/// Writes trials.{csv,json}, aggregate.csv (per density/n/rule means) and
/// plotdata.csv ((log10 n, mean imse) per density/rule) under dir.
/// Returns the paths written.
std::vector<std::string> emit_report(const std::vector<TrialRow>& rows,
                                     ReportFormat format,
                                     const std::string& dir);

std::string rows_to_csv(const std::vector<TrialRow>& rows);

struct AggregateRow {
  int density_id;
  std::size_t n;
  Rule rule;
  double mean_h;
  double mean_imse;
  int trials;
};
std::vector<AggregateRow> aggregate(const std::vector<TrialRow>& rows);

/// Least-squares slope of log(mean imse) against log(n) for one density/rule.
double fit_loglog_slope(const std::vector<TrialRow>& rows, int density_id,
                        Rule rule);

}  // namespace exrot

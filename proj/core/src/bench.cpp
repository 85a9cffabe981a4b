#include "exrot/bench.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <thread>

#include "exrot/rng.hpp"
#include "exrot/stats.hpp"

namespace exrot {

namespace {

std::uint64_t trial_seed(std::uint64_t base, int density_id, std::size_t n,
                         int trial) {
  std::uint64_t key = static_cast<std::uint64_t>(density_id);
  key = key * 0x100000001b3ULL + n;
  key = key * 0x100000001b3ULL + static_cast<std::uint64_t>(trial);
  return Rng::derive_seed(base, key);
}

bool row_less(const TrialRow& a, const TrialRow& b) {
  const auto ka = std::tuple(a.density_id, a.n, a.trial, static_cast<int>(a.rule));
  const auto kb = std::tuple(b.density_id, b.n, b.trial, static_cast<int>(b.rule));
  return ka < kb;
}

std::vector<TrialRow> run_tasks(const ExperimentConfig& cfg) {
  cfg.validate();
  struct Task {
    int density_id;
    std::size_t n;
    int trial;
  };
  std::vector<Task> tasks;
  for (int id : cfg.density_ids)
    for (std::size_t n : cfg.n_samples)
      for (int t = 0; t < cfg.n_trials; ++t) tasks.push_back({id, n, t});

  std::vector<std::vector<TrialRow>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& t = tasks[i];
      slots[i] = run_trial(t.density_id, t.n, t.trial, cfg);
    }
  };

  unsigned k = cfg.workers > 0 ? static_cast<unsigned>(cfg.workers)
                               : std::max(1u, std::thread::hardware_concurrency());
  k = std::min<unsigned>(k, tasks.size());
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < k; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::vector<TrialRow> rows;
  for (auto& s : slots) rows.insert(rows.end(), s.begin(), s.end());
  std::sort(rows.begin(), rows.end(), row_less);
  return rows;
}

std::string format_row(const TrialRow& r) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%d,%zu,%d,%s,%.12g,%.12g,%.12g\n",
                r.density_id, r.n, r.trial, rule_name(r.rule), r.h, r.imse,
                r.elapsed_seconds);
  return buf;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (n_trials < 1) throw std::invalid_argument("config: n_trials must be >= 1");
  if (grid_points < 256)
    throw std::invalid_argument("config: grid_points must be >= 256");
  if (density_ids.empty() || n_samples.empty() || rules.empty())
    throw std::invalid_argument("config: empty densities, sizes or rules");
  for (int id : density_ids)
    if (id < 1 || id > kMarronWandCount)
      throw std::invalid_argument("config: density id out of range");
}

double imse(const DensityEstimate& est, const NormalMixture& truth) {
  if (est.grid.size() < 2) throw std::invalid_argument("imse: grid too small");
  const double outside = truth.tail_mass_outside(est.grid.front(), est.grid.back());
  if (outside > 1e-6)
    throw std::runtime_error("imse: grid does not cover the density support");

  double acc = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < est.grid.size(); ++i) {
    const double diff = est.values[i] - truth.pdf(est.grid[i]);
    const double sq = diff * diff;
    if (i > 0) acc += 0.5 * (sq + prev) * (est.grid[i] - est.grid[i - 1]);
    prev = sq;
  }
  return acc;
}

std::vector<TrialRow> run_trial(int density_id, std::size_t n, int trial,
                                const ExperimentConfig& cfg) {
  const NormalMixture truth = marron_wand(density_id);
  const SampleSet draw = truth.sample(n, trial_seed(cfg.seed, density_id, n, trial));
  const Cumulants1D cum = cumulants_1d(draw.values);
  const auto [lo, hi] = truth.support(10.0);
  const std::vector<double> grid = make_grid(lo, hi, cfg.grid_points);

  std::vector<TrialRow> rows;
  for (Rule rule : cfg.rules) {
    const auto t0 = std::chrono::steady_clock::now();
    BandwidthResult bw =
        rule == Rule::rot ? h_rot_1d(cum.sigma, n) : h_exrot_1d(cum, n);
    const DensityEstimate est = kde_1d(draw.values, bw.h_scalar(), grid);
    const double err = imse(est, truth);
    const auto t1 = std::chrono::steady_clock::now();
    const double elapsed =
        cfg.measure_time ? std::chrono::duration<double>(t1 - t0).count() : 0.0;
    rows.push_back({density_id, n, trial, rule, bw.h_scalar(), err, elapsed});
  }
  return rows;
}

std::vector<TrialRow> run_cross_density(const ExperimentConfig& cfg) {
  return run_tasks(cfg);
}

std::vector<TrialRow> run_size_sweep(const ExperimentConfig& cfg) {
  if (cfg.n_samples.size() < 2)
    throw std::invalid_argument("size sweep: need more than one sample size");
  return run_tasks(cfg);
}

std::string rows_to_csv(const std::vector<TrialRow>& rows) {
  std::string out = "density_id,n,trial,rule,h,imse,elapsed_seconds\n";
  for (const auto& r : rows) out += format_row(r);
  return out;
}

std::vector<AggregateRow> aggregate(const std::vector<TrialRow>& rows) {
  std::map<std::tuple<int, std::size_t, int>, AggregateRow> acc;
  for (const auto& r : rows) {
    auto key = std::tuple(r.density_id, r.n, static_cast<int>(r.rule));
    auto it = acc.find(key);
    if (it == acc.end()) {
      acc[key] = {r.density_id, r.n, r.rule, r.h, r.imse, 1};
    } else {
      it->second.mean_h += r.h;
      it->second.mean_imse += r.imse;
      it->second.trials += 1;
    }
  }
  std::vector<AggregateRow> out;
  for (auto& [key, a] : acc) {
    a.mean_h /= a.trials;
    a.mean_imse /= a.trials;
    out.push_back(a);
  }
  return out;
}

std::vector<std::string> emit_report(const std::vector<TrialRow>& rows,
                                     ReportFormat format,
                                     const std::string& dir) {
  if (rows.empty()) throw std::invalid_argument("emit_report: no rows");
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::vector<std::string> written;

  auto write_file = [&](const std::string& name, const std::string& body) {
    const std::string path = (fs::path(dir) / name).string();
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("emit_report: cannot open " + path);
    os << body;
    written.push_back(path);
  };

  if (format == ReportFormat::csv) {
    write_file("trials.csv", rows_to_csv(rows));
  } else {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows)
      arr.push_back({{"density_id", r.density_id},
                     {"n", r.n},
                     {"trial", r.trial},
                     {"rule", rule_name(r.rule)},
                     {"h", r.h},
                     {"imse", r.imse},
                     {"elapsed_seconds", r.elapsed_seconds}});
    write_file("trials.json", arr.dump(2) + "\n");
  }

  const auto aggs = aggregate(rows);
  std::string agg = "density_id,n,rule,mean_h,mean_imse,trials\n";
  char buf[160];
  for (const auto& a : aggs) {
    std::snprintf(buf, sizeof(buf), "%d,%zu,%s,%.12g,%.12g,%d\n", a.density_id,
                  a.n, rule_name(a.rule), a.mean_h, a.mean_imse, a.trials);
    agg += buf;
  }
  write_file("aggregate.csv", agg);

  std::string plot = "density_id,rule,log10_n,mean_imse\n";
  for (const auto& a : aggs) {
    std::snprintf(buf, sizeof(buf), "%d,%s,%.12g,%.12g\n", a.density_id,
                  rule_name(a.rule), std::log10(static_cast<double>(a.n)),
                  a.mean_imse);
    plot += buf;
  }
  write_file("plotdata.csv", plot);
  return written;
}

double fit_loglog_slope(const std::vector<TrialRow>& rows, int density_id,
                        Rule rule) {
  std::map<std::size_t, std::pair<double, int>> by_n;
  for (const auto& r : rows)
    if (r.density_id == density_id && r.rule == rule) {
      by_n[r.n].first += r.imse;
      by_n[r.n].second += 1;
    }
  if (by_n.size() < 2)
    throw std::invalid_argument("fit_loglog_slope: need at least two sizes");

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (const auto& [n, acc] : by_n) {
    const double x = std::log(static_cast<double>(n));
    const double y = std::log(acc.first / acc.second);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace exrot

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "daml/diagnostics.hpp"
#include "daml/hybrid.hpp"
#include "daml/l96.hpp"

namespace daml {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Failure of a pipeline stage; numerical() separates blow-ups and
// divergence from bad input.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& what, bool numerical)
      : std::runtime_error(stage + ": " + what), stage_(std::move(stage)), numerical_(numerical) {}
  const std::string& stage() const { return stage_; }
  bool numerical() const { return numerical_; }

 private:
  std::string stage_;
  bool numerical_;
};

/// Runs fn, converting any failure into a StageError for the named stage.
void run_stage(const std::string& stage, const std::function<void()>& fn);

struct EvalConfig {
  int ics = 500;
  int ic_stride = 20;
  int max_lead = 120;
  int lyap_steps = 100000;
  int lyap_transient = 1000;
  int climate_steps = 100000;
  int psd_steps = 16000;
  int psd_seg_len = 512;
  double psd_overlap = 0.5;
  int psd_point = -1;  // grid point of the PSD series; -1 averages the spectra of all points
  int hovmoller_steps = 200;
  int k0 = 100;
  std::uint64_t seed = 1;
};

struct ExperimentConfig {
  std::string profile = "reference";
  ModelParams model;
  int K = 40000;
  int spinup = 1000;
  std::uint64_t truth_seed = 0;

  int p = 20;
  double density = 0.0;  // fraction of m; overrides p when > 0
  double sigma_obs = 1.0;
  std::uint64_t obs_seed = 0;

  double obs_error_floor = 0.5;  // filter observation error is max(sigma_obs, floor)
  double baseline_sigma_m = 0.0;  // model noise of the true-model filter
  HybridConfig hybrid;
  EvalConfig eval;
  std::string output = "runs/reference";

  int observed_per_step() const;
  void validate() const;
  /// Sorted "section.key = value" lines; the config hash is taken over these.
  std::string canonical() const;
  std::string hash() const;
  /// INI text that load_config reads back to the same configuration.
  std::string to_ini() const;
};

/// Defaults of the named profile ("reference" or "ci").
ExperimentConfig default_config(const std::string& profile);

/// Sets "section.key" from text; unknown keys and unparsable values throw ConfigError.
void set_config_value(ExperimentConfig& cfg, const std::string& key, const std::string& value);

/// Profile defaults overridden by an INI file (sections mirror the keys above).
ExperimentConfig load_config(const std::string& path, const std::string& profile);
ExperimentConfig parse_config(const std::string& text, const std::string& profile);

/// Replaces every seed in the configuration.
void override_seeds(ExperimentConfig& cfg, std::uint64_t seed);

Trajectory make_truth(const ExperimentConfig& cfg);
ObservationSeries make_observations(const Trajectory& truth, const ExperimentConfig& cfg);
/// Observations as seen by the filter (error floored at obs_error_floor).
ObservationSeries filter_observations(ObservationSeries obs, const ExperimentConfig& cfg);
/// Analysis of a filter run whose initial ensemble is spread around the first truth state.
AnalysisSeries filter_run(const Model& model, const ObservationSeries& obs, const Trajectory& truth,
                          const FilterConfig& fc);

/// Welch PSD of a free run (evaluation.psd_* settings), averaged over points
/// when psd_point is -1.
PowerSpectrum climate_psd(const Trajectory& run, const ExperimentConfig& cfg);
/// Mean RMSE-f over the last fifth of the leads.
double forecast_plateau(const ForecastScore& score);
/// First lead at which RMSE-f reaches 95% of the plateau, in Lyapunov times.
double saturation_lt(const ForecastScore& score, double lt_per_step);
/// Largest density ratio (either way) over bins below the given frequency.
double psd_max_ratio(const PowerSpectrum& truth, const PowerSpectrum& surrogate, double below);

// Pipeline stages. Each reads its inputs from cfg.output and writes its
// artifacts there, so stages can run as separate processes.
void stage_truth(const ExperimentConfig& cfg);
void stage_observe(const ExperimentConfig& cfg);
void stage_interp(const ExperimentConfig& cfg);
void stage_init(const ExperimentConfig& cfg);
void stage_hybrid(const ExperimentConfig& cfg);
/// Trains on the complete noise-free truth (no DA) under cfg.output/perfect
/// and scores the best network; returns the perfect/report.json content.
nlohmann::json stage_perfect(const ExperimentConfig& cfg);
/// Recomputes every reported metric from the persisted artifacts and writes report.json.
nlohmann::json stage_evaluate(const ExperimentConfig& cfg);

/// generate-truth, observe, hybrid, evaluate and plot data, end to end.
nlohmann::json run_experiment(const ExperimentConfig& cfg);

struct SweepPoint {
  std::string value;
  bool ok = false;
  std::string message;
  double rmse_f = 0.0;
  double lambda1 = 0.0;
  double rmse_a = 0.0;
  double interp_rmse = 0.0;
};

/// One run per value of axis (sigma_obs, density, K or sigma_m) under
/// cfg.output/sweep_<axis>/<value>; writes cfg.output/sweep_<axis>.csv.
std::vector<SweepPoint> run_sweep(const ExperimentConfig& base, const std::string& axis,
                                  const std::vector<std::string>& values, int workers = 1);

/// Collects convergence, forecast, spectrum, PSD and Hovmoller files under dir/plots.
void emit_plot_data(const std::string& dir);

}  // namespace daml

#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "daml/enkf.hpp"
#include "daml/interp.hpp"
#include "daml/l96.hpp"
#include "daml/observations.hpp"
#include "daml/surrogate.hpp"

namespace daml {

struct HybridConfig {
  int cycles = 50;
  int epochs_per_cycle = 20;
  int lead = 1;
  int init_epochs = 40;
  int init_lead = 4;
  int batch_size = 256;
  double lr = 0.01;
  double l2 = 1e-4;
  double init_holdout = 0.1;   // trailing fraction monitored during initialization
  double var_floor = 1e-3;     // loss weight = 1 / max(variance, var_floor)
  double divergence_fraction = 0.1;
  int patience = 0;            // cycles without RMSE-f improvement before stopping; 0 = off
  Architecture arch;
  InterpOptions interp;
  FilterConfig filter;
  std::uint64_t seed = 0;

  // Per-cycle scores (need truth).
  int eval_ics = 500;
  int lyap_steps = 10000;
  int lyap_transient = 1000;
  std::uint64_t eval_seed = 2;
  double forcing = 8.0;  // of the true model used for scoring

  void validate() const;
};

struct CycleRecord {
  int cycle = 0;                 // 0 is the interpolation-based initialization
  double rmse_f = std::numeric_limits<double>::quiet_NaN();
  double lambda1 = std::numeric_limits<double>::quiet_NaN();
  double train_loss = std::numeric_limits<double>::quiet_NaN();
  double rmse_a = std::numeric_limits<double>::quiet_NaN();
  double wall_seconds = 0.0;
  bool aborted = false;
  std::string note;
};

class HybridError : public std::runtime_error {
 public:
  HybridError(const std::string& what, std::vector<CycleRecord> history)
      : std::runtime_error(what), history_(std::move(history)) {}
  const std::vector<CycleRecord>& history() const { return history_; }

 private:
  std::vector<CycleRecord> history_;
};

/// Truth-based scoring shared by all cycles.
struct Evaluator {
  const Trajectory* truth = nullptr;
  ModelParams model;
  Eigen::MatrixXd ics;  // forecast initial conditions (independent truth run)

  Evaluator(const Trajectory* truth, const ModelParams& p, const HybridConfig& cfg);
  /// Fills rmse_f and lambda1 of the record for the given network.
  void score(const NetworkParameters& params, const HybridConfig& cfg, CycleRecord& rec) const;
};

/// Loss weights for initialization: 1 where observed, 0 elsewhere.
Eigen::MatrixXd mask_weights(const InterpolatedField& field);

/// Loss weights from analysis variances.
Eigen::MatrixXd variance_weights(const AnalysisSeries& analysis, double var_floor);

struct InitResult {
  NetworkParameters params;
  InterpolatedField field;
  std::vector<EpochLog> log;
};

/// Interpolates the observations and trains a fresh network on the field.
InitResult initialize_weights(const ObservationSeries& obs, const HybridConfig& cfg);

/// Trains a fresh network on a complete field with the given weights.
std::vector<EpochLog> train_on_field(NetworkParameters& params, const Eigen::MatrixXd& states,
                                     const Eigen::MatrixXd& weights, int epochs, int lead, double holdout,
                                     std::uint64_t seed, const HybridConfig& cfg);

struct CycleResult {
  NetworkParameters params;
  AnalysisSeries analysis;
  CycleRecord record;
};

/// One DA step with the current surrogate followed by one ML step on the
/// analysis. x0 seeds the initial ensemble. Aborted cycles return the input
/// parameters with record.aborted set.
CycleResult run_cycle(const NetworkParameters& params, const ObservationSeries& obs, const HybridConfig& cfg,
                      int cycle, const Eigen::VectorXd& x0, const Evaluator* eval);

struct HybridResult {
  NetworkParameters best;
  int best_cycle = 0;
  std::vector<CycleRecord> history;
};

struct HybridHooks {
  std::function<void(const CycleResult&)> on_cycle;
  std::function<void(const InitResult&)> on_init;
};

/// Initialization followed by cfg.cycles cycles. With truth, the returned
/// parameters are those with the lowest RMSE-f; otherwise the last ones.
HybridResult run_hybrid(const ObservationSeries& obs, const HybridConfig& cfg, const Trajectory* truth,
                        const HybridHooks& hooks = {});

/// Same, persisting a checkpoint per cycle under dir (weights, analysis,
/// history.csv, state.json) and resuming from the last completed cycle.
HybridResult run_hybrid_checkpointed(const ObservationSeries& obs, const HybridConfig& cfg, const Trajectory* truth,
                                     const std::string& dir);

/// Reference run on complete noise-free truth: DA is bypassed, so the
/// initialization and every cycle's ML step train on the truth states with
/// unit weights. Returns the parameters with the lowest RMSE-f.
HybridResult run_perfect(const Trajectory& truth, const HybridConfig& cfg, const HybridHooks& hooks = {});

void write_history_csv(const std::string& path, const std::vector<CycleRecord>& history);
std::vector<CycleRecord> read_history_csv(const std::string& path);

}  // namespace daml

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include "daml/enkf.hpp"
#include "daml/l96.hpp"
#include "daml/model.hpp"

namespace daml {

/// Spatiotemporal RMSE of fields (m x K, column k-1 is time k) against truth
/// states, over k = k0..K.
double rmse_a(const Eigen::MatrixXd& fields, const Trajectory& truth, int k0 = 100);
double rmse_a(const AnalysisSeries& analysis, const Trajectory& truth, int k0 = 100);

/// count states taken every stride steps from a fresh truth run of
/// count * stride steps (after spin-up), started from a seed-dependent state.
Eigen::MatrixXd forecast_ics(const ModelParams& p, std::uint64_t seed, int count = 500, int stride = 20);

struct ForecastScore {
  std::vector<double> rmse;    // entry i-1: lead i
  std::vector<double> ic_std;  // std over ICs of the per-IC RMSE
};

ForecastScore rmse_f(const Model& surrogate, const Model& truth, const Eigen::MatrixXd& ics, int max_lead);

double mean_state(const Eigen::MatrixXd& states);
inline double mean_state(const Trajectory& traj) { return mean_state(traj.states); }

/// steps applications of model from x0; the result holds steps+1 states.
Trajectory free_run(const Model& model, const Eigen::VectorXd& x0, int steps, double dt);

struct LyapunovOptions {
  int n_steps = 100000;
  int transient = 1000;   // steps before growth rates are accumulated
  int reorth_every = 1;
  int n_exponents = 0;    // 0: full spectrum
};

struct LyapunovSpectrum {
  std::vector<double> exponents;  // descending, per model-time unit
  int n_steps = 0;
};

LyapunovSpectrum lyapunov_spectrum(const Model& model, const Eigen::VectorXd& x0, double dt,
                                   const LyapunovOptions& opt = {});

struct PowerSpectrum {
  std::vector<double> frequencies;  // (0, fs/2]
  std::vector<double> densities;
  int segments = 0;
};

/// Welch estimate: Hann window, per-segment mean removal, one-sided density.
PowerSpectrum welch_psd(const Eigen::VectorXd& series, double fs = 20.0, int seg_len = 512, double overlap = 0.5);

/// sqrt(sum over the first n_lead exponents of the squared differences).
double rmse_lyapunov(const LyapunovSpectrum& a, const LyapunovSpectrum& b, int n_lead = 12);

/// One JSON object per line: {"metric", "params", "value", "std"}.
void append_metric(const std::string& path, const std::string& metric, const nlohmann::json& params, double value,
                   double std_dev = 0.0);

void write_forecast_csv(const std::string& path, const ForecastScore& score, double dt);
void write_psd_csv(const std::string& path, const PowerSpectrum& psd);
void write_spectrum_csv(const std::string& path, const LyapunovSpectrum& spec);

/// truth.csv, surrogate.csv and difference.csv (rows: time steps, columns: grid points).
void write_hovmoller(const std::string& dir, const Trajectory& truth, const Trajectory& surrogate);

}  // namespace daml

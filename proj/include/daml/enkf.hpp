#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "daml/model.hpp"
#include "daml/observations.hpp"
#include "daml/rng.hpp"

namespace daml {

struct Ensemble {
  Eigen::MatrixXd members;  // m x N, one member per column
  int k = 0;

  int dim() const { return static_cast<int>(members.rows()); }
  int size() const { return static_cast<int>(members.cols()); }
};

struct FilterConfig {
  int N = 30;
  double sigma_m = 0.1;
  std::uint64_t seed = 0;
  double init_spread = 1.0;

  void validate() const;
};

class FilterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// x0 plus i.i.d. N(0, spread^2) perturbations, N members, k = 0.
Ensemble init_ensemble(const Eigen::VectorXd& x0, int N, double spread, std::uint64_t seed);

/// Propagates every member one step and adds N(0, sigma_m^2) noise per component.
Ensemble forecast_ensemble(Ensemble ens, const Model& model, double sigma_m, Rng& rng);

struct AnalysisInfo {
  double zeta = 0.0;       // optimal dual variable, N / (eps_N + |w|^2)
  double w_norm = 0.0;     // |w*| in ensemble space
};

/// Finite-size (EnKF-N) analysis with a symmetric square-root transform.
Ensemble analysis_enkfn(const Ensemble& ens, const ObservationRecord& obs, double sigma_obs,
                        AnalysisInfo* info = nullptr);

struct EnsembleMoments {
  Eigen::VectorXd mean;
  Eigen::VectorXd var;  // unbiased, 1/(N-1)
};

EnsembleMoments ensemble_moments(const Ensemble& ens);

struct AnalysisSeries {
  Eigen::MatrixXd means;      // m x K, column k-1 holds time k
  Eigen::MatrixXd variances;  // m x K
  int N = 0;
  double sigma_m = 0.0;
  std::uint64_t seed = 0;

  int dim() const { return static_cast<int>(means.rows()); }
  int steps() const { return static_cast<int>(means.cols()); }
  void validate() const;
};

/// Forecast/analysis over k = 1..K. on_step (if set) sees each analysis ensemble.
AnalysisSeries run_filter(const Model& model, const ObservationSeries& obs, const FilterConfig& cfg, Ensemble init,
                          const std::function<void(const Ensemble&, const AnalysisInfo&)>& on_step = {});

void write_analysis(const std::string& path, const AnalysisSeries& series);
AnalysisSeries read_analysis(const std::string& path);
void write_analysis_csv(const std::string& path, const AnalysisSeries& series);

}  // namespace daml

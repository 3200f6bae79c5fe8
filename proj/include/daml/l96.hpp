#pragma once

#include <string>

#include <Eigen/Dense>

#include "daml/model.hpp"

namespace daml {

struct ModelParams {
  int m = 40;
  double forcing = 8.0;
  double dt = 0.05;

  void validate() const;
};

// Time-ordered states, one column per step, uniform spacing dt.
struct Trajectory {
  Eigen::MatrixXd states;  // m x (K+1)
  double dt = 0.05;

  int dim() const { return static_cast<int>(states.rows()); }
  int steps() const { return static_cast<int>(states.cols()) - 1; }
  Eigen::VectorXd state(int k) const { return states.col(k); }
};

/// dx/dt of the Lorenz-96 system, periodic indices.
Eigen::VectorXd l96_tendency(const Eigen::VectorXd& x, const ModelParams& p);

/// One classical RK4 step of length p.dt. Throws IntegrationError on
/// non-finite output.
Eigen::VectorXd rk4_step(const Eigen::VectorXd& x, const ModelParams& p);

/// Exact Jacobian of rk4_step at x applied to each column of dirs.
Eigen::MatrixXd tangent_step(const Eigen::VectorXd& x, const Eigen::MatrixXd& dirs,
                             const ModelParams& p);

/// Integrates spinup steps (discarded), then records K+1 states.
Trajectory generate_truth(const Eigen::VectorXd& x0, int K, const ModelParams& p,
                          int spinup = 1000);

class L96Model final : public Model {
 public:
  explicit L96Model(ModelParams p);

  int dim() const override { return params_.m; }
  void advance(Eigen::Ref<Eigen::MatrixXd> states) const override;
  Eigen::MatrixXd tangent(const Eigen::VectorXd& x, const Eigen::MatrixXd& dirs) const override;
  std::string name() const override { return "l96"; }

  const ModelParams& params() const { return params_; }

 private:
  ModelParams params_;
};

void write_trajectory(const std::string& path, const Trajectory& traj);
Trajectory read_trajectory(const std::string& path);
void write_trajectory_csv(const std::string& path, const Trajectory& traj);

}  // namespace daml

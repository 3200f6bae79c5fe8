#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace daml {

// Blow-up during time stepping (non-finite state).
class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A discrete-time map on R^m, as used by the filter, the forecast scores
// and the Lyapunov analysis.
class Model {
 public:
  virtual ~Model() = default;

  virtual int dim() const = 0;

  /// Advances every column of states by one step, in place.
  virtual void advance(Eigen::Ref<Eigen::MatrixXd> states) const = 0;

  /// Jacobian of the one-step map at x applied to each column of dirs.
  virtual Eigen::MatrixXd tangent(const Eigen::VectorXd& x,
                                  const Eigen::MatrixXd& dirs) const = 0;

  virtual std::string name() const = 0;

  Eigen::VectorXd step(const Eigen::VectorXd& x) const {
    Eigen::MatrixXd s = x;
    advance(s);
    return s.col(0);
  }
};

}  // namespace daml

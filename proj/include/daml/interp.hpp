#pragma once

#include <string>

#include <Eigen/Dense>

#include "daml/l96.hpp"
#include "daml/observations.hpp"

namespace daml {

enum class InterpScheme {
  kSpaceTime,  // scattered cubic over the (k, n) lattice, periodic in n
  kTime,       // natural cubic spline in k, independently per grid point
};

struct InterpOptions {
  InterpScheme scheme = InterpScheme::kSpaceTime;
  int chunk = 1000;  // time steps triangulated together
  int halo = 12;     // extra steps on each side of a chunk
  int pad = 6;       // periodic copies of this many columns on each side
};

using BoolMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

struct InterpolatedField {
  Eigen::MatrixXd states;  // m x K, column k-1 holds time k
  BoolMatrix observed;     // m x K

  int dim() const { return static_cast<int>(states.rows()); }
  int steps() const { return static_cast<int>(states.cols()); }
};

InterpScheme parse_interp_scheme(const std::string& name);
std::string to_string(InterpScheme scheme);

/// Complete m x K field from sparse observations. Observed entries are passed
/// through unchanged. Throws if a grid point is observed at fewer than 4 times.
InterpolatedField cubic_interpolate(const ObservationSeries& obs, const InterpOptions& opt = {});

/// Spatio-temporal RMSE of the field against truth states 1..K.
double field_rmse(const InterpolatedField& field, const Trajectory& truth);

/// Writes the field as a trajectory file (dt as given, K-1 steps) plus a
/// packed bit mask file.
void write_interpolated(const std::string& traj_path, const std::string& mask_path, const InterpolatedField& field,
                        double dt);
InterpolatedField read_interpolated(const std::string& traj_path, const std::string& mask_path);

}  // namespace daml

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "daml/l96.hpp"

namespace daml {

struct ObservationRecord {
  int k = 0;
  std::vector<int> indices;  // distinct, ascending, in [0, m)
  Eigen::VectorXd values;
};

struct ObservationSeries {
  int m = 0;
  double sigma_obs = 0.0;
  std::uint64_t seed = 0;
  std::vector<ObservationRecord> records;  // k = 1..K

  int steps() const { return static_cast<int>(records.size()); }
  int per_step() const { return records.empty() ? 0 : static_cast<int>(records.front().indices.size()); }
  const ObservationRecord& at(int k) const { return records.at(static_cast<std::size_t>(k - 1)); }

  void validate() const;
};

/// Sub-vector of x at the given (distinct, in-range) indices.
Eigen::VectorXd apply_H(const Eigen::VectorXd& x, std::span<const int> indices);

/// Fresh draw of p distinct locations at each k = 1..K, plus N(0, sigma_obs^2)
/// noise. Locations and noise come from separate streams of the seed.
ObservationSeries sample_observations(const Trajectory& truth, int p, double sigma_obs, std::uint64_t seed);

void write_observations(const std::string& path, const ObservationSeries& obs);
ObservationSeries read_observations(const std::string& path);
void write_observations_csv(const std::string& path, const ObservationSeries& obs);

}  // namespace daml

#pragma once

#include <array>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace daml {

struct LatticePoint {
  int x = 0;
  int y = 0;
};

// C1 piecewise-cubic interpolant of scattered data on integer sites:
// Delaunay triangulation, vertex gradients from a global curvature-minimizing
// fit, and a Clough-Tocher split of every triangle. Cross-edge derivatives
// along each edge normal are linear, which makes adjacent elements agree.
class CloughTocher2D {
 public:
  CloughTocher2D(std::vector<LatticePoint> sites, std::vector<double> values,
                 int max_sweeps = 400, double tol = 1e-6);

  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
  const std::vector<Eigen::Vector2d>& gradients() const { return gradients_; }
  const std::vector<LatticePoint>& sites() const { return sites_; }

  /// Value inside triangle t at (x, y); the point should lie in the triangle.
  double evaluate_in(int t, double x, double y) const;

  /// Value at (x, y), or nullopt outside the convex hull. Linear search, for tests.
  std::optional<double> evaluate(double x, double y) const;

  /// Barycentric coordinates of (x, y) with respect to triangle t.
  std::array<double, 3> barycentric(int t, double x, double y) const;

  /// Overrides the estimated gradients (tests use exact gradients).
  void set_gradients(std::vector<Eigen::Vector2d> g) { gradients_ = std::move(g); }

 private:
  void triangulate();
  void estimate_gradients(int max_sweeps, double tol);

  std::vector<LatticePoint> sites_;
  std::vector<double> values_;
  std::vector<std::array<int, 3>> triangles_;  // counter-clockwise
  std::vector<Eigen::Vector2d> gradients_;
};

}  // namespace daml

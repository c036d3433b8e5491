#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropkit/ext_real.hpp"

namespace tropkit {

// Finite weak metric: delta(x,x) = 0, triangle inequality, and the
// symmetrization delta(x,y) + delta(y,x) is a metric (positive off the
// diagonal). Symmetry itself is not required. Approximate instances (values
// that went through a floating-point computation) validate the triangle
// inequality within a 1e-9 tolerance; exact instances validate exactly.
class WeakMetric {
 public:
  WeakMetric(std::vector<std::string> points, std::vector<std::vector<Rational>> delta,
             bool approximate = false);

  const std::vector<std::string>& points() const { return points_; }
  size_t size() const { return points_.size(); }
  const Rational& at(size_t i, size_t j) const { return delta_.at(i).at(j); }
  const std::vector<std::vector<Rational>>& delta() const { return delta_; }
  bool approximate() const { return approximate_; }
  bool is_symmetric() const;

 private:
  std::vector<std::string> points_;
  std::vector<std::vector<Rational>> delta_;
  bool approximate_;
};

// Tolerance used when validating approximate metric data.
Rational approx_tolerance();

// Reverse Funk weak metric on positive vectors of unit coordinate sum:
// delta(x,y) = log max_i (y_i / x_i).
//
// With `log_base` set, every coordinate ratio must be an integer power of the
// base (> 1), and the result stores base-beta logarithms: exact integers, in
// units of log(beta). Without a base, natural logarithms are computed through
// double precision and the result is flagged approximate.
WeakMetric funk_weak_metric(const std::vector<std::string>& labels,
                            const std::vector<std::vector<Rational>>& points,
                            const std::optional<Rational>& log_base = std::nullopt);

// All-pairs shortest-path metric of an undirected weighted graph. Edge
// weights must be positive; the graph must be connected.
struct Edge {
  std::string a, b;
  Rational w;
};
WeakMetric shortest_path_metric(const std::vector<std::string>& labels,
                                const std::vector<Edge>& edges);

}  // namespace tropkit

#include "tropkit/metric.hpp"

#include <cmath>
#include <set>

#include "tropkit/errors.hpp"

namespace tropkit {

Rational approx_tolerance() { return Rational(1, 1000000000); }

WeakMetric::WeakMetric(std::vector<std::string> points,
                       std::vector<std::vector<Rational>> delta, bool approximate)
    : points_(std::move(points)), delta_(std::move(delta)), approximate_(approximate) {
  if (points_.empty()) throw validation_error("empty point set");
  std::set<std::string> seen(points_.begin(), points_.end());
  if (seen.size() != points_.size()) throw validation_error("duplicate point label");
  if (delta_.size() != points_.size())
    throw validation_error("weak metric row count does not match point count");
  for (const auto& r : delta_)
    if (r.size() != points_.size())
      throw validation_error("weak metric column count does not match point count");
  const Rational tol = approximate_ ? approx_tolerance() : Rational(0);
  for (size_t i = 0; i < size(); ++i)
    if (delta_[i][i] != 0)
      throw validation_error("weak metric has nonzero value at (" + points_[i] + "," +
                             points_[i] + ")");
  for (size_t i = 0; i < size(); ++i)
    for (size_t j = 0; j < size(); ++j)
      for (size_t k = 0; k < size(); ++k)
        if (delta_[i][k] > delta_[i][j] + delta_[j][k] + tol)
          throw validation_error("triangle inequality fails at (" + points_[i] + "," +
                                 points_[j] + "," + points_[k] + ")");
  for (size_t i = 0; i < size(); ++i)
    for (size_t j = i + 1; j < size(); ++j)
      if (delta_[i][j] + delta_[j][i] <= 0)
        throw validation_error("symmetrization is not positive at (" + points_[i] + "," +
                               points_[j] + ")");
}

bool WeakMetric::is_symmetric() const {
  for (size_t i = 0; i < size(); ++i)
    for (size_t j = i + 1; j < size(); ++j)
      if (delta_[i][j] != delta_[j][i]) return false;
  return true;
}

namespace {

// Integer k with ratio == base^k, if one exists.
std::optional<long> power_of(const Rational& ratio, const Rational& base) {
  if (ratio == 1) return 0;
  Rational r = ratio;
  if (r > 1) {
    long k = 0;
    while (r > 1) {
      r /= base;
      ++k;
      if (k > 4096) return std::nullopt;
    }
    return r == 1 ? std::optional<long>(k) : std::nullopt;
  }
  long k = 0;
  while (r < 1) {
    r *= base;
    --k;
    if (k < -4096) return std::nullopt;
  }
  return r == 1 ? std::optional<long>(k) : std::nullopt;
}

}  // namespace

WeakMetric funk_weak_metric(const std::vector<std::string>& labels,
                            const std::vector<std::vector<Rational>>& points,
                            const std::optional<Rational>& log_base) {
  if (labels.size() != points.size())
    throw validation_error("label count does not match point count");
  if (points.empty()) throw validation_error("empty point set");
  const size_t dim = points[0].size();
  if (dim == 0) throw validation_error("zero-dimensional point");
  for (size_t p = 0; p < points.size(); ++p) {
    if (points[p].size() != dim) throw validation_error("points of mixed dimension");
    Rational sum = 0;
    for (const Rational& c : points[p]) {
      if (c <= 0)
        throw validation_error("nonpositive coordinate in point " + labels[p]);
      sum += c;
    }
    if (sum != 1)
      throw validation_error("point " + labels[p] + " does not have unit coordinate sum");
  }
  if (log_base && *log_base <= 1)
    throw validation_error("log base must be greater than 1");

  const size_t n = points.size();
  std::vector<std::vector<Rational>> delta(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Rational best = points[j][0] / points[i][0];
      for (size_t c = 1; c < dim; ++c) best = std::max(best, Rational(points[j][c] / points[i][c]));
      if (best == 1) {
        delta[i][j] = 0;
      } else if (log_base) {
        auto k = power_of(best, *log_base);
        if (!k)
          throw validation_error("coordinate ratio " + to_string(best) +
                                 " is not an integer power of the log base");
        delta[i][j] = Rational(*k);
      } else {
        delta[i][j] = Rational(std::log(best.convert_to<double>()));
      }
    }
  return WeakMetric(labels, std::move(delta), !log_base.has_value());
}

WeakMetric shortest_path_metric(const std::vector<std::string>& labels,
                                const std::vector<Edge>& edges) {
  const size_t n = labels.size();
  if (n == 0) throw validation_error("empty point set");
  auto index = [&](const std::string& l) -> size_t {
    for (size_t i = 0; i < n; ++i)
      if (labels[i] == l) return i;
    throw validation_error("edge endpoint is not a listed point: " + l);
  };
  std::vector<std::vector<ExtReal>> d(n, std::vector<ExtReal>(n, ExtReal::pos_inf()));
  for (size_t i = 0; i < n; ++i) d[i][i] = ExtReal(0);
  for (const Edge& e : edges) {
    if (e.w <= 0) throw validation_error("nonpositive edge weight");
    size_t a = index(e.a), b = index(e.b);
    if (a == b) throw validation_error("self-loop edge at " + e.a);
    d[a][b] = min(d[a][b], ExtReal(e.w));
    d[b][a] = min(d[b][a], ExtReal(e.w));
  }
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (d[i][k].is_pos_inf() || d[k][j].is_pos_inf()) continue;
        ExtReal via(d[i][k].value() + d[k][j].value());
        d[i][j] = min(d[i][j], via);
      }
  std::vector<std::vector<Rational>> delta(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (d[i][j].is_pos_inf())
        throw validation_error("graph is not connected: no path " + labels[i] + " -> " +
                               labels[j]);
      delta[i][j] = d[i][j].value();
    }
  return WeakMetric(labels, std::move(delta));
}

}  // namespace tropkit

#include "tropkit/factories.hpp"

#include <cmath>

namespace tropkit {

namespace {

using Int = boost::multiprecision::cpp_int;

// Largest r with r^n <= v, by binary search.
Int integer_nth_root(const Int& v, unsigned n) {
  if (v < 0) throw validation_error("nth root of a negative integer");
  if (v <= 1 || n == 1) return v;
  Int lo = 0, hi = v;
  while (lo < hi) {
    Int mid = (lo + hi + 1) / 2;
    Int p = 1;
    bool over = false;
    for (unsigned k = 0; k < n; ++k) {
      p *= mid;
      if (p > v) {
        over = true;
        break;
      }
    }
    if (over)
      hi = mid - 1;
    else
      lo = mid;
  }
  return lo;
}

Int int_pow(Int base, unsigned e) {
  Int r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace

Rational rational_pow(const Rational& x, const Rational& p, bool* exact) {
  if (x < 0) throw validation_error("rational_pow requires a nonnegative base");
  if (p <= 0 || p > 1) throw validation_error("exponent must lie in (0, 1]");
  if (exact) *exact = true;
  if (x == 0 || x == 1 || p == 1) return x;
  const Int pn = numerator(p);
  const Int pd = denominator(p);
  if (pn <= 16 && pd <= 16) {
    const unsigned n = pn.convert_to<unsigned>();
    const unsigned d = pd.convert_to<unsigned>();
    Int num = int_pow(numerator(x), n);
    Int den = int_pow(denominator(x), n);
    Int rn = integer_nth_root(num, d);
    Int rd = integer_nth_root(den, d);
    if (int_pow(rn, d) == num && int_pow(rd, d) == den) return Rational(rn, rd);
  }
  if (exact) *exact = false;
  double approx = std::pow(x.convert_to<double>(), p.convert_to<double>());
  return Rational(approx);
}

Kernel from_metric(const WeakMetric& d, const Rational& p) {
  if (!d.is_symmetric()) throw validation_error("from_metric requires a symmetric metric");
  if (p <= 0 || p > 1) throw validation_error("exponent must lie in (0, 1]");
  bool all_exact = true;
  const size_t n = d.size();
  std::vector<std::vector<ExtReal>> entries(n, std::vector<ExtReal>(n, ExtReal(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      bool exact = true;
      entries[i][j] = ExtReal(-rational_pow(d.at(i, j), p, &exact));
      all_exact &= exact;
    }
  return Kernel(d.points(), d.points(), std::move(entries), d.approximate() || !all_exact);
}

Kernel from_weak_metric(const WeakMetric& delta) {
  const size_t n = delta.size();
  std::vector<std::vector<ExtReal>> entries(n, std::vector<ExtReal>(n, ExtReal(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) entries[i][j] = ExtReal(-delta.at(i, j));
  return Kernel(delta.points(), delta.points(), std::move(entries), delta.approximate());
}

namespace {

void check_points(const std::vector<std::string>& labels,
                  const std::vector<std::vector<Rational>>& points) {
  if (labels.size() != points.size())
    throw validation_error("label count does not match point count");
  if (points.empty()) throw validation_error("empty point set");
  for (const auto& p : points)
    if (p.size() != points[0].size()) throw validation_error("points of mixed dimension");
  if (points[0].empty()) throw validation_error("zero-dimensional point");
}

}  // namespace

Kernel inner_product_kernel(const std::vector<std::string>& x_labels,
                            const std::vector<std::vector<Rational>>& x_points,
                            const std::vector<std::string>& y_labels,
                            const std::vector<std::vector<Rational>>& y_points) {
  check_points(x_labels, x_points);
  check_points(y_labels, y_points);
  if (x_points[0].size() != y_points[0].size())
    throw validation_error("primal and dual points have different dimension");
  std::vector<std::vector<ExtReal>> entries(x_points.size(),
                                            std::vector<ExtReal>(y_points.size(), ExtReal(0)));
  for (size_t i = 0; i < x_points.size(); ++i)
    for (size_t j = 0; j < y_points.size(); ++j) {
      Rational dot = 0;
      for (size_t c = 0; c < x_points[i].size(); ++c) dot += x_points[i][c] * y_points[j][c];
      entries[i][j] = ExtReal(dot);
    }
  return Kernel(x_labels, y_labels, std::move(entries));
}

Kernel semiconvex_kernel(const std::vector<std::string>& labels,
                         const std::vector<std::vector<Rational>>& points,
                         const Rational& c) {
  check_points(labels, points);
  if (c <= 0) throw validation_error("semiconvex constant must be positive");
  std::vector<std::vector<ExtReal>> entries(points.size(),
                                            std::vector<ExtReal>(points.size(), ExtReal(0)));
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = 0; j < points.size(); ++j) {
      Rational sq = 0;
      for (size_t k = 0; k < points[i].size(); ++k) {
        Rational diff = points[i][k] - points[j][k];
        sq += diff * diff;
      }
      entries[i][j] = ExtReal(-(c / 2) * sq);
    }
  return Kernel(labels, labels, std::move(entries));
}

Kernel dirac_kernel(const std::vector<std::string>& labels) {
  std::vector<std::vector<ExtReal>> entries(labels.size(),
                                            std::vector<ExtReal>(labels.size(),
                                                                 ExtReal::neg_inf()));
  for (size_t i = 0; i < labels.size(); ++i) entries[i][i] = ExtReal(0);
  return Kernel(labels, labels, std::move(entries));
}

}  // namespace tropkit

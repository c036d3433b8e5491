#pragma once

#include "tropkit/kernel.hpp"
#include "tropkit/metric.hpp"

namespace tropkit {

// b(x,y) = -d(x,y)^p for a symmetric metric d and exponent p in (0,1].
// The kernel is exact when every d(x,y)^p is rational (always for p = 1);
// otherwise entries are deterministic rational approximations and the kernel
// is flagged approximate. Either way -d^p is strictly negative off the
// diagonal, so strict tropical monotonicity is preserved exactly.
Kernel from_metric(const WeakMetric& d, const Rational& p);

// b(x,y) = -delta(x,y) for a weak metric delta.
Kernel from_weak_metric(const WeakMetric& delta);

// b(x,y) = <x, y> on rational point lists (rows: primal, columns: dual).
Kernel inner_product_kernel(const std::vector<std::string>& x_labels,
                            const std::vector<std::vector<Rational>>& x_points,
                            const std::vector<std::string>& y_labels,
                            const std::vector<std::vector<Rational>>& y_points);

// b(x,y) = -(c/2) * |x - y|^2 on a single rational point list.
Kernel semiconvex_kernel(const std::vector<std::string>& labels,
                         const std::vector<std::vector<Rational>>& points,
                         const Rational& c);

// b(x,y) = 0 if x == y, -inf otherwise.
Kernel dirac_kernel(const std::vector<std::string>& labels);

// x^p as an exact rational when possible (p = 1, or p = k/2 on perfect
// squares); otherwise a deterministic dyadic approximation of the double
// result. `exact` reports which path was taken. Requires x >= 0.
Rational rational_pow(const Rational& x, const Rational& p, bool* exact = nullptr);

}  // namespace tropkit

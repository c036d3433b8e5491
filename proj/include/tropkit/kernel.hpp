#pragma once

#include <string>
#include <vector>

#include "tropkit/trop_vector.hpp"

namespace tropkit {

// Two-argument kernel b : X x Y -> R u {-inf}. Entries never take +inf, and
// every row and every column carries at least one finite entry (properness).
// The `approximate` flag marks kernels whose entries were produced by a
// floating-point path; values are still exact rationals, but validation of
// metric-like inputs downstream uses a 1e-9 tolerance.
class Kernel {
 public:
  Kernel(std::vector<std::string> x_points, std::vector<std::string> y_points,
         std::vector<std::vector<ExtReal>> entries, bool approximate = false);

  const std::vector<std::string>& x_points() const { return x_points_; }
  const std::vector<std::string>& y_points() const { return y_points_; }
  size_t rows() const { return x_points_.size(); }
  size_t cols() const { return y_points_.size(); }
  bool approximate() const { return approximate_; }

  const ExtReal& at(size_t i, size_t j) const { return entries_.at(i).at(j); }
  const std::vector<std::vector<ExtReal>>& entries() const { return entries_; }

  // Row i as a vector over Y; column j as a vector over X.
  TropVector row(size_t i) const;
  TropVector column(size_t j) const;
  size_t x_index(const std::string& label) const;
  size_t y_index(const std::string& label) const;

  Kernel transposed() const;
  // Restriction to a subset of columns (kept in input order). The result must
  // still be proper; throws otherwise.
  Kernel sub_columns(const std::vector<std::string>& labels) const;

  bool has_minus_inf() const;

  friend bool operator==(const Kernel& a, const Kernel& b) {
    return a.x_points_ == b.x_points_ && a.y_points_ == b.y_points_ &&
           a.entries_ == b.entries_;
  }

 private:
  std::vector<std::string> x_points_, y_points_;
  std::vector<std::vector<ExtReal>> entries_;
  bool approximate_;
};

// Coefficient vector over Y used to form sup-combinations of columns. Values
// live in [-inf, +inf); `checked` enforces that, `raw` skips the check for
// internally produced coefficients (residuation can yield +inf only when the
// argument is +inf on a column's whole support, and then clipping would break
// combine(residual(h)) == project(h); see residual_coefficients).
class CoefficientVector {
 public:
  static CoefficientVector checked(TropVector v);
  static CoefficientVector raw(TropVector v) { return CoefficientVector(std::move(v)); }
  const TropVector& vec() const { return vec_; }

 private:
  explicit CoefficientVector(TropVector v) : vec_(std::move(v)) {}
  TropVector vec_;
};

// (Bf)(x) = sup_y lower_add(b(x,y), -f(y)); f is over Y, the result over X.
TropVector conjugate(const Kernel& b, const TropVector& f);

// Transposed conjugation: (B°h)(y) = sup_x lower_add(b(x,y), -h(x)).
TropVector transpose_conjugate(const Kernel& b, const TropVector& h);

// B(B°(h)): the greatest element of Rg(B) below h. Deflationary, monotone,
// idempotent.
TropVector project(const Kernel& b, const TropVector& h);

// h lies in Rg(B) iff the projection fixes it.
bool range_membership(const Kernel& b, const TropVector& h);

// sup_y lower_add(a_y, b(.,y)).
TropVector combine(const Kernel& b, const CoefficientVector& a);

// negate(B°h): the greatest coefficients a with combine(b, a) <= h, and
// combine(b, residual_coefficients(b, h)) == project(b, h) exactly.
CoefficientVector residual_coefficients(const Kernel& b, const TropVector& h);

// e_x = B b(x,.): the greatest range element vanishing at x.
TropVector e_x_vector(const Kernel& b, const std::string& x_label);
std::vector<TropVector> e_x_family(const Kernel& b);

// Whether h equals inf_x upper_add(e_x, h(x)). Terms with h(x) = +inf are
// +inf and drop out of the infimum, so the effective index set is the domain
// of h; upper addition is what makes the identity hold on range elements with
// -inf coordinates.
bool in_inf_closure(const Kernel& b, const TropVector& h);

// Square and entrywise symmetric (b(x,y) == b(y,x) after matching labels).
bool is_symmetric(const Kernel& b);

// Samples the anti-involution laws on Rg(B): B(B(f)) == f for f = combine(a),
// order reversal on comparable sampled pairs, and B(f + lambda) == B(f) - lambda
// for a few finite lambda. Returns false on the first violation; if `witness`
// is non-null it receives the offending range element.
bool check_anti_involution(const Kernel& b, const std::vector<CoefficientVector>& samples,
                           TropVector* witness = nullptr);

// b(x,x) + b(y,y) >= b(x,y) + b(y,x) with equality exactly on the diagonal
// (sums with -inf absorbing).
bool strict_trop_monotone(const Kernel& b);

}  // namespace tropkit

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropkit/ext_real.hpp"

namespace tropkit {

// Function from a finite labeled point set to the extended reals. Point order
// is the input order and is preserved by every operation.
class TropVector {
 public:
  TropVector() = default;
  TropVector(std::vector<std::string> points, std::vector<ExtReal> values);

  static TropVector constant(const std::vector<std::string>& points, const ExtReal& v);
  // 0 at the marked point, +inf elsewhere.
  static TropVector dirac_top(const std::vector<std::string>& points, const std::string& at);
  // 0 at the marked point, -inf elsewhere.
  static TropVector dirac_bottom(const std::vector<std::string>& points, const std::string& at);

  size_t size() const { return values_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::vector<ExtReal>& values() const { return values_; }
  const ExtReal& at(size_t i) const { return values_.at(i); }
  void set(size_t i, ExtReal v) { values_.at(i) = std::move(v); }

  size_t index_of(const std::string& label) const;  // throws on unknown label
  const ExtReal& value_of(const std::string& label) const { return values_[index_of(label)]; }

  bool same_points(const TropVector& other) const { return points_ == other.points_; }
  bool all_finite() const;
  bool has(const ExtReal& v) const;

  // Same function presented over a permutation of its point labels.
  TropVector reindexed(const std::vector<std::string>& order) const;

  friend bool operator==(const TropVector& a, const TropVector& b) {
    return a.points_ == b.points_ && a.values_ == b.values_;
  }
  friend bool operator!=(const TropVector& a, const TropVector& b) { return !(a == b); }

 private:
  std::vector<std::string> points_;
  std::vector<ExtReal> values_;
};

// Coordinatewise lattice operations; all vectors must share the same point list.
TropVector pointwise_sup(const std::vector<TropVector>& fs);
TropVector pointwise_inf(const std::vector<TropVector>& fs);
TropVector pointwise_sup(const TropVector& f, const TropVector& g);
TropVector pointwise_inf(const TropVector& f, const TropVector& g);

// Coordinatewise scalar shift in the chosen convention.
TropVector lower_add(const TropVector& f, const ExtReal& lambda);
TropVector upper_add(const TropVector& f, const ExtReal& lambda);
// Coordinatewise f - g with -inf absorbing.
TropVector lower_sub(const TropVector& f, const TropVector& g);
TropVector negate(const TropVector& f);

// max_i f(i) - min_j f(j). Requires every value finite.
Rational hilbert_seminorm(const TropVector& f);
// Hilbert seminorm of the coordinatewise difference f - g.
Rational hilbert_distance(const TropVector& f, const TropVector& g);

bool leq(const TropVector& f, const TropVector& g);  // coordinatewise order

struct ArchClassOrder {
  bool leq = false;
  // Least finite alpha with f <= g + alpha when one exists and the comparison
  // holds; 0 when the comparison holds vacuously (no coordinate binds).
  std::optional<ExtReal> witness_alpha;
};

// Archimedean preorder: f <~ g iff f <= g + alpha for some finite alpha,
// the shift taken with -inf absorbing.
ArchClassOrder archimedean_leq(const TropVector& f, const TropVector& g);

std::string to_string(const TropVector& f);

}  // namespace tropkit

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "tropkit/errors.hpp"

namespace tropkit {

using Rational = boost::multiprecision::cpp_rational;

// Element of the extended real line R u {-inf, +inf}.
// Finite values are exact rationals; infinities carry no payload.
class ExtReal {
 public:
  ExtReal() : kind_(Kind::finite), value_(0) {}
  ExtReal(int v) : kind_(Kind::finite), value_(v) {}            // NOLINT: implicit by design
  ExtReal(long long v) : kind_(Kind::finite), value_(v) {}      // NOLINT
  ExtReal(Rational v) : kind_(Kind::finite), value_(std::move(v)) {}  // NOLINT

  static ExtReal neg_inf() { return ExtReal(Kind::neg_inf); }
  static ExtReal pos_inf() { return ExtReal(Kind::pos_inf); }
  // Exact conversion: a double is a dyadic rational (infinities map to the
  // corresponding infinite element, NaN is rejected).
  static ExtReal from_double(double v);

  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_neg_inf() const { return kind_ == Kind::neg_inf; }
  bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
  bool is_infinite() const { return kind_ != Kind::finite; }

  // Finite payload; throws on infinities.
  const Rational& value() const {
    if (!is_finite()) throw validation_error("ExtReal::value on an infinite element");
    return value_;
  }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Kind::finite || a.value_ == b.value_;
  }
  friend bool operator!=(const ExtReal& a, const ExtReal& b) { return !(a == b); }
  friend bool operator<(const ExtReal& a, const ExtReal& b) {
    if (a.kind_ != b.kind_) return rank(a.kind_) < rank(b.kind_);
    return a.kind_ == Kind::finite && a.value_ < b.value_;
  }
  friend bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
  friend bool operator<=(const ExtReal& a, const ExtReal& b) { return !(b < a); }
  friend bool operator>=(const ExtReal& a, const ExtReal& b) { return !(a < b); }

 private:
  enum class Kind { neg_inf, finite, pos_inf };
  explicit ExtReal(Kind k) : kind_(k), value_(0) {}
  static int rank(Kind k) { return k == Kind::neg_inf ? 0 : (k == Kind::finite ? 1 : 2); }

  Kind kind_;
  Rational value_;
};

// Addition with -inf absorbing: the result is -inf as soon as one argument is
// -inf; otherwise +inf dominates a finite value.
ExtReal lower_add(const ExtReal& a, const ExtReal& b);

// Addition with +inf absorbing: dual convention.
ExtReal upper_add(const ExtReal& a, const ExtReal& b);

// Order-reversing negation, swapping the infinities.
ExtReal negate(const ExtReal& a);

// a - b in the lower-addition convention: lower_add(a, negate(b)).
ExtReal lower_sub(const ExtReal& a, const ExtReal& b);

ExtReal min(const ExtReal& a, const ExtReal& b);
ExtReal max(const ExtReal& a, const ExtReal& b);
ExtReal abs(const ExtReal& a);

// Canonical text form: "-inf", "+inf", integers as "5", other rationals as "p/q".
std::string to_string(const ExtReal& a);
std::string to_string(const Rational& r);

// Accepts "-inf", "inf"/"+inf", optional-sign integers, "p/q" fractions and
// decimal literals ("2.5" parses to 5/2, exactly).
ExtReal parse_ext_real(std::string_view text);
Rational parse_rational(std::string_view text);

}  // namespace tropkit

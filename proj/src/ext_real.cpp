#include "tropkit/ext_real.hpp"

#include <cmath>

namespace tropkit {

ExtReal ExtReal::from_double(double v) {
  if (std::isnan(v)) throw validation_error("cannot convert NaN to ExtReal");
  if (std::isinf(v)) return v > 0 ? pos_inf() : neg_inf();
  return ExtReal(Rational(v));
}

ExtReal lower_add(const ExtReal& a, const ExtReal& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return ExtReal::neg_inf();
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtReal::pos_inf();
  return ExtReal(a.value() + b.value());
}

ExtReal upper_add(const ExtReal& a, const ExtReal& b) {
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtReal::pos_inf();
  if (a.is_neg_inf() || b.is_neg_inf()) return ExtReal::neg_inf();
  return ExtReal(a.value() + b.value());
}

ExtReal negate(const ExtReal& a) {
  if (a.is_neg_inf()) return ExtReal::pos_inf();
  if (a.is_pos_inf()) return ExtReal::neg_inf();
  return ExtReal(-a.value());
}

ExtReal lower_sub(const ExtReal& a, const ExtReal& b) { return lower_add(a, negate(b)); }

ExtReal min(const ExtReal& a, const ExtReal& b) { return a < b ? a : b; }
ExtReal max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }
ExtReal abs(const ExtReal& a) { return a < ExtReal(0) ? negate(a) : a; }

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_string(const ExtReal& a) {
  if (a.is_neg_inf()) return "-inf";
  if (a.is_pos_inf()) return "+inf";
  return to_string(a.value());
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw validation_error("empty numeric literal");
  bool neg = false;
  size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    pos = 1;
  }
  std::string body = s.substr(pos);
  Rational result;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw validation_error("bad rational literal: " + s);
    boost::multiprecision::cpp_int d(den);
    if (d == 0) throw validation_error("zero denominator in literal: " + s);
    result = Rational(boost::multiprecision::cpp_int(num), d);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string ip = body.substr(0, dot);
    std::string fp = body.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!all_digits(ip) || !all_digits(fp))
      throw validation_error("bad decimal literal: " + s);
    boost::multiprecision::cpp_int scale = 1;
    for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
    boost::multiprecision::cpp_int combined =
        boost::multiprecision::cpp_int(ip) * scale +
        (fp.empty() ? boost::multiprecision::cpp_int(0) : boost::multiprecision::cpp_int(fp));
    result = Rational(combined, scale);
  } else {
    if (!all_digits(body)) throw validation_error("bad integer literal: " + s);
    result = Rational(boost::multiprecision::cpp_int(body));
  }
  return neg ? -result : result;
}

ExtReal parse_ext_real(std::string_view text) {
  if (text == "-inf") return ExtReal::neg_inf();
  if (text == "+inf" || text == "inf") return ExtReal::pos_inf();
  return ExtReal(parse_rational(text));
}

}  // namespace tropkit

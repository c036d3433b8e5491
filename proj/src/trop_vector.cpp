#include "tropkit/trop_vector.hpp"

#include <algorithm>
#include <set>

namespace tropkit {

TropVector::TropVector(std::vector<std::string> points, std::vector<ExtReal> values)
    : points_(std::move(points)), values_(std::move(values)) {
  if (points_.size() != values_.size())
    throw validation_error("point list and value list differ in length");
  if (points_.empty()) throw validation_error("empty point set");
  std::set<std::string> seen(points_.begin(), points_.end());
  if (seen.size() != points_.size()) throw validation_error("duplicate point label");
}

TropVector TropVector::constant(const std::vector<std::string>& points, const ExtReal& v) {
  return TropVector(points, std::vector<ExtReal>(points.size(), v));
}

TropVector TropVector::dirac_top(const std::vector<std::string>& points, const std::string& at) {
  TropVector r = constant(points, ExtReal::pos_inf());
  r.set(r.index_of(at), ExtReal(0));
  return r;
}

TropVector TropVector::dirac_bottom(const std::vector<std::string>& points, const std::string& at) {
  TropVector r = constant(points, ExtReal::neg_inf());
  r.set(r.index_of(at), ExtReal(0));
  return r;
}

size_t TropVector::index_of(const std::string& label) const {
  auto it = std::find(points_.begin(), points_.end(), label);
  if (it == points_.end()) throw validation_error("unknown point label: " + label);
  return static_cast<size_t>(it - points_.begin());
}

bool TropVector::all_finite() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const ExtReal& v) { return v.is_finite(); });
}

bool TropVector::has(const ExtReal& v) const {
  return std::find(values_.begin(), values_.end(), v) != values_.end();
}

TropVector TropVector::reindexed(const std::vector<std::string>& order) const {
  if (order.size() != points_.size())
    throw validation_error("reindexed target is not a permutation of the point set");
  std::vector<ExtReal> vals;
  vals.reserve(order.size());
  for (const std::string& p : order) vals.push_back(value_of(p));  // throws on unknown label
  return TropVector(order, std::move(vals));
}

namespace {

void require_same_points(const std::vector<TropVector>& fs) {
  if (fs.empty()) throw validation_error("empty vector list");
  for (size_t i = 1; i < fs.size(); ++i)
    if (!fs[0].same_points(fs[i]))
      throw validation_error("vectors are over different point sets");
}

}  // namespace

TropVector pointwise_sup(const std::vector<TropVector>& fs) {
  require_same_points(fs);
  std::vector<ExtReal> out = fs[0].values();
  for (size_t k = 1; k < fs.size(); ++k)
    for (size_t i = 0; i < out.size(); ++i) out[i] = max(out[i], fs[k].at(i));
  return TropVector(fs[0].points(), std::move(out));
}

TropVector pointwise_inf(const std::vector<TropVector>& fs) {
  require_same_points(fs);
  std::vector<ExtReal> out = fs[0].values();
  for (size_t k = 1; k < fs.size(); ++k)
    for (size_t i = 0; i < out.size(); ++i) out[i] = min(out[i], fs[k].at(i));
  return TropVector(fs[0].points(), std::move(out));
}

TropVector pointwise_sup(const TropVector& f, const TropVector& g) {
  return pointwise_sup(std::vector<TropVector>{f, g});
}

TropVector pointwise_inf(const TropVector& f, const TropVector& g) {
  return pointwise_inf(std::vector<TropVector>{f, g});
}

TropVector lower_add(const TropVector& f, const ExtReal& lambda) {
  std::vector<ExtReal> out;
  out.reserve(f.size());
  for (const ExtReal& v : f.values()) out.push_back(lower_add(v, lambda));
  return TropVector(f.points(), std::move(out));
}

TropVector upper_add(const TropVector& f, const ExtReal& lambda) {
  std::vector<ExtReal> out;
  out.reserve(f.size());
  for (const ExtReal& v : f.values()) out.push_back(upper_add(v, lambda));
  return TropVector(f.points(), std::move(out));
}

TropVector lower_sub(const TropVector& f, const TropVector& g) {
  if (!f.same_points(g)) throw validation_error("vectors are over different point sets");
  std::vector<ExtReal> out;
  out.reserve(f.size());
  for (size_t i = 0; i < f.size(); ++i) out.push_back(lower_sub(f.at(i), g.at(i)));
  return TropVector(f.points(), std::move(out));
}

TropVector negate(const TropVector& f) {
  std::vector<ExtReal> out;
  out.reserve(f.size());
  for (const ExtReal& v : f.values()) out.push_back(negate(v));
  return TropVector(f.points(), std::move(out));
}

Rational hilbert_seminorm(const TropVector& f) {
  if (!f.all_finite())
    throw validation_error("hilbert_seminorm requires an all-finite vector");
  Rational lo = f.at(0).value(), hi = lo;
  for (const ExtReal& v : f.values()) {
    lo = std::min(lo, v.value());
    hi = std::max(hi, v.value());
  }
  return hi - lo;
}

Rational hilbert_distance(const TropVector& f, const TropVector& g) {
  return hilbert_seminorm(lower_sub(f, g));
}

bool leq(const TropVector& f, const TropVector& g) {
  if (!f.same_points(g)) throw validation_error("vectors are over different point sets");
  for (size_t i = 0; i < f.size(); ++i)
    if (!(f.at(i) <= g.at(i))) return false;
  return true;
}

ArchClassOrder archimedean_leq(const TropVector& f, const TropVector& g) {
  if (!f.same_points(g)) throw validation_error("vectors are over different point sets");
  ArchClassOrder out;
  ExtReal alpha(0);
  bool bound = false;
  for (size_t i = 0; i < f.size(); ++i) {
    const ExtReal& fv = f.at(i);
    const ExtReal& gv = g.at(i);
    if (fv.is_neg_inf()) continue;  // satisfied by every alpha
    if (gv.is_neg_inf()) return out;  // fv > -inf cannot be reached
    if (fv.is_pos_inf()) {
      if (!gv.is_pos_inf()) return out;  // finite g + finite alpha stays finite
      continue;  // both +inf: no constraint
    }
    if (gv.is_pos_inf()) continue;  // finite fv is covered by every alpha
    ExtReal need(fv.value() - gv.value());
    alpha = bound ? max(alpha, need) : need;
    bound = true;
  }
  out.leq = true;
  out.witness_alpha = alpha;
  return out;
}

std::string to_string(const TropVector& f) {
  std::string s = "(";
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += to_string(f.at(i));
  }
  s += ")";
  return s;
}

}  // namespace tropkit

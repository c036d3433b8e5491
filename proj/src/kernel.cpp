#include "tropkit/kernel.hpp"

#include <algorithm>
#include <set>

namespace tropkit {

namespace {

void check_distinct(const std::vector<std::string>& labels, const char* what) {
  if (labels.empty()) throw validation_error(std::string("empty ") + what + " set");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size())
    throw validation_error(std::string("duplicate ") + what + " label");
}

}  // namespace

Kernel::Kernel(std::vector<std::string> x_points, std::vector<std::string> y_points,
               std::vector<std::vector<ExtReal>> entries, bool approximate)
    : x_points_(std::move(x_points)),
      y_points_(std::move(y_points)),
      entries_(std::move(entries)),
      approximate_(approximate) {
  check_distinct(x_points_, "x point");
  check_distinct(y_points_, "y point");
  if (entries_.size() != x_points_.size())
    throw validation_error("entry row count does not match x point count");
  for (const auto& r : entries_)
    if (r.size() != y_points_.size())
      throw validation_error("entry column count does not match y point count");
  for (size_t i = 0; i < rows(); ++i) {
    bool finite_in_row = false;
    for (size_t j = 0; j < cols(); ++j) {
      if (entries_[i][j].is_pos_inf())
        throw validation_error("kernel entry (" + x_points_[i] + "," + y_points_[j] +
                               ") is +inf");
      finite_in_row |= entries_[i][j].is_finite();
    }
    if (!finite_in_row)
      throw validation_error("kernel row " + x_points_[i] + " has no finite entry");
  }
  for (size_t j = 0; j < cols(); ++j) {
    bool finite_in_col = false;
    for (size_t i = 0; i < rows(); ++i) finite_in_col |= entries_[i][j].is_finite();
    if (!finite_in_col)
      throw validation_error("kernel column " + y_points_[j] + " has no finite entry");
  }
}

TropVector Kernel::row(size_t i) const { return TropVector(y_points_, entries_.at(i)); }

TropVector Kernel::column(size_t j) const {
  std::vector<ExtReal> vals;
  vals.reserve(rows());
  for (size_t i = 0; i < rows(); ++i) vals.push_back(entries_[i].at(j));
  return TropVector(x_points_, std::move(vals));
}

size_t Kernel::x_index(const std::string& label) const {
  auto it = std::find(x_points_.begin(), x_points_.end(), label);
  if (it == x_points_.end()) throw validation_error("unknown x point: " + label);
  return static_cast<size_t>(it - x_points_.begin());
}

size_t Kernel::y_index(const std::string& label) const {
  auto it = std::find(y_points_.begin(), y_points_.end(), label);
  if (it == y_points_.end()) throw validation_error("unknown y point: " + label);
  return static_cast<size_t>(it - y_points_.begin());
}

Kernel Kernel::transposed() const {
  std::vector<std::vector<ExtReal>> t(cols(), std::vector<ExtReal>(rows(), ExtReal(0)));
  for (size_t i = 0; i < rows(); ++i)
    for (size_t j = 0; j < cols(); ++j) t[j][i] = entries_[i][j];
  return Kernel(y_points_, x_points_, std::move(t), approximate_);
}

Kernel Kernel::sub_columns(const std::vector<std::string>& labels) const {
  std::vector<size_t> idx;
  idx.reserve(labels.size());
  for (const auto& l : labels) idx.push_back(y_index(l));
  std::vector<std::vector<ExtReal>> sub(rows());
  for (size_t i = 0; i < rows(); ++i)
    for (size_t j : idx) sub[i].push_back(entries_[i][j]);
  return Kernel(x_points_, labels, std::move(sub), approximate_);
}

bool Kernel::has_minus_inf() const {
  for (const auto& r : entries_)
    for (const auto& v : r)
      if (v.is_neg_inf()) return true;
  return false;
}

CoefficientVector CoefficientVector::checked(TropVector v) {
  if (v.has(ExtReal::pos_inf()))
    throw validation_error("coefficient vector has a +inf entry");
  return CoefficientVector(std::move(v));
}

TropVector conjugate(const Kernel& b, const TropVector& f) {
  if (f.points() != b.y_points())
    throw validation_error("conjugate argument is not over the kernel's y points");
  std::vector<ExtReal> out(b.rows(), ExtReal::neg_inf());
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j)
      out[i] = max(out[i], lower_add(b.at(i, j), negate(f.at(j))));
  return TropVector(b.x_points(), std::move(out));
}

TropVector transpose_conjugate(const Kernel& b, const TropVector& h) {
  if (h.points() != b.x_points())
    throw validation_error("transpose_conjugate argument is not over the kernel's x points");
  std::vector<ExtReal> out(b.cols(), ExtReal::neg_inf());
  for (size_t j = 0; j < b.cols(); ++j)
    for (size_t i = 0; i < b.rows(); ++i)
      out[j] = max(out[j], lower_add(b.at(i, j), negate(h.at(i))));
  return TropVector(b.y_points(), std::move(out));
}

TropVector project(const Kernel& b, const TropVector& h) {
  return conjugate(b, transpose_conjugate(b, h));
}

bool range_membership(const Kernel& b, const TropVector& h) {
  return project(b, h) == h;
}

TropVector combine(const Kernel& b, const CoefficientVector& a) {
  if (a.vec().points() != b.y_points())
    throw validation_error("coefficient vector is not over the kernel's y points");
  std::vector<ExtReal> out(b.rows(), ExtReal::neg_inf());
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j)
      out[i] = max(out[i], lower_add(a.vec().at(j), b.at(i, j)));
  return TropVector(b.x_points(), std::move(out));
}

CoefficientVector residual_coefficients(const Kernel& b, const TropVector& h) {
  // An entry is +inf only when h is +inf on the whole support of that column;
  // keeping it is what makes combine(b, .) reproduce project(b, h) exactly.
  return CoefficientVector::raw(negate(transpose_conjugate(b, h)));
}

TropVector e_x_vector(const Kernel& b, const std::string& x_label) {
  return conjugate(b, b.row(b.x_index(x_label)));
}

std::vector<TropVector> e_x_family(const Kernel& b) {
  std::vector<TropVector> out;
  out.reserve(b.rows());
  for (const auto& x : b.x_points()) out.push_back(e_x_vector(b, x));
  return out;
}

bool in_inf_closure(const Kernel& b, const TropVector& h) {
  if (h.points() != b.x_points())
    throw validation_error("in_inf_closure argument is not over the kernel's x points");
  std::vector<ExtReal> inf(b.rows(), ExtReal::pos_inf());
  for (size_t x = 0; x < b.rows(); ++x) {
    TropVector term = upper_add(e_x_vector(b, b.x_points()[x]), h.at(x));
    for (size_t z = 0; z < b.rows(); ++z) inf[z] = min(inf[z], term.at(z));
  }
  return TropVector(b.x_points(), std::move(inf)) == h;
}

bool is_symmetric(const Kernel& b) {
  if (b.x_points() != b.y_points()) return false;
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = i + 1; j < b.cols(); ++j)
      if (b.at(i, j) != b.at(j, i)) return false;
  return true;
}

bool check_anti_involution(const Kernel& b, const std::vector<CoefficientVector>& samples,
                           TropVector* witness) {
  if (b.x_points() != b.y_points())
    throw validation_error("anti-involution check requires x and y points to coincide");
  std::vector<TropVector> fs;
  fs.reserve(samples.size());
  for (const auto& a : samples) fs.push_back(combine(b, a));
  const ExtReal lambdas[] = {ExtReal(1), ExtReal(-2), ExtReal(Rational(1, 2))};
  for (const TropVector& f : fs) {
    TropVector bf = conjugate(b, f);
    if (conjugate(b, bf) != f) {
      if (witness) *witness = f;
      return false;
    }
    for (const ExtReal& l : lambdas) {
      if (conjugate(b, lower_add(f, l)) != lower_add(bf, negate(l))) {
        if (witness) *witness = f;
        return false;
      }
    }
  }
  for (size_t i = 0; i < fs.size(); ++i)
    for (size_t j = 0; j < fs.size(); ++j) {
      // Comparable pairs occur rarely among raw samples, so also test each
      // sample against its join with every other sample.
      TropVector lo = fs[i];
      TropVector hi = pointwise_sup(fs[i], fs[j]);
      if (!leq(conjugate(b, hi), conjugate(b, lo))) {
        if (witness) *witness = hi;
        return false;
      }
    }
  return true;
}

bool strict_trop_monotone(const Kernel& b) {
  if (b.x_points() != b.y_points())
    throw validation_error("strict_trop_monotone requires x and y points to coincide");
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = i + 1; j < b.rows(); ++j) {
      ExtReal diag = lower_add(b.at(i, i), b.at(j, j));
      ExtReal cross = lower_add(b.at(i, j), b.at(j, i));
      if (!(diag > cross)) return false;
    }
  return true;
}

}  // namespace tropkit

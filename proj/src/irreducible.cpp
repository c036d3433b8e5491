#include "tropkit/irreducible.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace tropkit {

namespace {

// sup { lambda : lambda + b <= a }, the residuation quotient.
ExtReal quotient(const ExtReal& a, const ExtReal& b) {
  if (b.is_neg_inf() || a.is_pos_inf()) return ExtReal::pos_inf();
  if (a.is_neg_inf()) return ExtReal::neg_inf();
  return ExtReal(a.value() - b.value());
}

// Largest lambda with lambda + c <= f coordinatewise.
ExtReal max_scaling(const TropVector& f, const TropVector& c) {
  ExtReal lambda = ExtReal::pos_inf();
  for (size_t i = 0; i < f.size(); ++i) lambda = min(lambda, quotient(f.at(i), c.at(i)));
  return lambda;
}

// Smallest finite lambda with lambda + c >= f coordinatewise, if one exists.
std::optional<ExtReal> min_cover_shift(const TropVector& f, const TropVector& c) {
  ExtReal lambda(0);
  bool bound = false;
  for (size_t i = 0; i < f.size(); ++i) {
    if (f.at(i).is_neg_inf()) continue;
    if (f.at(i).is_pos_inf()) {
      if (!c.at(i).is_pos_inf()) return std::nullopt;
      continue;
    }
    if (c.at(i).is_neg_inf()) return std::nullopt;
    if (c.at(i).is_pos_inf()) continue;
    ExtReal need(f.at(i).value() - c.at(i).value());
    lambda = bound ? max(lambda, need) : need;
    bound = true;
  }
  return lambda;
}

// Columns equal to another column up to a finite additive constant.
bool duplicate_up_to_constant(const TropVector& a, const TropVector& b) {
  std::optional<Rational> shift;
  for (size_t i = 0; i < a.size(); ++i) {
    const bool ai = a.at(i).is_neg_inf(), bi = b.at(i).is_neg_inf();
    if (ai != bi) return false;
    if (ai) continue;
    Rational d = a.at(i).value() - b.at(i).value();
    if (!shift)
      shift = d;
    else if (*shift != d)
      return false;
  }
  return true;
}

}  // namespace

ReductionReport essential_columns(const Kernel& b) {
  ReductionReport report;
  report.has_minus_inf = b.has_minus_inf();
  const size_t m = b.cols();
  std::vector<TropVector> cols;
  cols.reserve(m);
  for (size_t j = 0; j < m; ++j) cols.push_back(b.column(j));

  // Group duplicates (equality up to constant); the representative is the
  // lexicographically-first label of the class.
  std::vector<int> rep(m, -1);
  std::vector<std::vector<size_t>> classes;
  for (size_t j = 0; j < m; ++j) {
    if (rep[j] >= 0) continue;
    classes.push_back({j});
    rep[j] = static_cast<int>(classes.size()) - 1;
    for (size_t k = j + 1; k < m; ++k)
      if (rep[k] < 0 && duplicate_up_to_constant(cols[j], cols[k])) {
        classes.back().push_back(k);
        rep[k] = rep[j];
      }
  }
  std::vector<size_t> representatives;
  for (auto& cls : classes) {
    size_t lead = *std::min_element(cls.begin(), cls.end(), [&](size_t a, size_t c) {
      return b.y_points()[a] < b.y_points()[c];
    });
    representatives.push_back(lead);
    if (cls.size() > 1) {
      std::vector<std::string> labels;
      for (size_t j : cls) labels.push_back(b.y_points()[j]);
      report.duplicate_classes.push_back(std::move(labels));
    }
  }
  std::sort(representatives.begin(), representatives.end());

  for (size_t j : representatives) {
    std::vector<std::string> basis;
    std::vector<ExtReal> coeffs;
    TropVector bound = TropVector::constant(b.x_points(), ExtReal::neg_inf());
    for (size_t l : representatives) {
      if (l == j) continue;
      ExtReal lambda = max_scaling(cols[j], cols[l]);
      if (lambda.is_pos_inf()) lambda = ExtReal::neg_inf();  // column never binds
      basis.push_back(b.y_points()[l]);
      coeffs.push_back(lambda);
      bound = pointwise_sup(bound, lower_add(cols[l], lambda));
    }
    if (!basis.empty() && bound == cols[j])
      report.redundant.push_back({b.y_points()[j], std::move(basis), std::move(coeffs)});
    else
      report.essential.push_back(b.y_points()[j]);
  }
  return report;
}

ReductionReport essential_rows(const Kernel& b) { return essential_columns(b.transposed()); }

bool fully_reduced(const Kernel& b) {
  ReductionReport cols = essential_columns(b);
  if (!cols.redundant.empty() || !cols.duplicate_classes.empty()) return false;
  ReductionReport rows = essential_rows(b);
  return rows.redundant.empty() && rows.duplicate_classes.empty();
}

TropVector relative_inf(const Kernel& b, const std::vector<TropVector>& fs) {
  if (fs.empty()) throw validation_error("relative_inf over an empty list");
  for (size_t k = 0; k < fs.size(); ++k)
    if (!range_membership(b, fs[k]))
      throw validation_error("relative_inf input " + std::to_string(k) +
                             " is not in the kernel's range");
  return project(b, pointwise_inf(fs));
}

namespace {

// Sorted positive steps: the distinct values, midpoints of consecutive ones,
// a value below the smallest and one beyond the largest.
std::vector<Rational> breakpoint_steps(const std::vector<Rational>& raw) {
  std::set<Rational> out;
  for (const Rational& r : raw)
    if (r > 0) out.insert(r);
  std::vector<Rational> sorted(out.begin(), out.end());
  for (size_t i = 0; i + 1 < sorted.size(); ++i) out.insert((sorted[i] + sorted[i + 1]) / 2);
  if (!sorted.empty()) {
    out.insert(sorted.front() / 2);
    out.insert(sorted.back() + 1);
  } else {
    out.insert(Rational(1));
  }
  return {out.begin(), out.end()};
}

// Pairwise difference pool of the finite values of f and of the kernel columns.
std::vector<Rational> difference_pool(const Kernel& b, const TropVector& f) {
  std::vector<Rational> finite;
  for (const ExtReal& v : f.values())
    if (v.is_finite()) finite.push_back(v.value());
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j)
      if (b.at(i, j).is_finite()) finite.push_back(b.at(i, j).value());
  std::vector<Rational> diffs;
  for (size_t i = 0; i < finite.size(); ++i)
    for (size_t j = 0; j < finite.size(); ++j) {
      Rational d = finite[i] - finite[j];
      if (d > 0) diffs.push_back(d);
    }
  return diffs;
}

std::vector<TropVector> dedupe(std::vector<TropVector> xs) {
  std::vector<TropVector> out;
  for (auto& x : xs)
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
  return out;
}

void maybe_shuffle(std::vector<TropVector>& xs, unsigned seed) {
  if (seed == 0) return;
  std::mt19937 rng(seed);
  std::shuffle(xs.begin(), xs.end(), rng);
}

}  // namespace

std::optional<IrreducibilityWitness> refute_inf_irreducible(const Kernel& b,
                                                            const TropVector& f,
                                                            size_t budget,
                                                            unsigned seed) {
  if (!range_membership(b, f))
    throw validation_error("refute_inf_irreducible argument is not in the kernel's range");
  std::vector<TropVector> candidates;
  auto offer = [&](const TropVector& g) {
    if (leq(f, g) && g != f) candidates.push_back(g);
  };

  for (const TropVector& e : e_x_family(b))
    if (auto l = min_cover_shift(f, e)) offer(lower_add(e, *l));
  std::vector<TropVector> cols;
  for (size_t j = 0; j < b.cols(); ++j) cols.push_back(b.column(j));
  for (const TropVector& c : cols)
    if (auto l = min_cover_shift(f, c)) offer(lower_add(c, *l));

  // Sups of two shifted columns: the first shift walks the breakpoints where
  // the shifted column touches f, the second is the least one covering the
  // remaining coordinates.
  for (size_t j1 = 0; j1 < cols.size(); ++j1) {
    std::set<Rational> shifts;
    for (size_t i = 0; i < f.size(); ++i)
      if (f.at(i).is_finite() && cols[j1].at(i).is_finite())
        shifts.insert(f.at(i).value() - cols[j1].at(i).value());
    std::vector<Rational> sorted(shifts.begin(), shifts.end());
    for (size_t i = 0; i + 1 < sorted.size(); ++i) shifts.insert((sorted[i] + sorted[i + 1]) / 2);
    for (const Rational& l1 : shifts) {
      TropVector first = lower_add(cols[j1], ExtReal(l1));
      TropVector residue = f;
      bool any = false;
      for (size_t i = 0; i < f.size(); ++i) {
        if (first.at(i) >= f.at(i))
          residue.set(i, ExtReal::neg_inf());
        else
          any = true;
      }
      if (!any) continue;
      for (size_t j2 = 0; j2 < cols.size(); ++j2) {
        if (j2 == j1) continue;
        if (auto l2 = min_cover_shift(residue, cols[j2]))
          offer(pointwise_sup(first, lower_add(cols[j2], *l2)));
      }
    }
  }

  candidates = dedupe(std::move(candidates));
  maybe_shuffle(candidates, seed);
  size_t tested = 0;
  for (size_t i = 0; i < candidates.size(); ++i)
    for (size_t j = i + 1; j < candidates.size(); ++j) {
      if (tested++ >= budget) return std::nullopt;
      if (project(b, pointwise_inf(candidates[i], candidates[j])) == f)
        return IrreducibilityWitness{candidates[i], candidates[j]};
    }
  return std::nullopt;
}

std::optional<IrreducibilityWitness> refute_sup_irreducible(const Kernel& b,
                                                            const TropVector& f,
                                                            size_t budget,
                                                            unsigned seed) {
  if (!range_membership(b, f))
    throw validation_error("refute_sup_irreducible argument is not in the kernel's range");
  std::vector<TropVector> scaled;  // columns raised as far as f allows
  for (size_t j = 0; j < b.cols(); ++j) {
    ExtReal lambda = max_scaling(f, b.column(j));
    if (lambda.is_pos_inf() || lambda.is_neg_inf()) continue;
    scaled.push_back(lower_add(b.column(j), lambda));
  }
  std::vector<TropVector> candidates;
  auto offer = [&](const TropVector& g) {
    if (leq(g, f) && g != f) candidates.push_back(g);
  };
  for (const TropVector& s : scaled) offer(s);
  for (size_t l = 0; l < scaled.size(); ++l) {
    TropVector rest = TropVector::constant(f.points(), ExtReal::neg_inf());
    for (size_t k = 0; k < scaled.size(); ++k)
      if (k != l) rest = pointwise_sup(rest, scaled[k]);
    offer(rest);
  }
  const std::vector<Rational> steps = breakpoint_steps(difference_pool(b, f));
  for (size_t z = 0; z < f.size(); ++z) {
    if (!f.at(z).is_finite()) continue;
    for (const Rational& d : steps) {
      TropVector lowered = f;
      lowered.set(z, ExtReal(f.at(z).value() - d));
      offer(project(b, lowered));
    }
  }

  candidates = dedupe(std::move(candidates));
  maybe_shuffle(candidates, seed);
  size_t tested = 0;
  for (size_t i = 0; i < candidates.size(); ++i)
    for (size_t j = i + 1; j < candidates.size(); ++j) {
      if (tested++ >= budget) return std::nullopt;
      if (pointwise_sup(candidates[i], candidates[j]) == f)
        return IrreducibilityWitness{candidates[i], candidates[j]};
    }
  return std::nullopt;
}

std::vector<ArchClass> archimedean_classes(const Kernel& b) {
  const std::vector<TropVector> es = e_x_family(b);
  const size_t n = es.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) le[i][j] = archimedean_leq(es[i], es[j]).leq;
  std::vector<int> cls(n, -1);
  std::vector<ArchClass> out;
  for (size_t i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = static_cast<int>(out.size());
    out.push_back({{b.x_points()[i]}, false});
    for (size_t j = i + 1; j < n; ++j)
      if (cls[j] < 0 && le[i][j] && le[j][i]) {
        cls[j] = cls[i];
        out[cls[i]].members.push_back(b.x_points()[j]);
      }
  }
  for (size_t c = 0; c < out.size(); ++c) {
    size_t i = 0;
    while (cls[i] != static_cast<int>(c)) ++i;
    bool maximal = true;
    for (size_t j = 0; j < n && maximal; ++j)
      if (le[i][j] && !le[j][i]) maximal = false;
    out[c].maximal = maximal;
  }
  return out;
}

bool archimedean_maximal(const Kernel& b, const TropVector& f) {
  if (!range_membership(b, f))
    throw validation_error("archimedean_maximal argument is not in the kernel's range");
  bool has_domain = false;
  for (const ExtReal& v : f.values()) has_domain |= !v.is_pos_inf();
  if (!has_domain) throw validation_error("archimedean_maximal argument has empty domain");
  const std::vector<ArchClass> classes = archimedean_classes(b);
  for (size_t i = 0; i < b.rows(); ++i) {
    if (f.at(i).is_pos_inf()) continue;  // x outside Dom(f)
    TropVector e = e_x_vector(b, b.x_points()[i]);
    if (!(archimedean_leq(f, e).leq && archimedean_leq(e, f).leq)) continue;
    for (const ArchClass& c : classes)
      if (std::find(c.members.begin(), c.members.end(), b.x_points()[i]) != c.members.end())
        return c.maximal;
  }
  return false;
}

TropVector min_S_candidate(const Kernel& b, const std::string& x_label) {
  if (!strict_trop_monotone(b))
    throw validation_error("min_S_candidate requires a strictly monotone kernel");
  const size_t x = b.x_index(x_label);
  return lower_add(b.column(x), negate(b.at(x, x)));
}

bool is_minimal_in_S(const Kernel& b, const TropVector& u, const std::string& x_label,
                     TropVector* witness) {
  if (!range_membership(b, u))
    throw validation_error("is_minimal_in_S argument is not in the kernel's range");
  const size_t x = b.x_index(x_label);
  if (u.at(x) < ExtReal(0))
    throw validation_error("is_minimal_in_S argument is not in S(x): u(x) < 0");
  std::vector<Rational> slack;  // u(i) - b(i,j) over finite pairs
  for (size_t i = 0; i < u.size(); ++i)
    for (size_t j = 0; j < b.cols(); ++j)
      if (u.at(i).is_finite() && b.at(i, j).is_finite())
        slack.push_back(u.at(i).value() - b.at(i, j).value());
  std::vector<Rational> pool;
  for (const Rational& a : slack)
    for (const Rational& c : slack)
      if (a - c > 0) pool.push_back(a - c);
  for (const Rational& step : breakpoint_steps(pool))
    for (size_t z = 0; z < u.size(); ++z) {
      if (!u.at(z).is_finite()) continue;
      TropVector capped = u;
      capped.set(z, ExtReal(u.at(z).value() - step));
      TropVector v = project(b, capped);
      if (v != u && v.at(x) >= ExtReal(0)) {
        if (witness) *witness = v;
        return false;
      }
    }
  return true;
}

}  // namespace tropkit

#include "tropkit/isophi.hpp"

#include <algorithm>
#include <set>

#include "tropkit/irreducible.hpp"

namespace tropkit {

AffineReparam::AffineReparam(TropVector g_in, std::vector<std::string> phi_in)
    : g(std::move(g_in)), phi(std::move(phi_in)) {
  if (!g.all_finite()) throw validation_error("reparametrization offset must be finite");
  if (phi.size() != g.size())
    throw validation_error("phi length does not match the ground set");
  std::set<std::string> seen(phi.begin(), phi.end());
  if (seen.size() != phi.size()) throw validation_error("phi is not injective");
}

TropVector apply_iso(const AffineReparam& j, const TropVector& f) {
  if (f.size() != j.phi.size())
    throw validation_error("argument is not over the map's source points");
  std::vector<ExtReal> out;
  out.reserve(j.g.size());
  for (size_t i = 0; i < j.g.size(); ++i)
    out.push_back(lower_add(j.g.at(i), f.value_of(j.phi[i])));
  return TropVector(j.g.points(), std::move(out));
}

AffineReparam invert_iso(const AffineReparam& j) {
  std::vector<ExtReal> vals;
  vals.reserve(j.g.size());
  for (const ExtReal& v : j.g.values()) vals.push_back(negate(v));
  return AffineReparam(TropVector(j.phi, std::move(vals)), j.g.points());
}

namespace {

void require_orientation(const Kernel& src, const Kernel& dst, const AffineReparam& j) {
  if (j.g.points() != dst.x_points())
    throw validation_error("reparametrization offset is not over the target ground set");
  std::set<std::string> img(j.phi.begin(), j.phi.end());
  std::set<std::string> want(src.x_points().begin(), src.x_points().end());
  if (img != want)
    throw validation_error("phi is not a bijection onto the source ground set");
}

}  // namespace

bool is_max_plus_iso(const Kernel& src, const Kernel& dst, const AffineReparam& j) {
  require_orientation(src, dst, j);
  for (size_t y = 0; y < src.cols(); ++y)
    if (!range_membership(dst, apply_iso(j, src.column(y)))) return false;
  AffineReparam inv = invert_iso(j);
  // The inverse presents its output over phi's order; realign with src.
  for (size_t y = 0; y < dst.cols(); ++y)
    if (!range_membership(src, apply_iso(inv, dst.column(y)).reindexed(src.x_points())))
      return false;
  return true;
}

IsoSpec iso_spec_from_reparam(const Kernel& src, const Kernel& dst, const AffineReparam& j) {
  require_orientation(src, dst, j);
  IsoSpec spec;
  spec.source_columns = src.y_points();
  for (size_t y = 0; y < src.cols(); ++y) spec.images.push_back(apply_iso(j, src.column(y)));
  return spec;
}

namespace {

// Image of a sup-combination of source columns under the spec:
// sup_y lower_add(a_y, images[y]). Coefficients may be +inf (a column scaled
// arbitrarily high), matching how such sups behave in the source range.
TropVector push_coefficients(const IsoSpec& spec, const TropVector& a,
                             const std::vector<std::string>& dst_points) {
  std::vector<ExtReal> out(dst_points.size(), ExtReal::neg_inf());
  for (size_t y = 0; y < spec.images.size(); ++y)
    for (size_t x = 0; x < out.size(); ++x)
      out[x] = max(out[x], lower_add(a.at(y), spec.images[y].at(x)));
  return TropVector(dst_points, std::move(out));
}

}  // namespace

std::optional<AffineReparam> decompose_iso(const Kernel& src, const Kernel& dst,
                                           const IsoSpec& spec) {
  if (spec.source_columns != src.y_points())
    throw validation_error("IsoSpec columns do not match the source kernel");
  if (spec.images.size() != src.cols())
    throw validation_error("IsoSpec image count does not match the source kernel");
  for (const TropVector& img : spec.images)
    if (img.points() != dst.x_points())
      throw validation_error("IsoSpec image is not over the target ground set");

  // Verification family: (vector, native coefficients) pairs whose canonical
  // residual coefficients give an independent second representation.
  std::vector<std::pair<TropVector, TropVector>> family;
  for (size_t y = 0; y < src.cols(); ++y)
    family.emplace_back(src.column(y), TropVector::dirac_bottom(src.y_points(), src.y_points()[y]));
  for (size_t y1 = 0; y1 < src.cols(); ++y1)
    for (size_t y2 = y1 + 1; y2 < src.cols(); ++y2) {
      TropVector a = TropVector::dirac_bottom(src.y_points(), src.y_points()[y1]);
      a.set(y2, ExtReal(0));
      family.emplace_back(pointwise_sup(src.column(y1), src.column(y2)), a);
    }
  for (size_t x = 0; x < src.rows(); ++x)
    family.emplace_back(e_x_vector(src, src.x_points()[x]), negate(src.row(x)));

  const ExtReal shifts[] = {ExtReal(-1), ExtReal(0), ExtReal(1)};
  std::vector<std::pair<TropVector, TropVector>> verified;  // (vector, image)
  for (const auto& [vec, native] : family)
    for (const ExtReal& s : shifts) {
      TropVector v = lower_add(vec, s);
      TropVector img_native = push_coefficients(spec, lower_add(native, s), dst.x_points());
      TropVector img_canonical = push_coefficients(
          spec, residual_coefficients(src, v).vec(), dst.x_points());
      if (img_native != img_canonical)
        throw validation_error("IsoSpec is ill defined: representations of " +
                               to_string(v) + " push to different images");
      verified.emplace_back(v, img_native);
    }
  for (size_t i = 0; i < verified.size(); ++i)
    for (size_t j = i + 1; j < verified.size(); ++j)
      if (verified[i].first != verified[j].first && verified[i].second == verified[j].second)
        throw validation_error("IsoSpec is not injective on the verification family");

  if (src.rows() != dst.rows()) return std::nullopt;
  const size_t n = src.rows();

  // Push every source e_x and match it against a target e_x up to a finite
  // constant.
  std::vector<TropVector> je;  // J e'_y for each source ground point y
  std::vector<TropVector> dst_e = e_x_family(dst);
  std::vector<size_t> matched_x(n);
  std::vector<ExtReal> matched_shift(n);
  for (size_t u = 0; u < n; ++u) {
    je.push_back(push_coefficients(spec, negate(src.row(u)), dst.x_points()));
    std::optional<size_t> match;
    for (size_t x = 0; x < n; ++x) {
      const ExtReal& lambda = je[u].at(x);  // forced: e_x(x) = 0
      if (!lambda.is_finite()) continue;
      if (je[u] == lower_add(dst_e[x], lambda)) {
        if (match) return std::nullopt;  // ambiguous match
        match = x;
        matched_shift[u] = lambda;
      }
    }
    if (!match) return std::nullopt;
    matched_x[u] = *match;
  }
  std::set<size_t> distinct(matched_x.begin(), matched_x.end());
  if (distinct.size() != n) return std::nullopt;  // psi is not a bijection

  // psi(u) = matched_x[u]; the affine form is g = shift o psi^{-1}, phi = psi^{-1}.
  std::vector<ExtReal> g_vals(n, ExtReal(0));
  std::vector<std::string> phi(n);
  for (size_t u = 0; u < n; ++u) {
    g_vals[matched_x[u]] = matched_shift[u];
    phi[matched_x[u]] = src.x_points()[u];
  }
  AffineReparam candidate(TropVector(dst.x_points(), std::move(g_vals)), std::move(phi));

  // Cross-check: inf_y upper_add(J e'_y(x), J^{-1} e_x(y)) = 0, attained
  // exactly at y = phi(x).
  AffineReparam inverse = invert_iso(candidate);
  for (size_t x = 0; x < n; ++x) {
    // The inverse presents its output over phi's order; realign with src.
    TropVector back = apply_iso(inverse, dst_e[x]).reindexed(src.x_points());
    ExtReal best = ExtReal::pos_inf();
    size_t count = 0, argmin = 0;
    for (size_t u = 0; u < n; ++u) {
      ExtReal val = upper_add(je[u].at(x), back.at(u));
      if (val < best) {
        best = val;
        count = 1;
        argmin = u;
      } else if (val == best) {
        ++count;
      }
    }
    if (best != ExtReal(0) || count != 1) return std::nullopt;
    if (src.x_points()[argmin] != candidate.phi[x]) return std::nullopt;
  }

  if (!is_max_plus_iso(src, dst, candidate)) return std::nullopt;
  return candidate;
}

std::vector<Rational> hilbert_profile(const Kernel& b, ProfileColumns sel) {
  std::vector<size_t> idx;
  if (sel == ProfileColumns::all) {
    for (size_t j = 0; j < b.cols(); ++j) idx.push_back(j);
  } else {
    for (const std::string& l : essential_columns(b).essential) idx.push_back(b.y_index(l));
  }
  std::vector<TropVector> cols;
  for (size_t j : idx) {
    cols.push_back(b.column(j));
    if (!cols.back().all_finite())
      throw validation_error("hilbert_profile: column " + b.y_points()[j] +
                             " has an infinite entry");
  }
  std::vector<Rational> out;
  for (size_t i = 0; i < cols.size(); ++i)
    for (size_t j = i + 1; j < cols.size(); ++j)
      out.push_back(hilbert_distance(cols[i], cols[j]));
  std::sort(out.begin(), out.end(), std::greater<Rational>());
  return out;
}

bool hilbert_obstruction(const Kernel& a, const Kernel& b) {
  return hilbert_profile(a, ProfileColumns::all) != hilbert_profile(b, ProfileColumns::all);
}

bool verify_conjugacy(const Kernel& b, const Kernel& c, const KernelConjugacy& k) {
  if (k.tau.size() != c.rows() || k.sigma.size() != c.cols()) return false;
  if (k.psi.points() != c.x_points() || k.varphi.points() != c.y_points()) return false;
  if (!k.psi.all_finite() || !k.varphi.all_finite()) return false;
  for (size_t i = 0; i < c.rows(); ++i)
    for (size_t j = 0; j < c.cols(); ++j) {
      ExtReal rhs = lower_add(lower_add(k.psi.at(i), b.at(b.x_index(k.tau[i]), b.y_index(k.sigma[j]))),
                              k.varphi.at(j));
      if (c.at(i, j) != rhs) return false;
    }
  return true;
}

namespace {

using DistMatrix = std::vector<std::vector<Rational>>;

DistMatrix pairwise_row_distances(const Kernel& k) {
  DistMatrix d(k.rows(), std::vector<Rational>(k.rows(), Rational(0)));
  for (size_t i = 0; i < k.rows(); ++i)
    for (size_t j = i + 1; j < k.rows(); ++j)
      d[i][j] = d[j][i] = hilbert_distance(k.row(i), k.row(j));
  return d;
}

struct ConjugacySearch {
  const Kernel& b;
  const Kernel& c;
  DistMatrix row_b, row_c, col_b, col_c;
  std::vector<size_t> tau, sigma;
  std::vector<bool> used_x, used_y;

  // D(i,j) = c(i,j) - b(tau_i, sigma_j); finite kernels only.
  Rational diff(size_t i, size_t j) const {
    return c.at(i, j).value() - b.at(tau[i], sigma[j]).value();
  }

  bool search_sigma(size_t j) {
    const size_t m = c.cols();
    if (j == m) return true;
    for (size_t cand = 0; cand < m; ++cand) {
      if (used_y[cand]) continue;
      bool ok = true;
      for (size_t j2 = 0; j2 < j && ok; ++j2)
        ok = col_c[j][j2] == col_b[cand][sigma[j2]];
      if (!ok) continue;
      sigma[j] = cand;
      used_y[cand] = true;
      // Additive separability of column j against column 0.
      if (j > 0) {
        for (size_t i = 1; i < c.rows() && ok; ++i)
          ok = diff(i, j) - diff(0, j) == diff(i, 0) - diff(0, 0);
      }
      if (ok && search_sigma(j + 1)) return true;
      used_y[cand] = false;
    }
    return false;
  }

  bool search_tau(size_t i) {
    const size_t n = c.rows();
    if (i == n) {
      std::fill(used_y.begin(), used_y.end(), false);
      return search_sigma(0);
    }
    for (size_t cand = 0; cand < n; ++cand) {
      if (used_x[cand]) continue;
      bool ok = true;
      for (size_t i2 = 0; i2 < i && ok; ++i2)
        ok = row_c[i][i2] == row_b[cand][tau[i2]];
      if (!ok) continue;
      tau[i] = cand;
      used_x[cand] = true;
      if (search_tau(i + 1)) return true;
      used_x[cand] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<KernelConjugacy> find_kernel_conjugacy(const Kernel& b, const Kernel& c,
                                                     bool allow_large) {
  if (b.has_minus_inf() || c.has_minus_inf())
    throw validation_error("conjugacy search requires finite kernels");
  if (!fully_reduced(b)) throw validation_error("first kernel is not fully reduced");
  if (!fully_reduced(c)) throw validation_error("second kernel is not fully reduced");
  if (b.rows() != c.rows() || b.cols() != c.cols()) return std::nullopt;
  if (!allow_large && (b.rows() > 9 || b.cols() > 9))
    throw validation_error("kernel exceeds 9 points per axis; enable the large-search override");

  ConjugacySearch s{b,
                    c,
                    pairwise_row_distances(b),
                    pairwise_row_distances(c),
                    pairwise_row_distances(b.transposed()),
                    pairwise_row_distances(c.transposed()),
                    std::vector<size_t>(c.rows()),
                    std::vector<size_t>(c.cols()),
                    std::vector<bool>(c.rows(), false),
                    std::vector<bool>(c.cols(), false)};
  if (!s.search_tau(0)) return std::nullopt;

  KernelConjugacy k{{}, {},
                    TropVector::constant(c.x_points(), ExtReal(0)),
                    TropVector::constant(c.y_points(), ExtReal(0))};
  for (size_t i = 0; i < c.rows(); ++i) k.tau.push_back(b.x_points()[s.tau[i]]);
  for (size_t j = 0; j < c.cols(); ++j) k.sigma.push_back(b.y_points()[s.sigma[j]]);
  for (size_t i = 0; i < c.rows(); ++i) k.psi.set(i, ExtReal(s.diff(i, 0) - s.diff(0, 0)));
  for (size_t j = 0; j < c.cols(); ++j) k.varphi.set(j, ExtReal(s.diff(0, j)));
  return k;
}

AffineReparam reparam_from_conjugacy(const KernelConjugacy& k) {
  return AffineReparam(k.psi, k.tau);
}

TropVector push_through_generators(const Kernel& src, const Kernel& dst,
                                   const TropVector& f) {
  if (src.cols() != dst.cols())
    throw validation_error("push_through_generators requires equal column counts");
  if (!range_membership(src, f))
    throw validation_error("push_through_generators argument is not in the source range");
  TropVector a = residual_coefficients(src, f).vec();
  return combine(dst, CoefficientVector::raw(TropVector(dst.y_points(), a.values())));
}

ExtReal dual_value(const Kernel& b, const TropVector& f, const TropVector& g) {
  if (f.points() != b.x_points() || g.points() != b.x_points())
    throw validation_error("dual_value arguments must be over the kernel's x points");
  ExtReal v = ExtReal::neg_inf();
  for (size_t y = 0; y < b.cols(); ++y) {
    ExtReal t1 = ExtReal::pos_inf(), t2 = ExtReal::pos_inf();
    for (size_t z = 0; z < b.rows(); ++z)
      t1 = min(t1, lower_add(g.at(z), negate(b.at(z, y))));
    for (size_t x = 0; x < b.rows(); ++x)
      t2 = min(t2, lower_add(f.at(x), b.at(x, y)));
    v = max(v, lower_add(t1, t2));
  }
  return v;
}

ExtReal primal_value(const TropVector& f, const TropVector& g) {
  if (!f.same_points(g)) throw validation_error("vectors are over different point sets");
  ExtReal v = ExtReal::pos_inf();
  for (size_t x = 0; x < f.size(); ++x) v = min(v, lower_add(f.at(x), g.at(x)));
  return v;
}

}  // namespace tropkit

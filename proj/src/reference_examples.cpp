#include "tropkit/reference_examples.hpp"

#include <cmath>
#include <exception>
#include <ostream>
#include <string>
#include <vector>

#include "tropkit/factories.hpp"
#include "tropkit/irreducible.hpp"

namespace tropkit {
namespace {

bool g_fault = false;

std::vector<std::string> numbered(size_t n) {
  std::vector<std::string> out;
  for (size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

Kernel make_kernel(std::vector<std::vector<ExtReal>> rows) {
  const size_t n = rows.size(), m = rows.at(0).size();
  return Kernel(numbered(n), numbered(m), std::move(rows));
}

TropVector over(const std::vector<std::string>& points, std::vector<ExtReal> vals) {
  return TropVector(points, std::move(vals));
}

Kernel path_metric_kernel() {
  WeakMetric d = shortest_path_metric({"a", "b", "c"}, {{"a", "b", 1}, {"b", "c", 1}});
  return from_metric(d, 1);
}

}  // namespace

Kernel demo_kernel_a() {
  // The fault injection flips one diagonal entry; downstream identities
  // (third column as a sup, the e_x table, projections) then fail by name.
  ExtReal corner = g_fault ? ExtReal(1) : ExtReal(0);
  return make_kernel({{corner, -2, 0}, {-2, 0, 0}, {0, 0, 0}});
}

Kernel demo_kernel_b() { return make_kernel({{0, -1, 0}, {-3, 0, 0}, {0, 0, 0}}); }

Kernel demo_kernel_c() { return make_kernel({{0, -2}, {-2, 0}}); }

Kernel demo_kernel_d() { return make_kernel({{0, -1}, {-3, 0}}); }

Kernel demo_dual_wide() { return make_kernel({{0, -1, 0}, {-1, 0, 0}, {0, 0, 0}}); }

Kernel demo_dual_narrow() { return make_kernel({{0, -1}, {-1, 0}, {0, 0}}); }

IsoSpec demo_embedding_spec() {
  Kernel a = demo_kernel_a();
  Kernel b = demo_kernel_b();
  Kernel d = demo_kernel_d();
  Kernel b12 = b.sub_columns({"1", "2"});
  // Translation (x1, x2) |-> (x1, x2 - 1) carries the restricted range onto
  // the range of demo_kernel_d, whose generators line up with b's first two.
  AffineReparam t(over({"1", "2"}, {0, -1}), {"1", "2"});
  IsoSpec spec;
  spec.source_columns = a.y_points();
  for (size_t j = 0; j < a.cols(); ++j) {
    TropVector col = a.column(j);
    TropVector restricted = over({"1", "2"}, {col.value_of("1"), col.value_of("2")});
    spec.images.push_back(push_through_generators(d, b12, apply_iso(t, restricted)));
  }
  return spec;
}

int run_reference_examples(std::ostream& out, bool inject_fault) {
  g_fault = inject_fault;
  int failures = 0;
  auto check = [&](const char* name, auto&& fn) {
    bool ok = false;
    std::string note;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      ok = false;
      note = e.what();
    }
    out << (ok ? "ok " : "FAIL ") << name;
    if (!ok && !note.empty()) out << " (" << note << ")";
    out << "\n";
    if (!ok) ++failures;
  };

  check("lower_addition_absorbs_minus_inf", [] {
    return lower_add(ExtReal::neg_inf(), ExtReal::pos_inf()).is_neg_inf() &&
           lower_add(ExtReal(5), ExtReal::neg_inf()).is_neg_inf() &&
           lower_add(ExtReal(5), ExtReal::pos_inf()).is_pos_inf();
  });

  check("upper_addition_absorbs_plus_inf", [] {
    return upper_add(ExtReal::neg_inf(), ExtReal::pos_inf()).is_pos_inf() &&
           upper_add(ExtReal(5), ExtReal::neg_inf()).is_neg_inf();
  });

  check("third_column_is_sup_of_first_two", [] {
    Kernel a = demo_kernel_a();
    return pointwise_sup(a.column(0), a.column(1)) == a.column(2);
  });

  check("hilbert_distances_between_columns", [] {
    Kernel a = demo_kernel_a();
    return hilbert_distance(a.column(0), a.column(1)) == Rational(4) &&
           hilbert_seminorm(over(a.x_points(), {-1, 0, 0})) == Rational(1);
  });

  check("conjugate_of_top_dirac_is_column", [] {
    for (const Kernel& k : {demo_kernel_a(), demo_kernel_d()}) {
      for (size_t j = 0; j < k.cols(); ++j) {
        TropVector f = TropVector::dirac_top(k.y_points(), k.y_points()[j]);
        if (conjugate(k, f) != k.column(j)) return false;
      }
    }
    return true;
  });

  check("projection_fixes_combinations", [] {
    Kernel a = demo_kernel_a();
    std::vector<TropVector> coeffs = {
        over(a.y_points(), {0, 0, 0}),
        over(a.y_points(), {0, ExtReal::neg_inf(), -3}),
        over(a.y_points(), {-1, 2, ExtReal::neg_inf()}),
    };
    for (const auto& c : coeffs) {
      TropVector f = combine(a, CoefficientVector::checked(c));
      if (project(a, f) != f) return false;
      if (!range_membership(a, f)) return false;
    }
    TropVector h = over(a.x_points(), {1, 0, 1});
    return project(a, h) == h;
  });

  check("projection_of_inf_pair_is_third_column", [] {
    Kernel a = demo_kernel_a();
    TropVector f = over(a.x_points(), {1, 0, 1});
    TropVector g = over(a.x_points(), {0, 1, 1});
    return range_membership(a, f) && range_membership(a, g) &&
           project(a, pointwise_inf(f, g)) == a.column(2);
  });

  check("coefficients_unique_at_interior_point", [] {
    Kernel c = demo_kernel_c();
    TropVector f = over(c.x_points(), {0, 0});
    if (combine(c, residual_coefficients(c, f)) != f) return false;
    std::vector<ExtReal> grid = {ExtReal::neg_inf(), -2, -1, 0, 1, 2};
    int hits = 0;
    for (const ExtReal& l1 : grid)
      for (const ExtReal& l2 : grid) {
        TropVector coeff = over(c.y_points(), {l1, l2});
        if (combine(c, CoefficientVector::checked(coeff)) == f) {
          ++hits;
          if (!(l1 == ExtReal(0) && l2 == ExtReal(0))) return false;
        }
      }
    return hits == 1;
  });

  check("metric_kernel_e_x_is_distance_column", [] {
    Kernel k = path_metric_kernel();
    for (size_t i = 0; i < k.rows(); ++i)
      if (e_x_vector(k, k.x_points()[i]) != negate(k.column(i))) return false;
    return true;
  });

  check("e_x_table_of_small_kernels", [] {
    Kernel a = demo_kernel_a();
    Kernel b = demo_kernel_b();
    return e_x_vector(a, "1") == over(a.x_points(), {0, 2, 2}) &&
           e_x_vector(a, "2") == over(a.x_points(), {2, 0, 2}) &&
           e_x_vector(a, "3") == over(a.x_points(), {0, 0, 0}) &&
           e_x_vector(b, "1") == over(b.x_points(), {0, 1, 1}) &&
           e_x_vector(b, "2") == over(b.x_points(), {3, 0, 3}) &&
           e_x_vector(b, "3") == over(b.x_points(), {0, 0, 0});
  });

  check("transpose_conjugate_of_e_x_is_row", [] {
    Kernel a = demo_kernel_a();
    if (transpose_conjugate(a, e_x_vector(a, "1")) != over(a.y_points(), {0, -2, 0}))
      return false;
    for (size_t i = 0; i < a.rows(); ++i)
      if (transpose_conjugate(a, e_x_vector(a, a.x_points()[i])) != a.row(i)) return false;
    return true;
  });

  check("range_elements_lie_in_inf_closure", [] {
    Kernel a = demo_kernel_a();
    std::vector<TropVector> hs;
    for (size_t j = 0; j < a.cols(); ++j) hs.push_back(a.column(j));
    for (const auto& e : e_x_family(a)) hs.push_back(e);
    hs.push_back(combine(
        a, CoefficientVector::checked(over(a.y_points(), {0, ExtReal::neg_inf(), -3}))));
    for (const auto& h : hs)
      if (!in_inf_closure(a, h)) return false;
    return true;
  });

  check("symmetric_metric_kernel_anti_involution", [] {
    Kernel k = path_metric_kernel();
    std::vector<CoefficientVector> samples;
    std::vector<ExtReal> grid = {ExtReal::neg_inf(), -1, 0, 2};
    for (const ExtReal& v1 : grid)
      for (const ExtReal& v2 : grid)
        for (const ExtReal& v3 : grid) {
          if (v1.is_neg_inf() && v2.is_neg_inf() && v3.is_neg_inf()) continue;
          samples.push_back(CoefficientVector::checked(over(k.y_points(), {v1, v2, v3})));
        }
    return check_anti_involution(k, samples);
  });

  check("anti_involution_fails_off_symmetric", [] {
    Kernel d = demo_kernel_d();
    TropVector f = d.column(0);
    TropVector twice = conjugate(d, conjugate(d, f));
    if (twice == f) return false;  // the violation this example exhibits
    std::vector<CoefficientVector> samples = {
        CoefficientVector::checked(over(d.y_points(), {0, ExtReal::neg_inf()}))};
    TropVector witness;
    return !check_anti_involution(d, samples, &witness) && witness == f;
  });

  check("metric_and_inner_product_kernels_strictly_monotone", [] {
    WeakMetric d = shortest_path_metric({"a", "b", "c"}, {{"a", "b", 1}, {"b", "c", 1}});
    if (!strict_trop_monotone(from_metric(d, 1))) return false;
    if (!strict_trop_monotone(from_metric(d, Rational(1, 2)))) return false;
    std::vector<std::vector<Rational>> pts = {{1, 0}, {0, 1}, {1, 1}};
    Kernel inner = inner_product_kernel({"1", "2", "3"}, pts, {"1", "2", "3"}, pts);
    return strict_trop_monotone(inner);
  });

  check("zero_kernel_not_strictly_monotone", [] {
    Kernel zero = make_kernel({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
    return !strict_trop_monotone(zero);
  });

  check("third_column_and_row_redundant", [] {
    Kernel a = demo_kernel_a();
    ReductionReport cols = essential_columns(a);
    ReductionReport rows = essential_rows(a);
    auto expects = [](const ReductionReport& r) {
      return r.essential == std::vector<std::string>{"1", "2"} && r.redundant.size() == 1 &&
             r.redundant[0].label == "3" &&
             r.redundant[0].basis == std::vector<std::string>{"1", "2"} &&
             r.redundant[0].coefficients == std::vector<ExtReal>{ExtReal(0), ExtReal(0)} &&
             r.duplicate_classes.empty();
    };
    return expects(cols) && expects(rows) && !fully_reduced(a) && fully_reduced(demo_kernel_c());
  });

  check("relative_inf_recovers_third_column", [] {
    Kernel a = demo_kernel_a();
    TropVector f = over(a.x_points(), {1, 0, 1});
    TropVector g = over(a.x_points(), {0, 1, 1});
    return relative_inf(a, {f, g}) == a.column(2);
  });

  check("refuters_split_the_redundant_column", [] {
    Kernel a = demo_kernel_a();
    TropVector f = a.column(2);
    auto inf_w = refute_inf_irreducible(a, f);
    if (!inf_w) return false;
    if (relative_inf(a, {inf_w->g, inf_w->h}) != f) return false;
    if (inf_w->g == f || inf_w->h == f) return false;
    auto sup_w = refute_sup_irreducible(a, f);
    if (!sup_w) return false;
    if (pointwise_sup(sup_w->g, sup_w->h) != f) return false;
    return sup_w->g != f && sup_w->h != f;
  });

  check("refuters_silent_on_metric_e_x", [] {
    Kernel k = path_metric_kernel();
    TropVector e = e_x_vector(k, "a");
    return !refute_inf_irreducible(k, e).has_value() &&
           !refute_sup_irreducible(k, e).has_value();
  });

  check("archimedean_classes_of_finite_and_dirac_kernels", [] {
    Kernel a = demo_kernel_a();
    auto classes = archimedean_classes(a);
    if (classes.size() != 1 || !classes[0].maximal || classes[0].members.size() != 3)
      return false;
    if (!archimedean_maximal(a, e_x_vector(a, "2"))) return false;
    Kernel dirac = dirac_kernel({"p", "q"});
    auto dclasses = archimedean_classes(dirac);
    if (dclasses.size() != 2) return false;
    return dclasses[0].maximal && dclasses[1].maximal;
  });

  check("archimedean_order_witnesses", [] {
    std::vector<std::string> pts = {"1", "2"};
    auto cmp = archimedean_leq(over(pts, {0, 5}), over(pts, {3, 1}));
    if (!cmp.leq || !cmp.witness_alpha || *cmp.witness_alpha != ExtReal(4)) return false;
    auto bad = archimedean_leq(over(pts, {ExtReal::neg_inf(), 0}),
                               over(pts, {0, ExtReal::neg_inf()}));
    return !bad.leq;
  });

  check("minimal_normalized_element_over_base_point", [] {
    Kernel k = path_metric_kernel();
    TropVector u = min_S_candidate(k, "a");
    if (u != over(k.x_points(), {0, -1, -2})) return false;
    if (!is_minimal_in_S(k, u, "a")) return false;
    TropVector zero = TropVector::constant(k.x_points(), ExtReal(0));
    TropVector witness;
    if (is_minimal_in_S(k, zero, "a", &witness)) return false;
    return range_membership(k, witness) && leq(witness, zero) && witness != zero &&
           witness.value_of("a") >= ExtReal(0);
  });

  check("translation_is_an_isomorphism", [] {
    Kernel c = demo_kernel_c();
    Kernel d = demo_kernel_d();
    AffineReparam j(over(d.x_points(), {0, -1}), {"1", "2"});
    if (!is_max_plus_iso(c, d, j)) return false;
    if (apply_iso(j, c.column(0)) != d.column(0)) return false;
    TropVector f = over(c.x_points(), {1, 5});
    if (apply_iso(invert_iso(j), apply_iso(j, f)) != f) return false;
    AffineReparam ident(over(d.x_points(), {0, 0}), {"1", "2"});
    return !is_max_plus_iso(c, d, ident);
  });

  check("hilbert_profiles_and_obstruction", [] {
    Kernel a = demo_kernel_a();
    Kernel b = demo_kernel_b();
    std::vector<Rational> pa = {4, 2, 2}, pb = {4, 3, 1};
    if (hilbert_profile(a, ProfileColumns::all) != pa) return false;
    if (hilbert_profile(b, ProfileColumns::all) != pb) return false;
    if (hilbert_profile(a, ProfileColumns::essential) != std::vector<Rational>{4}) return false;
    return hilbert_obstruction(a, b) && !hilbert_obstruction(demo_kernel_c(), demo_kernel_d());
  });

  check("embedding_spec_pushes_columns", [] {
    Kernel b = demo_kernel_b();
    IsoSpec spec = demo_embedding_spec();
    return spec.images.size() == 3 &&
           spec.images[0] == over(b.x_points(), {0, -3, 0}) &&
           spec.images[1] == over(b.x_points(), {-2, -1, -1}) &&
           spec.images[2] == over(b.x_points(), {0, -1, 0});
  });

  check("embedding_has_no_affine_form", [] {
    return !decompose_iso(demo_kernel_a(), demo_kernel_b(), demo_embedding_spec()).has_value();
  });

  check("conjugacy_certificate_between_translates", [] {
    Kernel c = demo_kernel_c();
    Kernel d = demo_kernel_d();
    auto cert = find_kernel_conjugacy(c, d);
    if (!cert) return false;
    if (cert->tau != std::vector<std::string>{"1", "2"}) return false;
    if (cert->sigma != std::vector<std::string>{"1", "2"}) return false;
    if (cert->psi != over(d.x_points(), {0, -1})) return false;
    if (cert->varphi != over(d.y_points(), {0, 1})) return false;
    if (!verify_conjugacy(c, d, *cert)) return false;
    return is_max_plus_iso(c, d, reparam_from_conjugacy(*cert));
  });

  check("push_between_generator_presentations", [] {
    Kernel c = demo_kernel_c();
    Kernel a12 = demo_kernel_a().sub_columns({"1", "2"});
    for (size_t j = 0; j < c.cols(); ++j)
      if (push_through_generators(c, a12, c.column(j)) != a12.column(j)) return false;
    TropVector f = over(c.x_points(), {0, 0});
    TropVector pushed = push_through_generators(c, a12, f);
    if (pushed != over(a12.x_points(), {0, 0, 0})) return false;
    return push_through_generators(a12, c, pushed) == f;
  });

  check("dual_value_depends_on_presentation", [] {
    Kernel wide = demo_dual_wide();
    Kernel narrow = demo_dual_narrow();
    for (size_t j = 0; j < narrow.cols(); ++j)
      if (!range_membership(wide, narrow.column(j))) return false;
    for (size_t j = 0; j < wide.cols(); ++j)
      if (!range_membership(narrow, wide.column(j))) return false;
    TropVector zero = TropVector::constant(wide.x_points(), ExtReal(0));
    if (primal_value(zero, zero) != ExtReal(0)) return false;
    return dual_value(wide, zero, zero) == ExtReal(0) &&
           dual_value(narrow, zero, zero) == ExtReal(-1);
  });

  check("funk_weak_metric_values", [] {
    WeakMetric exact = funk_weak_metric({"p", "q"}, {{Rational(1, 3), Rational(2, 3)},
                                                     {Rational(2, 3), Rational(1, 3)}},
                                        Rational(2));
    if (exact.approximate() || !exact.is_symmetric()) return false;
    if (exact.at(0, 1) != 1 || exact.at(1, 0) != 1) return false;
    WeakMetric approx = funk_weak_metric({"x", "y"}, {{Rational(1, 2), Rational(1, 2)},
                                                      {Rational(3, 4), Rational(1, 4)}});
    if (!approx.approximate() || approx.is_symmetric()) return false;
    double xy = approx.at(0, 1).convert_to<double>();
    double yx = approx.at(1, 0).convert_to<double>();
    return std::abs(xy - std::log(1.5)) <= 1e-9 && std::abs(yx - std::log(2.0)) <= 1e-9;
  });

  check("shortest_path_metric_and_kernel", [] {
    WeakMetric d = shortest_path_metric(
        {"a", "b", "c", "d"},
        {{"a", "b", 1}, {"b", "c", 1}, {"c", "d", 1}, {"d", "a", 1}});
    if (d.at(0, 2) != 2 || d.at(1, 3) != 2 || d.at(0, 1) != 1) return false;
    Kernel k = from_metric(d, 1);
    return k.at(0, 2) == ExtReal(-2) && strict_trop_monotone(k) && is_symmetric(k);
  });

  out << "examples: " << (inject_fault ? "fault injected, " : "")
      << failures << " failure(s)\n";
  g_fault = false;
  return failures;
}

}  // namespace tropkit

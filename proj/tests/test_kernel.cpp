#include "doctest.h"
#include "tropkit/kernel.hpp"
#include "tropkit/reference_examples.hpp"

using namespace tropkit;

namespace {
TropVector over(const std::vector<std::string>& points, std::vector<ExtReal> vals) {
  return TropVector(points, std::move(vals));
}
ExtReal ninf() { return ExtReal::neg_inf(); }
ExtReal pinf() { return ExtReal::pos_inf(); }
}  // namespace

TEST_CASE("kernel validation") {
  std::vector<std::string> xy = {"1", "2"};
  CHECK_THROWS_WITH_AS(Kernel(xy, xy, {{ExtReal(0), pinf()}, {ExtReal(0), ExtReal(0)}}),
                       doctest::Contains("(1,2)"), validation_error);
  // A row of -inf breaks properness.
  CHECK_THROWS_AS(Kernel(xy, xy, {{ninf(), ninf()}, {ExtReal(0), ExtReal(0)}}),
                  validation_error);
  // A column of -inf breaks properness.
  CHECK_THROWS_AS(Kernel(xy, xy, {{ninf(), ExtReal(0)}, {ninf(), ExtReal(0)}}),
                  validation_error);
  CHECK_THROWS_AS(Kernel({"1", "1"}, xy, {{ExtReal(0), ExtReal(0)}, {ExtReal(0), ExtReal(0)}}),
                  validation_error);
  CHECK_THROWS_AS(Kernel(xy, xy, {{ExtReal(0)}, {ExtReal(0)}}), validation_error);

  Kernel k(xy, xy, {{ExtReal(0), ninf()}, {ninf(), ExtReal(0)}});
  CHECK(k.has_minus_inf());
  CHECK(!demo_kernel_a().has_minus_inf());
  CHECK(k.row(0) == over(xy, {0, ninf()}));
  CHECK(k.column(1) == over(xy, {ninf(), 0}));
  CHECK(k.transposed().at(0, 1) == k.at(1, 0));
  CHECK_THROWS_AS(k.x_index("z"), validation_error);
  // Dropping the finite column of a -inf row breaks properness.
  CHECK_THROWS_AS(k.sub_columns({"2"}), validation_error);
  Kernel a12 = demo_kernel_a().sub_columns({"1", "2"});
  CHECK(a12.cols() == 2);
  CHECK(a12.column(0) == demo_kernel_a().column(0));
}

TEST_CASE("coefficient vectors reject +inf unless raw") {
  std::vector<std::string> ys = {"1", "2"};
  CHECK_THROWS_AS(CoefficientVector::checked(over(ys, {0, pinf()})), validation_error);
  CHECK(CoefficientVector::raw(over(ys, {0, pinf()})).vec().value_of("2").is_pos_inf());
}

TEST_CASE("conjugation on the worked 3x3 kernel") {
  Kernel a = demo_kernel_a();
  const auto& X = a.x_points();

  // Conjugating a top dirac yields the matching column.
  for (size_t j = 0; j < a.cols(); ++j)
    CHECK(conjugate(a, TropVector::dirac_top(a.y_points(), a.y_points()[j])) == a.column(j));

  // Frozen e_x table.
  CHECK(e_x_vector(a, "1") == over(X, {0, 2, 2}));
  CHECK(e_x_vector(a, "2") == over(X, {2, 0, 2}));
  CHECK(e_x_vector(a, "3") == over(X, {0, 0, 0}));
  for (const auto& e : e_x_family(a)) CHECK(range_membership(a, e));

  // The transposed conjugation carries e_x back to the row at x.
  CHECK(transpose_conjugate(a, e_x_vector(a, "1")) == over(a.y_points(), {0, -2, 0}));
  for (size_t i = 0; i < a.rows(); ++i)
    CHECK(transpose_conjugate(a, e_x_vector(a, X[i])) == a.row(i));

  // e_x vanishes at its base point and never hits -inf on a proper kernel.
  for (size_t i = 0; i < a.rows(); ++i) {
    TropVector e = e_x_vector(a, X[i]);
    CHECK(e.value_of(X[i]) == ExtReal(0));
    for (size_t z = 0; z < e.size(); ++z) CHECK(!e.at(z).is_neg_inf());
  }
}

TEST_CASE("projection and residuation") {
  Kernel a = demo_kernel_a();
  const auto& X = a.x_points();

  TropVector f = over(X, {1, 0, 1});
  TropVector g = over(X, {0, 1, 1});
  CHECK(range_membership(a, f));
  CHECK(range_membership(a, g));
  CHECK(project(a, pointwise_inf(f, g)) == a.column(2));

  // Residual coefficients reproduce the projection exactly.
  TropVector h = over(X, {2, -1, 0});
  TropVector p = project(a, h);
  CHECK(leq(p, h));
  CHECK(project(a, p) == p);
  CHECK(combine(a, residual_coefficients(a, h)) == p);

  // Monotonicity of the projection.
  CHECK(leq(project(a, over(X, {0, -1, -1})), project(a, over(X, {1, 0, 0}))));

  // The all +inf vector is a fixed point.
  TropVector top = TropVector::constant(X, pinf());
  CHECK(project(a, top) == top);

  // Combinations with -inf coefficients stay in range.
  TropVector mixed = combine(a, CoefficientVector::checked(over(a.y_points(), {0, ninf(), -3})));
  CHECK(range_membership(a, mixed));
  CHECK(in_inf_closure(a, mixed));
}

TEST_CASE("residual coefficients can carry +inf on degenerate arguments") {
  // On the identity-like kernel, h = (+inf, 0) forces an unbounded first
  // coefficient; clipping it would break combine(residual(h)) == project(h).
  std::vector<std::string> xy = {"p", "q"};
  Kernel dirac(xy, xy, {{ExtReal(0), ninf()}, {ninf(), ExtReal(0)}});
  TropVector h = over(xy, {pinf(), 0});
  CoefficientVector r = residual_coefficients(dirac, h);
  CHECK(r.vec().value_of("p").is_pos_inf());
  CHECK(combine(dirac, r) == project(dirac, h));
  CHECK(project(dirac, h) == h);
}

TEST_CASE("inf closure membership") {
  Kernel a = demo_kernel_a();
  for (size_t j = 0; j < a.cols(); ++j) CHECK(in_inf_closure(a, a.column(j)));
  CHECK(in_inf_closure(a, TropVector::constant(a.x_points(), pinf())));
  // Not every vector lies in the closure of the range.
  CHECK(!in_inf_closure(a, over(a.x_points(), {0, 0, -5})));
}

TEST_CASE("anti involution on symmetric kernels only") {
  Kernel c = demo_kernel_c();
  CHECK(is_symmetric(c));
  std::vector<CoefficientVector> samples;
  for (int v1 = -2; v1 <= 2; ++v1)
    for (int v2 = -2; v2 <= 2; ++v2)
      samples.push_back(
          CoefficientVector::checked(over(c.y_points(), {ExtReal(v1), ExtReal(v2)})));
  samples.push_back(CoefficientVector::checked(over(c.y_points(), {0, ninf()})));
  CHECK(check_anti_involution(c, samples));

  Kernel d = demo_kernel_d();
  CHECK(!is_symmetric(d));
  TropVector f = d.column(0);
  CHECK(conjugate(d, conjugate(d, f)) != f);
  TropVector witness;
  std::vector<CoefficientVector> one = {
      CoefficientVector::checked(over(d.y_points(), {0, ninf()}))};
  CHECK(!check_anti_involution(d, one, &witness));
  CHECK(witness == f);
}

TEST_CASE("strict tropical monotonicity") {
  // demo_kernel_a fails it: the (1,3) pair is tight.
  CHECK(!strict_trop_monotone(demo_kernel_a()));
  CHECK(strict_trop_monotone(demo_kernel_c()));
  std::vector<std::string> xy = {"1", "2"};
  Kernel zero(xy, xy, {{ExtReal(0), ExtReal(0)}, {ExtReal(0), ExtReal(0)}});
  CHECK(!strict_trop_monotone(zero));
  CHECK_THROWS_AS(strict_trop_monotone(demo_dual_narrow()), validation_error);
}

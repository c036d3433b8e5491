#include "doctest.h"
#include "tropkit/factories.hpp"
#include "tropkit/irreducible.hpp"
#include "tropkit/isophi.hpp"
#include "tropkit/reference_examples.hpp"

using namespace tropkit;

namespace {
TropVector over(const std::vector<std::string>& points, std::vector<ExtReal> vals) {
  return TropVector(points, std::move(vals));
}
ExtReal ninf() { return ExtReal::neg_inf(); }
}  // namespace

TEST_CASE("affine reparametrizations") {
  std::vector<std::string> pts = {"1", "2"};
  CHECK_THROWS_AS(AffineReparam(over(pts, {0, ninf()}), {"1", "2"}), validation_error);
  CHECK_THROWS_AS(AffineReparam(over(pts, {0, 0}), {"1", "1"}), validation_error);
  CHECK_THROWS_AS(AffineReparam(over(pts, {0, 0}), {"1"}), validation_error);

  AffineReparam j(over(pts, {0, -1}), {"2", "1"});  // also swaps the points
  TropVector f = over(pts, {ExtReal(3), ninf()});
  TropVector jf = apply_iso(j, f);
  CHECK(jf == over(pts, {ninf(), 2}));

  AffineReparam inv = invert_iso(j);
  // The inverse presents its output over phi's order; realign to compare.
  TropVector back = apply_iso(inv, jf);
  CHECK(back.points() == j.phi);
  CHECK(back.reindexed(pts) == f);
  // Inversion is an involution.
  AffineReparam twice = invert_iso(inv);
  CHECK(twice.g == j.g);
  CHECK(twice.phi == j.phi);

  CHECK_THROWS_AS(apply_iso(j, over({"a", "b"}, {0, 0})), validation_error);
}

TEST_CASE("translation between the 2x2 kernels is an isomorphism") {
  Kernel c = demo_kernel_c();
  Kernel d = demo_kernel_d();
  AffineReparam j(over(d.x_points(), {0, -1}), {"1", "2"});
  CHECK(is_max_plus_iso(c, d, j));
  CHECK(apply_iso(j, c.column(0)) == d.column(0));
  // The second generator lands on a shifted copy of the matching column.
  TropVector img = apply_iso(j, c.column(1));
  CHECK(img == lower_add(d.column(1), ExtReal(-1)));
  CHECK(range_membership(d, img));

  AffineReparam ident(over(d.x_points(), {0, 0}), {"1", "2"});
  CHECK(!is_max_plus_iso(c, d, ident));
}

TEST_CASE("decompose recovers an affine map from its column images") {
  Kernel c = demo_kernel_c();
  Kernel d = demo_kernel_d();
  AffineReparam j(over(d.x_points(), {0, -1}), {"1", "2"});
  IsoSpec spec = iso_spec_from_reparam(c, d, j);
  REQUIRE(spec.images.size() == 2);
  CHECK(spec.images[0] == d.column(0));

  auto rec = decompose_iso(c, d, spec);
  REQUIRE(rec.has_value());
  CHECK(rec->g == j.g);
  CHECK(rec->phi == j.phi);
}

TEST_CASE("decompose recovers a map that permutes the ground set") {
  Kernel f = from_metric(shortest_path_metric({"a", "b", "c"}, {{"a", "b", 1}, {"b", "c", 1}}), 1);
  // g + (column images rotated through b -> c -> a).
  TropVector g = over(f.x_points(), {2, 0, -1});
  std::vector<std::string> phi = {"b", "c", "a"};
  AffineReparam j(g, phi);
  std::vector<std::vector<ExtReal>> rows;
  for (size_t i = 0; i < 3; ++i) {
    rows.push_back({});
    for (size_t y = 0; y < 3; ++y)
      rows.back().push_back(lower_add(g.at(i), f.at(f.x_index(phi[i]), y)));
  }
  Kernel dst(f.x_points(), f.y_points(), rows);
  CHECK(is_max_plus_iso(f, dst, j));

  IsoSpec spec{f.y_points(), {dst.column(0), dst.column(1), dst.column(2)}};
  auto rec = decompose_iso(f, dst, spec);
  REQUIRE(rec.has_value());
  CHECK(rec->g == g);
  CHECK(rec->phi == phi);
}

TEST_CASE("decompose rejects malformed or inconsistent specs") {
  Kernel a = demo_kernel_a();
  Kernel b = demo_kernel_b();

  IsoSpec wrong_count{a.y_points(), {b.column(0)}};
  CHECK_THROWS_AS(decompose_iso(a, b, wrong_count), validation_error);

  // Sending each generator to its positional partner is inconsistent: the
  // third column of a is the sup of the first two, but b's third column
  // shifted by 1 is not the sup of the corresponding images.
  IsoSpec skewed{a.y_points(),
                 {b.column(0), b.column(1), lower_add(b.column(2), ExtReal(1))}};
  CHECK_THROWS_WITH_AS(decompose_iso(a, b, skewed), doctest::Contains("ill defined"),
                       validation_error);

  // Collapsing both generators onto one image kills injectivity.
  Kernel c = demo_kernel_c();
  Kernel d = demo_kernel_d();
  IsoSpec collapsed{c.y_points(), {d.column(0), lower_add(d.column(0), ExtReal(-2))}};
  CHECK_THROWS_WITH_AS(decompose_iso(c, d, collapsed), doctest::Contains("injective"),
                       validation_error);

  // An image off the target range trips the family consistency checks.
  CHECK(!range_membership(d, over(d.x_points(), {-2, 0})));
  IsoSpec outside{c.y_points(), {over(d.x_points(), {-2, 0}), d.column(1)}};
  CHECK_THROWS_AS(decompose_iso(c, d, outside), validation_error);
}

TEST_CASE("the composed embedding admits no affine form") {
  IsoSpec spec = demo_embedding_spec();
  Kernel b = demo_kernel_b();
  CHECK(spec.images[0] == over(b.x_points(), {0, -3, 0}));
  CHECK(spec.images[1] == over(b.x_points(), {-2, -1, -1}));
  CHECK(spec.images[2] == over(b.x_points(), {0, -1, 0}));
  CHECK(!decompose_iso(demo_kernel_a(), b, spec).has_value());
}

TEST_CASE("hilbert profiles and the obstruction") {
  Kernel a = demo_kernel_a();
  Kernel b = demo_kernel_b();
  CHECK(hilbert_profile(a, ProfileColumns::all) == std::vector<Rational>{4, 2, 2});
  CHECK(hilbert_profile(b, ProfileColumns::all) == std::vector<Rational>{4, 3, 1});
  CHECK(hilbert_profile(a, ProfileColumns::essential) == std::vector<Rational>{4});
  CHECK(hilbert_obstruction(a, b));
  CHECK(!hilbert_obstruction(demo_kernel_c(), demo_kernel_d()));
  CHECK(!hilbert_obstruction(a, a));

  // Columns with -inf entries have no finite pairwise distance.
  CHECK_THROWS_AS(hilbert_profile(dirac_kernel({"p", "q"}), ProfileColumns::all),
                  validation_error);
}

TEST_CASE("kernel conjugacy search and certificates") {
  Kernel c = demo_kernel_c();
  Kernel d = demo_kernel_d();
  auto cert = find_kernel_conjugacy(c, d);
  REQUIRE(cert.has_value());
  CHECK(cert->tau == std::vector<std::string>{"1", "2"});
  CHECK(cert->sigma == std::vector<std::string>{"1", "2"});
  CHECK(cert->psi == over(d.x_points(), {0, -1}));
  CHECK(cert->varphi == over(d.y_points(), {0, 1}));
  CHECK(verify_conjugacy(c, d, *cert));

  // Tampering with the certificate breaks verification.
  KernelConjugacy bad = *cert;
  bad.psi = over(d.x_points(), {1, -1});
  CHECK(!verify_conjugacy(c, d, bad));

  // The induced reparametrization is a genuine isomorphism.
  AffineReparam j = reparam_from_conjugacy(*cert);
  CHECK(j.g == cert->psi);
  CHECK(j.phi == cert->tau);
  CHECK(is_max_plus_iso(c, d, j));

  // Self conjugacy is the identity certificate.
  auto self = find_kernel_conjugacy(c, c);
  REQUIRE(self.has_value());
  CHECK(self->tau == c.x_points());
  CHECK(self->psi == TropVector::constant(c.x_points(), ExtReal(0)));

  // Kernels of different shape are not conjugate.
  Kernel path3 = from_metric(
      shortest_path_metric({"a", "b", "c"}, {{"a", "b", 1}, {"b", "c", 1}}), 1);
  REQUIRE(fully_reduced(path3));
  CHECK(!find_kernel_conjugacy(c, path3).has_value());

  // Non fully reduced inputs are refused.
  CHECK_THROWS_AS(find_kernel_conjugacy(demo_kernel_a(), demo_kernel_b()), validation_error);
}

TEST_CASE("planted conjugacies are found") {
  // c(x',y') = psi(x') + b(tau x', sigma y') + varphi(y') with a row swap.
  Kernel b({"1", "2"}, {"1", "2"}, {{ExtReal(0), ExtReal(-5)}, {ExtReal(-2), ExtReal(1)}});
  REQUIRE(fully_reduced(b));
  std::vector<std::string> tau = {"2", "1"};
  std::vector<std::string> sigma = {"2", "1"};
  std::vector<ExtReal> psi = {3, -4};
  std::vector<ExtReal> phi = {2, 6};
  std::vector<std::vector<ExtReal>> entries(2, std::vector<ExtReal>(2, ExtReal(0)));
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) {
      size_t bi = b.x_index(tau[i]), bj = b.y_index(sigma[j]);
      entries[i][j] = ExtReal(psi[i].value() + b.at(bi, bj).value() + phi[j].value());
    }
  Kernel c({"1", "2"}, {"1", "2"}, entries);
  REQUIRE(fully_reduced(c));
  auto cert = find_kernel_conjugacy(b, c);
  REQUIRE(cert.has_value());
  CHECK(verify_conjugacy(b, c, *cert));
}

TEST_CASE("pushing through generator presentations") {
  Kernel c = demo_kernel_c();
  Kernel a12 = demo_kernel_a().sub_columns({"1", "2"});
  for (size_t j = 0; j < c.cols(); ++j)
    CHECK(push_through_generators(c, a12, c.column(j)) == a12.column(j));
  TropVector f = over(c.x_points(), {0, 0});
  TropVector pushed = push_through_generators(c, a12, f);
  CHECK(pushed == over(a12.x_points(), {0, 0, 0}));
  CHECK(push_through_generators(a12, c, pushed) == f);

  CHECK_THROWS_AS(push_through_generators(demo_kernel_a(), c, demo_kernel_a().column(0)),
                  validation_error);  // column counts differ
  CHECK_THROWS_AS(push_through_generators(c, a12, over(c.x_points(), {0, 3})),
                  validation_error);  // not in the source range
}

TEST_CASE("primal and dual values") {
  Kernel wide = demo_dual_wide();
  Kernel narrow = demo_dual_narrow();
  TropVector zero = TropVector::constant(wide.x_points(), ExtReal(0));
  CHECK(primal_value(zero, zero) == ExtReal(0));
  CHECK(dual_value(wide, zero, zero) == ExtReal(0));
  CHECK(dual_value(narrow, zero, zero) == ExtReal(-1));

  // Weak duality on assorted vectors.
  std::vector<TropVector> fs = {
      over(wide.x_points(), {1, -2, 0}),
      over(wide.x_points(), {ninf(), 0, 3}),
      over(wide.x_points(), {0, 0, ninf()}),
  };
  for (const auto& f : fs)
    for (const auto& g : fs) {
      CHECK(dual_value(wide, f, g) <= primal_value(f, g));
      CHECK(dual_value(narrow, f, g) <= primal_value(f, g));
    }

  CHECK(primal_value(over(wide.x_points(), {ninf(), 0, 0}),
                     over(wide.x_points(), {0, ninf(), 0})) == ExtReal(ninf()));
  CHECK_THROWS_AS(dual_value(wide, zero, over({"a", "b", "c"}, {0, 0, 0})), validation_error);
}

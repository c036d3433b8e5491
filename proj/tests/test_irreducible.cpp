#include "doctest.h"
#include "tropkit/factories.hpp"
#include "tropkit/irreducible.hpp"
#include "tropkit/reference_examples.hpp"

using namespace tropkit;

namespace {
TropVector over(const std::vector<std::string>& points, std::vector<ExtReal> vals) {
  return TropVector(points, std::move(vals));
}
Kernel path_kernel() {
  return from_metric(shortest_path_metric({"a", "b", "c"}, {{"a", "b", 1}, {"b", "c", 1}}), 1);
}
}  // namespace

TEST_CASE("essential columns and rows of the worked kernel") {
  Kernel a = demo_kernel_a();
  ReductionReport cols = essential_columns(a);
  CHECK(cols.essential == std::vector<std::string>{"1", "2"});
  REQUIRE(cols.redundant.size() == 1);
  CHECK(cols.redundant[0].label == "3");
  CHECK(cols.redundant[0].basis == std::vector<std::string>{"1", "2"});
  CHECK(cols.redundant[0].coefficients == std::vector<ExtReal>{ExtReal(0), ExtReal(0)});
  CHECK(cols.duplicate_classes.empty());
  CHECK(!cols.has_minus_inf);

  // The witness reconstructs the column exactly.
  std::vector<TropVector> parts;
  for (size_t i = 0; i < cols.redundant[0].basis.size(); ++i)
    parts.push_back(lower_add(a.column(a.y_index(cols.redundant[0].basis[i])),
                              cols.redundant[0].coefficients[i]));
  CHECK(pointwise_sup(parts) == a.column(2));

  ReductionReport rows = essential_rows(a);
  CHECK(rows.essential == std::vector<std::string>{"1", "2"});
  REQUIRE(rows.redundant.size() == 1);
  CHECK(rows.redundant[0].label == "3");

  CHECK(!fully_reduced(a));
  CHECK(fully_reduced(demo_kernel_c()));
  CHECK(fully_reduced(demo_kernel_d()));
}

TEST_CASE("duplicate columns collapse to the first label") {
  // Columns 1 and 3 agree up to the constant 5; column 2 is genuinely apart.
  std::vector<std::string> xs = {"1", "2"};
  std::vector<std::string> ys = {"1", "2", "3"};
  Kernel k(xs, ys, {{ExtReal(0), ExtReal(-4), ExtReal(5)}, {ExtReal(-3), ExtReal(0), ExtReal(2)}});
  ReductionReport rep = essential_columns(k);
  REQUIRE(rep.duplicate_classes.size() == 1);
  CHECK(rep.duplicate_classes[0] == std::vector<std::string>{"1", "3"});
  // Non-representative duplicates are reported in their class, not as
  // residuation redundancies; only representatives are tested further.
  CHECK(rep.essential == std::vector<std::string>{"1", "2"});
  CHECK(rep.redundant.empty());
  CHECK(!fully_reduced(k));
}

TEST_CASE("kernels with minus infinity are flagged") {
  Kernel dk = dirac_kernel({"p", "q"});
  ReductionReport rep = essential_columns(dk);
  CHECK(rep.has_minus_inf);
  CHECK(rep.essential == std::vector<std::string>{"p", "q"});
}

TEST_CASE("relative infimum") {
  Kernel a = demo_kernel_a();
  TropVector f = over(a.x_points(), {1, 0, 1});
  TropVector g = over(a.x_points(), {0, 1, 1});
  CHECK(relative_inf(a, {f, g}) == a.column(2));
  CHECK(relative_inf(a, {f}) == f);
  CHECK_THROWS_AS(relative_inf(a, {over(a.x_points(), {0, 0, -5})}), validation_error);
  CHECK_THROWS_AS(relative_inf(a, {}), validation_error);
}

TEST_CASE("refuters on the worked kernel") {
  Kernel a = demo_kernel_a();
  TropVector f = a.column(2);

  auto inf_w = refute_inf_irreducible(a, f);
  REQUIRE(inf_w.has_value());
  CHECK(range_membership(a, inf_w->g));
  CHECK(range_membership(a, inf_w->h));
  CHECK(inf_w->g != f);
  CHECK(inf_w->h != f);
  CHECK(relative_inf(a, {inf_w->g, inf_w->h}) == f);

  auto sup_w = refute_sup_irreducible(a, f);
  REQUIRE(sup_w.has_value());
  CHECK(pointwise_sup(sup_w->g, sup_w->h) == f);
  CHECK(sup_w->g != f);
  CHECK(sup_w->h != f);

  // Zero budget means no verdict.
  CHECK(!refute_inf_irreducible(a, f, 0).has_value());
  // A different seed still returns a valid witness.
  auto seeded = refute_inf_irreducible(a, f, 20000, 7);
  REQUIRE(seeded.has_value());
  CHECK(relative_inf(a, {seeded->g, seeded->h}) == f);

  CHECK_THROWS_AS(refute_inf_irreducible(a, over(a.x_points(), {0, 0, -5})), validation_error);
}

TEST_CASE("refuters on metric peak functions") {
  Kernel k = path_kernel();
  // Peak functions are inf-irreducible at every point.
  for (const auto& x : k.x_points())
    CHECK(!refute_inf_irreducible(k, e_x_vector(k, x)).has_value());
  // Endpoint peaks are sup-irreducible too.
  CHECK(!refute_sup_irreducible(k, e_x_vector(k, "a")).has_value());
  CHECK(!refute_sup_irreducible(k, e_x_vector(k, "c")).has_value());
  // The interior peak (1,0,1) splits: sup((1,0,0),(0,0,1)) reaches it.
  TropVector eb = e_x_vector(k, "b");
  auto w = refute_sup_irreducible(k, eb);
  REQUIRE(w.has_value());
  CHECK(range_membership(k, w->g));
  CHECK(range_membership(k, w->h));
  CHECK(w->g != eb);
  CHECK(w->h != eb);
  CHECK(pointwise_sup(w->g, w->h) == eb);
}

TEST_CASE("archimedean classes") {
  Kernel a = demo_kernel_a();
  auto classes = archimedean_classes(a);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].members == std::vector<std::string>{"1", "2", "3"});
  CHECK(classes[0].maximal);
  CHECK(archimedean_maximal(a, e_x_vector(a, "1")));
  CHECK(archimedean_maximal(a, a.column(0)));

  Kernel dk = dirac_kernel({"p", "q"});
  auto dclasses = archimedean_classes(dk);
  REQUIRE(dclasses.size() == 2);
  CHECK(dclasses[0].maximal);
  CHECK(dclasses[1].maximal);

  CHECK_THROWS_AS(archimedean_maximal(a, over(a.x_points(), {0, 0, -5})), validation_error);
}

TEST_CASE("minimal elements over a base point") {
  Kernel k = path_kernel();
  CHECK_THROWS_AS(min_S_candidate(demo_kernel_a(), "1"), validation_error);  // not strict

  TropVector u = min_S_candidate(k, "a");
  CHECK(u == over(k.x_points(), {0, -1, -2}));
  CHECK(u.value_of("a") == ExtReal(0));
  CHECK(range_membership(k, u));
  CHECK(is_minimal_in_S(k, u, "a"));
  CHECK(is_minimal_in_S(k, min_S_candidate(k, "b"), "b"));

  TropVector zero = TropVector::constant(k.x_points(), ExtReal(0));
  TropVector witness;
  CHECK(!is_minimal_in_S(k, zero, "a", &witness));
  CHECK(range_membership(k, witness));
  CHECK(leq(witness, zero));
  CHECK(witness != zero);
  CHECK(witness.value_of("a") >= ExtReal(0));

  CHECK_THROWS_AS(is_minimal_in_S(k, over(k.x_points(), {-1, 0, 0}), "a"), validation_error);
}

#pragma once

#include <optional>

#include "tropkit/kernel.hpp"

namespace tropkit {

// Affine representation of a map J between range spaces:
//   (Jf)(x) = g(x) + f(phi(x))
// where g is finite over the target ground set X and phi : X -> Y is a
// bijection onto the source ground set. phi[i] is the source point paired
// with g.points()[i].
struct AffineReparam {
  AffineReparam(TropVector g_in, std::vector<std::string> phi_in);
  TropVector g;
  std::vector<std::string> phi;
};

// (Jf)(x) = lower_add(g(x), f(phi(x))). f must be over exactly the phi image.
TropVector apply_iso(const AffineReparam& j, const TropVector& f);

// (g, phi) |-> (-g o phi^{-1}, phi^{-1}); an exact involution.
AffineReparam invert_iso(const AffineReparam& j);

// Whether J maps Rg(src) into Rg(dst) and J^{-1} maps Rg(dst) into Rg(src),
// checked on generator columns (sufficient: both maps commute with sups and
// scalar shifts). phi must map dst's ground points onto src's ground points.
bool is_max_plus_iso(const Kernel& src, const Kernel& dst, const AffineReparam& j);

// A map Rg(src) -> Rg(dst) described only by where the generator columns go:
// images[j] is the image of src column j over dst's ground set.
struct IsoSpec {
  std::vector<std::string> source_columns;  // src y labels, input order
  std::vector<TropVector> images;           // over dst x points
};

IsoSpec iso_spec_from_reparam(const Kernel& src, const Kernel& dst, const AffineReparam& j);

// Attempts to recover the affine form (g, phi) of the map an IsoSpec induces.
// Verifies the spec is well defined and injective on a family (columns,
// pairwise sups of columns, e_x vectors, each with small scalar shifts; two
// representations of the same vector must push to equal images), pushes every
// source e_x through the images, matches the result against a target e_x up
// to a finite constant, and cross-checks the candidate: for every target
// point x, inf_y upper_add(J e'_y(x), J^{-1} e_x(y)) must be 0 with the
// infimum attained exactly at y = phi(x), and the candidate must map the two
// ranges onto each other. Returns nullopt when any membership, uniqueness or
// cross-check fails; throws on a malformed or ill-defined spec.
std::optional<AffineReparam> decompose_iso(const Kernel& src, const Kernel& dst,
                                           const IsoSpec& spec);

enum class ProfileColumns { all, essential };

// Multiset of pairwise Hilbert distances between distinct columns (all of
// them, or the essential ones only), sorted in decreasing order. The compared
// columns must be all-finite.
std::vector<Rational> hilbert_profile(const Kernel& b, ProfileColumns sel);

// True iff the full-column profiles differ; a differing profile rules out any
// column-correspondence isomorphism since these maps are Hilbert isometries.
bool hilbert_obstruction(const Kernel& a, const Kernel& b);

// Certificate for c(x',y') = psi(x') + b(tau(x'), sigma(y')) + varphi(y').
struct KernelConjugacy {
  std::vector<std::string> tau;    // tau[i]: x point of b matched to c's x point i
  std::vector<std::string> sigma;  // sigma[j]: y point of b matched to c's y point j
  TropVector psi;                  // finite, over c's x points
  TropVector varphi;               // finite, over c's y points
};

// Exact check of the conjugacy identity at every position.
bool verify_conjugacy(const Kernel& b, const Kernel& c, const KernelConjugacy& k);

// Backtracking search over the bijections tau and sigma in lexicographic
// order (input order on both axes), pruned by pairwise row and column Hilbert
// distances, accepting the first pair whose difference table
// D = c - b o (tau, sigma) is additively separable:
//   D(x',y') = D(x',y'0) + D(x'0,y') - D(x'0,y'0).
// Requires both kernels finite and fully reduced; mismatched sizes return
// nullopt. Axes above 9 points are refused unless allow_large is set.
std::optional<KernelConjugacy> find_kernel_conjugacy(const Kernel& b, const Kernel& c,
                                                     bool allow_large = false);

// The order isomorphism J f = psi + f o tau : Rg(b) -> Rg(c) induced by a
// conjugacy certificate.
AffineReparam reparam_from_conjugacy(const KernelConjugacy& k);

// Re-expresses f in dst's generators positionally: combine(dst, a) where a
// are f's residual coefficients in src. Requires equal column counts and
// f in Rg(src).
TropVector push_through_generators(const Kernel& src, const Kernel& dst,
                                   const TropVector& f);

// sup_y [ inf_z (g(z) - b(z,y)) + inf_x (f(x) + b(x,y)) ], sums taken with
// -inf absorbing. Never exceeds primal_value (weak duality).
ExtReal dual_value(const Kernel& b, const TropVector& f, const TropVector& g);

// inf_x lower_add(f(x), g(x)).
ExtReal primal_value(const TropVector& f, const TropVector& g);

}  // namespace tropkit

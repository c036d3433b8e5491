#pragma once

#include <optional>

#include "tropkit/kernel.hpp"

namespace tropkit {

struct ColumnRedundancy {
  std::string label;
  // The redundant column equals the sup-combination of the basis columns
  // (the other duplicate-class representatives) with these coefficients.
  std::vector<std::string> basis;
  std::vector<ExtReal> coefficients;
};

struct ReductionReport {
  std::vector<std::string> essential;                      // input order
  std::vector<ColumnRedundancy> redundant;                 // input order
  std::vector<std::vector<std::string>> duplicate_classes; // classes of size >= 2
  // The extremality theory backing the residuation test is stated for
  // real-valued kernels; reports flag kernels that contain -inf entries.
  bool has_minus_inf = false;
};

// Collapses columns equal up to an additive constant onto the
// lexicographically-first label of each class, then tests each remaining
// column c_j against the residuation bound sup_{l != j} (lambda_l + c_l) with
// lambda_l = min_i (c_j(i) - c_l(i)) in the residuation sense: a column is
// redundant exactly when the bound reproduces it.
ReductionReport essential_columns(const Kernel& b);
ReductionReport essential_rows(const Kernel& b);

// Every column and every row essential, and no duplicate class on either axis.
bool fully_reduced(const Kernel& b);

// Greatest range element below the pointwise infimum of the inputs, all of
// which must already lie in Rg(b).
TropVector relative_inf(const Kernel& b, const std::vector<TropVector>& fs);

struct IrreducibilityWitness {
  TropVector g, h;
};

// Sound, budget-bounded refuters. A returned witness is always valid: both
// components lie in Rg(b), differ from f, and their relative infimum
// (resp. pointwise sup) equals f exactly. Absence of a witness is not a proof
// of irreducibility. Candidates are drawn from a fixed grammar: e_x vectors
// and columns shifted by scalars from a breakpoint set, and sups of at most
// two shifted columns. `seed` permutes the candidate order deterministically;
// seed 0 keeps the natural order.
std::optional<IrreducibilityWitness> refute_inf_irreducible(const Kernel& b,
                                                            const TropVector& f,
                                                            size_t budget = 20000,
                                                            unsigned seed = 0);
std::optional<IrreducibilityWitness> refute_sup_irreducible(const Kernel& b,
                                                            const TropVector& f,
                                                            size_t budget = 20000,
                                                            unsigned seed = 0);

struct ArchClass {
  std::vector<std::string> members;  // x labels whose e_x fall in this class
  bool maximal = false;
};

// Partition of the e_x family by mutual archimedean comparability, with
// maximality relative to the induced partial order on classes.
std::vector<ArchClass> archimedean_classes(const Kernel& b);

// True iff some x in the domain of f has [f] = [e_x] with [e_x] maximal among
// the e_z classes. Requires f in Rg(b) with nonempty domain.
bool archimedean_maximal(const Kernel& b, const TropVector& f);

// b(.,x) - b(x,x), the canonical candidate for a minimal element of
// S(x) = { u in Rg(b) : u(x) >= 0 }. Requires strict tropical monotonicity.
TropVector min_S_candidate(const Kernel& b, const std::string& x_label);

// Deflation scan: for every finite coordinate z and every step delta from the
// breakpoint set of {u(i) - column(i)} differences, projects u with u(z)
// lowered by delta and looks for a range element v <= u, v != u, v(x) >= 0.
// Returns false (with the witness, if requested) when one is found; a true
// result is exact at the scanned breakpoints but the scan is not a proof.
bool is_minimal_in_S(const Kernel& b, const TropVector& u, const std::string& x_label,
                     TropVector* witness = nullptr);

}  // namespace tropkit

#pragma once

#include <iosfwd>

#include "tropkit/isophi.hpp"
#include "tropkit/kernel.hpp"

namespace tropkit {

// Small built-in matrices used by the bundled reference examples and the test
// suite. Rows are x points "1","2",...; columns are y points "1","2",....
Kernel demo_kernel_a();      // ((0,-2,0),(-2,0,0),(0,0,0))
Kernel demo_kernel_b();      // ((0,-1,0),(-3,0,0),(0,0,0))
Kernel demo_kernel_c();      // ((0,-2),(-2,0))
Kernel demo_kernel_d();      // ((0,-1),(-3,0))
Kernel demo_dual_wide();     // ((0,-1,0),(-1,0,0),(0,0,0))
Kernel demo_dual_narrow();   // ((0,-1),(-1,0),(0,0)): same range, fewer columns

// The column map Rg(demo_kernel_a) -> Rg(demo_kernel_b) built by composing
// restriction to the first two ground points, the translation
// (x1,x2) |-> (x1,x2-1), and the generator correspondence into demo_kernel_b.
// It is an order isomorphism onto its image but admits no affine form.
IsoSpec demo_embedding_spec();

// Runs every bundled reference example as a named assertion, printing one
// "ok <name>" / "FAIL <name>" line each, deterministically. Returns the number
// of failures. `inject_fault` corrupts one built-in matrix first, as a
// negative control that failures are detected and named.
int run_reference_examples(std::ostream& out, bool inject_fault = false);

}  // namespace tropkit

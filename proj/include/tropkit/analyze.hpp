#pragma once

#include <optional>
#include <string>

#include "tropkit/irreducible.hpp"
#include "tropkit/kernel.hpp"

namespace tropkit {

// Structural summary of a kernel: deterministic closure and separation
// probes, both reduction reports, the e_x table, and the archimedean class
// partition. `strict_monotone` is only populated for square kernels.
struct AnalysisReport {
  std::vector<std::string> x_points, y_points;
  bool approximate = false;
  bool has_minus_inf = false;
  bool closure_ok = false;
  bool separation_ok = false;
  ReductionReport columns;
  ReductionReport rows;
  bool fully_reduced = false;
  std::optional<bool> strict_monotone;
  std::vector<TropVector> e_x_table;  // entry i is e_x for x = x_points[i]
  std::vector<ArchClass> arch_classes;
};

AnalysisReport analyze_kernel(const Kernel& b);

// Plain-text rendering with a stable line grammar (one `key: value` line per
// scalar fact, indented blocks for tables).
std::string render_text(const AnalysisReport& r);

// The same content as a JSON object.
std::string render_json(const AnalysisReport& r);

}  // namespace tropkit

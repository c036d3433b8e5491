#pragma once

#include <string>

#include "tropkit/kernel.hpp"
#include "tropkit/metric.hpp"

namespace tropkit {

// Documents are JSON with a "kind" discriminator:
//   kernel      {kind, x_points, y_points, entries, approximate}
//   vector      {kind, points, values}
//   weak_metric {kind, points, delta, approximate}
// Cells are JSON integers, strings holding exact rational or decimal literals
// ("3/4", "-2.5"), or "-inf"/"+inf" where the type permits; JSON floats are
// ingested exactly as the dyadic rationals they are. Writers emit integers as
// numbers and everything else as canonical strings, points in input order, so
// parse -> serialize -> parse is the identity.

std::string file_kind(const std::string& text);

Kernel parse_kernel(const std::string& text);
TropVector parse_vector(const std::string& text);
WeakMetric parse_weak_metric(const std::string& text);

std::string serialize(const Kernel& k);
std::string serialize(const TropVector& v);
std::string serialize(const WeakMetric& m);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

Kernel load_kernel(const std::string& path);
TropVector load_vector(const std::string& path);
WeakMetric load_weak_metric(const std::string& path);

}  // namespace tropkit

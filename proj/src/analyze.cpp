#include "tropkit/analyze.hpp"

#include <set>
#include <sstream>

#include "json.hpp"

namespace tropkit {
namespace {

// Deterministic probes for closure of Rg under the conjugation pair: every
// conjugate must be fixed by the projection, and the projection itself must
// be deflationary and idempotent on elements outside the range.
bool closure_probes(const Kernel& b) {
  std::vector<TropVector> fs;  // over Y
  for (const auto& y : b.y_points()) fs.push_back(TropVector::dirac_top(b.y_points(), y));
  for (size_t i = 0; i < b.rows(); ++i) fs.push_back(b.row(i));
  fs.push_back(TropVector::constant(b.y_points(), ExtReal(0)));
  fs.push_back(TropVector::constant(b.y_points(), ExtReal::neg_inf()));
  for (const auto& f : fs) {
    TropVector bf = conjugate(b, f);
    if (!range_membership(b, bf)) return false;
    if (!in_inf_closure(b, bf)) return false;
  }

  std::vector<TropVector> hs;  // over X
  for (const auto& x : b.x_points()) hs.push_back(TropVector::dirac_top(b.x_points(), x));
  hs.push_back(TropVector::constant(b.x_points(), ExtReal(0)));
  for (size_t j = 0; j < b.cols(); ++j) hs.push_back(negate(b.column(j)));
  for (const auto& h : hs) {
    TropVector p = project(b, h);
    if (!leq(p, h)) return false;
    if (project(b, p) != p) return false;
  }
  return true;
}

// Two ground points are separated when two range elements, finite at both,
// disagree on the difference of their values there. Candidates: columns,
// pairwise sups of columns, and the e_x family.
bool separation_probes(const Kernel& b) {
  std::vector<TropVector> pool;
  for (size_t j = 0; j < b.cols(); ++j) pool.push_back(b.column(j));
  for (size_t j = 0; j < b.cols(); ++j)
    for (size_t l = j + 1; l < b.cols(); ++l)
      pool.push_back(pointwise_sup(b.column(j), b.column(l)));
  for (const auto& e : e_x_family(b)) pool.push_back(e);

  for (size_t i = 0; i < b.rows(); ++i) {
    for (size_t k = i + 1; k < b.rows(); ++k) {
      std::set<Rational> diffs;
      for (const auto& g : pool) {
        if (g.at(i).is_finite() && g.at(k).is_finite())
          diffs.insert(g.at(i).value() - g.at(k).value());
      }
      if (diffs.size() < 2) return false;
    }
  }
  return true;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",";
    out += items[i];
  }
  return out;
}

std::string values_csv(const TropVector& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v.at(i));
  }
  return out;
}

std::string redundancy_text(const ColumnRedundancy& r) {
  std::string out = r.label + " = sup(";
  for (size_t i = 0; i < r.basis.size(); ++i) {
    if (i) out += ", ";
    out += r.basis[i] + "+" + to_string(r.coefficients[i]);
  }
  return out + ")";
}

void render_reduction(std::ostringstream& os, const char* title, const ReductionReport& rep) {
  os << title << ":\n";
  os << "  essential: " << (rep.essential.empty() ? "-" : join(rep.essential)) << "\n";
  if (rep.redundant.empty()) {
    os << "  redundant: -\n";
  } else {
    for (const auto& r : rep.redundant) os << "  redundant: " << redundancy_text(r) << "\n";
  }
  if (rep.duplicate_classes.empty()) {
    os << "  duplicates: -\n";
  } else {
    for (const auto& cls : rep.duplicate_classes) os << "  duplicates: {" << join(cls) << "}\n";
  }
}

nlohmann::ordered_json reduction_json(const ReductionReport& rep) {
  nlohmann::ordered_json j;
  j["essential"] = rep.essential;
  auto red = nlohmann::ordered_json::array();
  for (const auto& r : rep.redundant) {
    nlohmann::ordered_json item;
    item["label"] = r.label;
    item["basis"] = r.basis;
    auto coeffs = nlohmann::ordered_json::array();
    for (const auto& c : r.coefficients) coeffs.push_back(to_string(c));
    item["coefficients"] = std::move(coeffs);
    red.push_back(std::move(item));
  }
  j["redundant"] = std::move(red);
  j["duplicate_classes"] = rep.duplicate_classes;
  return j;
}

}  // namespace

AnalysisReport analyze_kernel(const Kernel& b) {
  AnalysisReport r;
  r.x_points = b.x_points();
  r.y_points = b.y_points();
  r.approximate = b.approximate();
  r.has_minus_inf = b.has_minus_inf();
  r.closure_ok = closure_probes(b);
  r.separation_ok = separation_probes(b);
  r.columns = essential_columns(b);
  r.rows = essential_rows(b);
  r.fully_reduced = fully_reduced(b);
  if (b.rows() == b.cols() && b.x_points() == b.y_points())
    r.strict_monotone = strict_trop_monotone(b);
  r.e_x_table = e_x_family(b);
  r.arch_classes = archimedean_classes(b);
  return r;
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "kernel: " << r.x_points.size() << "x" << r.y_points.size() << "\n";
  os << "x_points: " << join(r.x_points) << "\n";
  os << "y_points: " << join(r.y_points) << "\n";
  os << "approximate: " << (r.approximate ? "true" : "false") << "\n";
  os << "contains_minus_inf: " << (r.has_minus_inf ? "true" : "false") << "\n";
  os << "closure_ok: " << (r.closure_ok ? "true" : "false") << "\n";
  os << "separation_ok: " << (r.separation_ok ? "true" : "false") << "\n";
  render_reduction(os, "columns", r.columns);
  render_reduction(os, "rows", r.rows);
  os << "fully_reduced: " << (r.fully_reduced ? "true" : "false") << "\n";
  if (r.strict_monotone)
    os << "strict_monotone: " << (*r.strict_monotone ? "true" : "false") << "\n";
  os << "e_x_table:\n";
  for (size_t i = 0; i < r.e_x_table.size(); ++i)
    os << "  e[" << r.x_points[i] << "]: " << values_csv(r.e_x_table[i]) << "\n";
  os << "archimedean_classes:\n";
  for (const auto& cls : r.arch_classes)
    os << "  {" << join(cls.members) << "} maximal=" << (cls.maximal ? "true" : "false") << "\n";
  return os.str();
}

std::string render_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["rows"] = r.x_points.size();
  j["cols"] = r.y_points.size();
  j["x_points"] = r.x_points;
  j["y_points"] = r.y_points;
  j["approximate"] = r.approximate;
  j["contains_minus_inf"] = r.has_minus_inf;
  j["closure_ok"] = r.closure_ok;
  j["separation_ok"] = r.separation_ok;
  j["columns"] = reduction_json(r.columns);
  j["rows_report"] = reduction_json(r.rows);
  j["fully_reduced"] = r.fully_reduced;
  if (r.strict_monotone)
    j["strict_monotone"] = *r.strict_monotone;
  else
    j["strict_monotone"] = nullptr;
  auto table = nlohmann::ordered_json::array();
  for (size_t i = 0; i < r.e_x_table.size(); ++i) {
    nlohmann::ordered_json row;
    row["x"] = r.x_points[i];
    auto vals = nlohmann::ordered_json::array();
    for (size_t k = 0; k < r.e_x_table[i].size(); ++k)
      vals.push_back(to_string(r.e_x_table[i].at(k)));
    row["e_x"] = std::move(vals);
    table.push_back(std::move(row));
  }
  j["e_x_table"] = std::move(table);
  auto classes = nlohmann::ordered_json::array();
  for (const auto& cls : r.arch_classes) {
    nlohmann::ordered_json c;
    c["members"] = cls.members;
    c["maximal"] = cls.maximal;
    classes.push_back(std::move(c));
  }
  j["archimedean_classes"] = std::move(classes);
  return j.dump(2) + "\n";
}

}  // namespace tropkit

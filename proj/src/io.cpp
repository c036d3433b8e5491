#include "tropkit/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "tropkit/errors.hpp"

namespace tropkit {
namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail_parse(const std::string& text, const nlohmann::json::parse_error& e) {
  // e.byte is a 1-based offset into the input; turn it into line:column.
  std::size_t pos = e.byte == 0 ? 0 : e.byte - 1;
  if (pos > text.size()) pos = text.size();
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < pos; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  std::ostringstream os;
  os << "malformed document at line " << line << ", column " << col << ": " << e.what();
  throw io_error(os.str());
}

ordered_json parse_document(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail_parse(text, e);
  }
}

const ordered_json& require_field(const ordered_json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw io_error(std::string("missing required field \"") + name + "\"");
  return *it;
}

std::vector<std::string> read_labels(const ordered_json& node, const char* field) {
  if (!node.is_array()) throw io_error(std::string("field \"") + field + "\" must be an array of strings");
  std::vector<std::string> out;
  out.reserve(node.size());
  for (const auto& item : node) {
    if (!item.is_string()) throw io_error(std::string("field \"") + field + "\" must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

ExtReal read_cell(const ordered_json& cell, const std::string& where) {
  try {
    if (cell.is_number_integer()) return ExtReal(cell.get<long long>());
    if (cell.is_number_float()) return ExtReal::from_double(cell.get<double>());
    if (cell.is_string()) return parse_ext_real(cell.get<std::string>());
  } catch (const error& e) {
    throw io_error("bad cell at " + where + ": " + e.what());
  }
  throw io_error("bad cell at " + where + ": expected a number or a string");
}

std::vector<std::vector<ExtReal>> read_matrix(const ordered_json& node, const char* field,
                                              std::size_t rows, std::size_t cols) {
  if (!node.is_array() || node.size() != rows)
    throw io_error(std::string("field \"") + field + "\" must be an array of " + std::to_string(rows) +
                   " rows");
  std::vector<std::vector<ExtReal>> out;
  out.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = node[i];
    if (!row.is_array() || row.size() != cols)
      throw io_error(std::string("field \"") + field + "\" row " + std::to_string(i) + " must have " +
                     std::to_string(cols) + " cells");
    std::vector<ExtReal> out_row;
    out_row.reserve(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      out_row.push_back(read_cell(row[j], std::string(field) + "[" + std::to_string(i) + "][" +
                                              std::to_string(j) + "]"));
    }
    out.push_back(std::move(out_row));
  }
  return out;
}

bool read_flag(const ordered_json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) return false;
  if (!it->is_boolean()) throw io_error(std::string("field \"") + name + "\" must be a boolean");
  return it->get<bool>();
}

// Emits an integer as a JSON number when it fits losslessly in 64 bits,
// otherwise falls back to the canonical string form.
ordered_json cell_to_json(const ExtReal& v) {
  if (v.is_finite()) {
    const Rational& q = v.value();
    if (boost::multiprecision::denominator(q) == 1) {
      const auto& num = boost::multiprecision::numerator(q);
      if (num >= std::numeric_limits<long long>::min() && num <= std::numeric_limits<long long>::max())
        return ordered_json(static_cast<long long>(num));
    }
  }
  return ordered_json(to_string(v));
}

ordered_json labels_to_json(const std::vector<std::string>& labels) {
  ordered_json arr = ordered_json::array();
  for (const auto& l : labels) arr.push_back(l);
  return arr;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string kind_of(const ordered_json& doc) {
  if (!doc.is_object()) throw io_error("document must be a JSON object");
  const ordered_json& kind = require_field(doc, "kind");
  if (!kind.is_string()) throw io_error("field \"kind\" must be a string");
  return kind.get<std::string>();
}

void require_kind(const ordered_json& doc, const std::string& expected) {
  std::string kind = kind_of(doc);
  if (kind != expected)
    throw io_error("expected a document of kind \"" + expected + "\", found \"" + kind + "\"");
}

}  // namespace

std::string file_kind(const std::string& text) {
  ordered_json doc = parse_document(text);
  std::string kind = kind_of(doc);
  if (kind != "kernel" && kind != "vector" && kind != "weak_metric")
    throw io_error("unknown document kind \"" + kind + "\"");
  return kind;
}

Kernel parse_kernel(const std::string& text) {
  ordered_json doc = parse_document(text);
  require_kind(doc, "kernel");
  std::vector<std::string> xs = read_labels(require_field(doc, "x_points"), "x_points");
  std::vector<std::string> ys = read_labels(require_field(doc, "y_points"), "y_points");
  auto entries = read_matrix(require_field(doc, "entries"), "entries", xs.size(), ys.size());
  return Kernel(xs, ys, std::move(entries), read_flag(doc, "approximate"));
}

TropVector parse_vector(const std::string& text) {
  ordered_json doc = parse_document(text);
  require_kind(doc, "vector");
  std::vector<std::string> points = read_labels(require_field(doc, "points"), "points");
  const ordered_json& values = require_field(doc, "values");
  if (!values.is_array() || values.size() != points.size())
    throw io_error("field \"values\" must be an array matching \"points\" in length");
  std::vector<ExtReal> vals;
  vals.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    vals.push_back(read_cell(values[i], "values[" + std::to_string(i) + "]"));
  return TropVector(points, vals);
}

WeakMetric parse_weak_metric(const std::string& text) {
  ordered_json doc = parse_document(text);
  require_kind(doc, "weak_metric");
  std::vector<std::string> points = read_labels(require_field(doc, "points"), "points");
  auto cells = read_matrix(require_field(doc, "delta"), "delta", points.size(), points.size());
  std::vector<std::vector<Rational>> delta(points.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    delta[i].reserve(points.size());
    for (std::size_t j = 0; j < cells[i].size(); ++j) {
      if (!cells[i][j].is_finite())
        throw io_error("bad cell at delta[" + std::to_string(i) + "][" + std::to_string(j) +
                       "]: weak metric values must be finite");
      delta[i].push_back(cells[i][j].value());
    }
  }
  return WeakMetric(points, std::move(delta), read_flag(doc, "approximate"));
}

std::string serialize(const Kernel& k) {
  ordered_json doc;
  doc["kind"] = "kernel";
  doc["x_points"] = labels_to_json(k.x_points());
  doc["y_points"] = labels_to_json(k.y_points());
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < k.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < k.cols(); ++j) row.push_back(cell_to_json(k.at(i, j)));
    rows.push_back(std::move(row));
  }
  doc["entries"] = std::move(rows);
  doc["approximate"] = k.approximate();
  return dump(doc);
}

std::string serialize(const TropVector& v) {
  ordered_json doc;
  doc["kind"] = "vector";
  doc["points"] = labels_to_json(v.points());
  ordered_json vals = ordered_json::array();
  for (std::size_t i = 0; i < v.size(); ++i) vals.push_back(cell_to_json(v.at(i)));
  doc["values"] = std::move(vals);
  return dump(doc);
}

std::string serialize(const WeakMetric& m) {
  ordered_json doc;
  doc["kind"] = "weak_metric";
  doc["points"] = labels_to_json(m.points());
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(cell_to_json(ExtReal(m.at(i, j))));
    rows.push_back(std::move(row));
  }
  doc["delta"] = std::move(rows);
  doc["approximate"] = m.approximate();
  return dump(doc);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open \"" + path + "\" for reading");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw io_error("failed while reading \"" + path + "\"");
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io_error("cannot open \"" + path + "\" for writing");
  out << content;
  out.flush();
  if (!out) throw io_error("failed while writing \"" + path + "\"");
}

Kernel load_kernel(const std::string& path) { return parse_kernel(read_file(path)); }

TropVector load_vector(const std::string& path) { return parse_vector(read_file(path)); }

WeakMetric load_weak_metric(const std::string& path) { return parse_weak_metric(read_file(path)); }

}  // namespace tropkit

#include "tropkit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "tropkit/analyze.hpp"
#include "tropkit/errors.hpp"
#include "tropkit/factories.hpp"
#include "tropkit/io.hpp"
#include "tropkit/isophi.hpp"
#include "tropkit/reference_examples.hpp"

namespace tropkit {
namespace {

bool approx_mode() {
  const char* v = std::getenv("TROPKIT_APPROX");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string csv(const std::vector<Rational>& vals) {
  std::string out;
  for (size_t i = 0; i < vals.size(); ++i) {
    if (i) out += ",";
    out += to_string(vals[i]);
  }
  return out;
}

std::string csv(const TropVector& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v.at(i));
  }
  return out;
}

std::string mapping(const std::vector<std::string>& from, const std::vector<std::string>& to) {
  std::string out;
  for (size_t i = 0; i < from.size(); ++i) {
    if (i) out += ",";
    out += from[i] + "->" + to[i];
  }
  return out;
}

// "label:v1,v2" or "v1,v2" (label defaults to p1, p2, ...).
void parse_point(const std::string& text, size_t ordinal, std::vector<std::string>& labels,
                 std::vector<std::vector<Rational>>& coords) {
  std::string label = "p" + std::to_string(ordinal + 1);
  std::string body = text;
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    label = text.substr(0, colon);
    body = text.substr(colon + 1);
    if (label.empty()) throw validation_error("empty label in point \"" + text + "\"");
  }
  std::vector<Rational> cs;
  for (const std::string& piece : split(body, ',')) {
    if (piece.empty()) throw validation_error("empty coordinate in point \"" + text + "\"");
    cs.push_back(parse_rational(piece));
  }
  labels.push_back(label);
  coords.push_back(std::move(cs));
}

Edge parse_edge(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 3)
    throw validation_error("edge \"" + text + "\" must have the form a,b,weight");
  return Edge{parts[0], parts[1], parse_rational(parts[2])};
}

// Forced floating-point mode: every entry is rounded through a double and the
// kernel is flagged approximate.
Kernel to_float_mode(const Kernel& k) {
  std::vector<std::vector<ExtReal>> rows(k.rows());
  for (size_t i = 0; i < k.rows(); ++i) {
    rows[i].reserve(k.cols());
    for (size_t j = 0; j < k.cols(); ++j) {
      const ExtReal& e = k.at(i, j);
      rows[i].push_back(e.is_finite() ? ExtReal::from_double(e.value().convert_to<double>())
                                      : e);
    }
  }
  return Kernel(k.x_points(), k.y_points(), std::move(rows), true);
}

int cmd_analyze(const std::string& path, bool as_json, std::ostream& out) {
  Kernel k = load_kernel(path);
  AnalysisReport rep = analyze_kernel(k);
  out << (as_json ? render_json(rep) : render_text(rep));
  return 0;
}

int cmd_isophi(const std::string& path_f, const std::string& path_g, bool allow_large,
               std::ostream& out, std::ostream& err) {
  Kernel f = load_kernel(path_f);
  Kernel g = load_kernel(path_g);
  if (f.has_minus_inf() || g.has_minus_inf()) {
    err << "error: isophi requires real-valued kernels (no -inf entries)\n";
    return 2;
  }
  std::vector<Rational> prof_f = hilbert_profile(f, ProfileColumns::all);
  std::vector<Rational> prof_g = hilbert_profile(g, ProfileColumns::all);
  out << "column_profile_f: " << csv(prof_f) << "\n";
  out << "column_profile_g: " << csv(prof_g) << "\n";
  const bool obstructed = prof_f != prof_g;
  out << "profile_obstruction: " << (obstructed ? "true" : "false") << "\n";
  if (obstructed) {
    out << "verdict: refuted\n";
    return 1;
  }
  if (!fully_reduced(f) || !fully_reduced(g)) {
    out << "verdict: inconclusive (kernel not fully reduced)\n";
    return 3;
  }
  std::optional<KernelConjugacy> cert = find_kernel_conjugacy(f, g, allow_large);
  if (!cert) {
    out << "verdict: refuted\n";
    return 1;
  }
  if (!verify_conjugacy(f, g, *cert)) {
    err << "error: internal certificate failed verification\n";
    return 2;
  }
  out << "tau: " << mapping(g.x_points(), cert->tau) << "\n";
  out << "sigma: " << mapping(g.y_points(), cert->sigma) << "\n";
  out << "psi: " << csv(cert->psi) << "\n";
  out << "varphi: " << csv(cert->varphi) << "\n";
  AffineReparam j = reparam_from_conjugacy(*cert);
  out << "induced_g: " << csv(j.g) << "\n";
  out << "induced_phi: " << mapping(g.x_points(), j.phi) << "\n";
  out << "verdict: certified\n";
  return 0;
}

int cmd_dual(const std::string& kernel_path, const std::string& f_path,
             const std::string& g_path, std::ostream& out) {
  Kernel b = load_kernel(kernel_path);
  TropVector f = load_vector(f_path);
  TropVector g = load_vector(g_path);
  if (f.points() != b.x_points() || g.points() != b.x_points())
    throw validation_error("f and g must be defined on the kernel's x points");
  if (!range_membership(b, g))
    out << "warning: g is not in the range of the kernel; the dual value may be loose\n";
  ExtReal primal = primal_value(f, g);
  ExtReal dual = dual_value(b, f, g);
  out << "primal: " << to_string(primal) << "\n";
  out << "dual: " << to_string(dual) << "\n";
  out << "weak_duality: " << (dual <= primal ? "true" : "false") << "\n";
  return 0;
}

int write_kernel_file(const Kernel& k, const std::string& path, std::ostream& out) {
  Kernel final_k = approx_mode() ? to_float_mode(k) : k;
  write_file(path, serialize(final_k));
  out << "wrote kernel " << final_k.rows() << "x" << final_k.cols() << " to " << path << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tropical kernel toolkit"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "structural report for a kernel file");
  std::string analyze_path;
  bool analyze_json = false;
  analyze->add_option("file", analyze_path, "kernel file")->required();
  analyze->add_flag("--json", analyze_json, "emit the report as JSON");

  auto* isophi = app.add_subcommand(
      "isophi", "decide whether two kernel ranges are related by an affine isomorphism");
  std::string iso_f, iso_g;
  bool allow_large = false;
  isophi->add_option("file_f", iso_f, "first kernel file")->required();
  isophi->add_option("file_g", iso_g, "second kernel file")->required();
  isophi->add_flag("--allow-large", allow_large, "search axes larger than 9 points");

  auto* dual = app.add_subcommand("dual", "primal and dual values of a pair of functions");
  std::string dual_kernel, dual_f, dual_g;
  dual->add_option("kernel", dual_kernel, "kernel file")->required();
  dual->add_option("f", dual_f, "vector file over the kernel's x points")->required();
  dual->add_option("g", dual_g, "vector file over the kernel's x points")->required();

  auto* mk = app.add_subcommand("make-kernel", "build and save a kernel");
  mk->require_subcommand(1);

  auto* mk_metric = mk->add_subcommand("metric", "-d(x,y)^p from a weighted graph metric");
  std::vector<std::string> metric_points, metric_edges;
  std::string metric_power = "1", metric_out;
  mk_metric->add_option("--point", metric_points, "point label (repeatable)")->required();
  mk_metric->add_option("--edge", metric_edges, "edge a,b,weight (repeatable)")->required();
  mk_metric->add_option("--power", metric_power, "exponent p in (0,1]");
  mk_metric->add_option("-o,--output", metric_out, "output file")->required();

  auto* mk_funk = mk->add_subcommand(
      "funk", "-delta(x,y) for the reverse Funk weak metric on unit-sum points");
  std::vector<std::string> funk_points;
  std::string funk_base, funk_out;
  mk_funk->add_option("--point", funk_points, "point label:v1,v2,... (repeatable)")->required();
  mk_funk->add_option("--base", funk_base, "exact logarithm base (> 1)");
  mk_funk->add_option("-o,--output", funk_out, "output file")->required();

  auto* mk_inner = mk->add_subcommand("inner", "<x,y> on a rational point list");
  std::vector<std::string> inner_points;
  std::string inner_out;
  mk_inner->add_option("--point", inner_points, "point label:v1,v2,... (repeatable)")->required();
  mk_inner->add_option("-o,--output", inner_out, "output file")->required();

  auto* mk_semi = mk->add_subcommand("semiconvex", "-(c/2)|x-y|^2 on a rational point list");
  std::vector<std::string> semi_points;
  std::string semi_c = "1", semi_out;
  mk_semi->add_option("--point", semi_points, "point label:v1,v2,... (repeatable)")->required();
  mk_semi->add_option("--constant", semi_c, "the constant c (> 0)");
  mk_semi->add_option("-o,--output", semi_out, "output file")->required();

  auto* examples = app.add_subcommand("paper-examples", "run the bundled reference examples");
  bool inject_fault = false;
  examples->add_flag("--inject-fault", inject_fault,
                     "corrupt one built-in matrix to show failures are caught");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? 0 : 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_path, analyze_json, out);
    if (*isophi) return cmd_isophi(iso_f, iso_g, allow_large, out, err);
    if (*dual) return cmd_dual(dual_kernel, dual_f, dual_g, out);
    if (*mk_metric) {
      std::vector<Edge> edges;
      for (const auto& e : metric_edges) edges.push_back(parse_edge(e));
      WeakMetric d = shortest_path_metric(metric_points, edges);
      return write_kernel_file(from_metric(d, parse_rational(metric_power)), metric_out, out);
    }
    if (*mk_funk) {
      std::vector<std::string> labels;
      std::vector<std::vector<Rational>> coords;
      for (size_t i = 0; i < funk_points.size(); ++i)
        parse_point(funk_points[i], i, labels, coords);
      std::optional<Rational> base;
      if (!funk_base.empty() && !approx_mode()) base = parse_rational(funk_base);
      if (!funk_base.empty() && approx_mode())
        err << "note: TROPKIT_APPROX is set; ignoring --base and using floating point\n";
      WeakMetric delta = funk_weak_metric(labels, coords, base);
      return write_kernel_file(from_weak_metric(delta), funk_out, out);
    }
    if (*mk_inner) {
      std::vector<std::string> labels;
      std::vector<std::vector<Rational>> coords;
      for (size_t i = 0; i < inner_points.size(); ++i)
        parse_point(inner_points[i], i, labels, coords);
      return write_kernel_file(inner_product_kernel(labels, coords, labels, coords), inner_out,
                               out);
    }
    if (*mk_semi) {
      std::vector<std::string> labels;
      std::vector<std::vector<Rational>> coords;
      for (size_t i = 0; i < semi_points.size(); ++i) parse_point(semi_points[i], i, labels, coords);
      return write_kernel_file(semiconvex_kernel(labels, coords, parse_rational(semi_c)),
                               semi_out, out);
    }
    if (*examples) return run_reference_examples(out, inject_fault) == 0 ? 0 : 1;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command selected\n";
  return 2;
}

}  // namespace tropkit

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "tropkit/analyze.hpp"
#include "tropkit/cli.hpp"
#include "tropkit/io.hpp"
#include "tropkit/reference_examples.hpp"

using namespace tropkit;

namespace {

// Temporary files for CLI round trips, removed on destruction.
struct TempDir {
  std::filesystem::path dir;
  TempDir() {
    dir = std::filesystem::temp_directory_path() /
          ("tropkit_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
  }
  ~TempDir() { std::filesystem::remove_all(dir); }
  std::string put(const std::string& name, const std::string& content) const {
    std::string path = (dir / name).string();
    write_file(path, content);
    return path;
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

int cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

}  // namespace

TEST_CASE("kernel files round trip") {
  Kernel a = demo_kernel_a();
  std::string text = serialize(a);
  CHECK(file_kind(text) == "kernel");
  Kernel back = parse_kernel(text);
  CHECK(back == a);
  CHECK(serialize(back) == text);  // parse -> serialize -> parse is the identity

  // Cells may be integers, rationals, decimals or -inf.
  Kernel mixed = parse_kernel(R"({
    "kind": "kernel",
    "x_points": ["p", "q"],
    "y_points": ["u", "v"],
    "entries": [[0, "-3/2"], ["-inf", "2.5"]],
    "approximate": false
  })");
  CHECK(mixed.at(0, 1) == ExtReal(Rational(-3, 2)));
  CHECK(mixed.at(1, 0).is_neg_inf());
  CHECK(mixed.at(1, 1) == ExtReal(Rational(5, 2)));
  Kernel mixed_back = parse_kernel(serialize(mixed));
  CHECK(mixed_back == mixed);
}

TEST_CASE("vector and weak metric files round trip") {
  TropVector v({"a", "b", "c"}, {ExtReal(Rational(1, 3)), ExtReal::pos_inf(), ExtReal::neg_inf()});
  TropVector vback = parse_vector(serialize(v));
  CHECK(vback == v);
  CHECK(file_kind(serialize(v)) == "vector");

  WeakMetric w({"a", "b"}, {{Rational(0), Rational(2)}, {Rational(1), Rational(0)}});
  WeakMetric wback = parse_weak_metric(serialize(w));
  CHECK(wback.at(0, 1) == Rational(2));
  CHECK(wback.at(1, 0) == Rational(1));
  CHECK(!wback.approximate());
  CHECK(file_kind(serialize(w)) == "weak_metric");
}

TEST_CASE("io errors carry positions and reasons") {
  CHECK_THROWS_WITH_AS(parse_kernel("{ nope"), doctest::Contains("line 1"), io_error);
  CHECK_THROWS_WITH_AS(file_kind(R"({"kind": "surprise"})"), doctest::Contains("surprise"),
                       io_error);
  CHECK_THROWS_AS(parse_kernel(R"({"kind": "vector", "points": [], "values": []})"), io_error);
  CHECK_THROWS_AS(parse_kernel(R"({"x_points": ["a"], "y_points": ["a"], "entries": [[0]]})"),
                  io_error);
  // Malformed cells name their position.
  CHECK_THROWS_WITH_AS(parse_kernel(R"({
    "kind": "kernel", "x_points": ["p"], "y_points": ["u", "v"],
    "entries": [[0, true]]
  })"),
                       doctest::Contains("entries[0][1]"), io_error);
  // Ragged rows are rejected.
  CHECK_THROWS_AS(parse_kernel(R"({
    "kind": "kernel", "x_points": ["p", "q"], "y_points": ["u", "v"],
    "entries": [[0, 0], [0]]
  })"),
                  io_error);
  // A +inf kernel cell violates the kernel contract.
  CHECK_THROWS_WITH_AS(parse_kernel(R"({
    "kind": "kernel", "x_points": ["p"], "y_points": ["u", "v"],
    "entries": [[0, "+inf"]]
  })"),
                       doctest::Contains("+inf"), validation_error);
  // Weak metric cells must be finite.
  CHECK_THROWS_AS(parse_weak_metric(R"({
    "kind": "weak_metric", "points": ["a"], "delta": [["-inf"]]
  })"),
                  io_error);
  CHECK_THROWS_AS(load_kernel("/nonexistent/path/kernel.json"), io_error);
}

TEST_CASE("cli analyze") {
  TempDir tmp;
  std::string path = tmp.put("a.json", serialize(demo_kernel_a()));
  std::string out;
  CHECK(cli({"analyze", path}, &out) == 0);
  CHECK(out.find("kernel: 3x3") != std::string::npos);
  CHECK(out.find("closure_ok: true") != std::string::npos);
  CHECK(out.find("separation_ok: true") != std::string::npos);
  CHECK(out.find("redundant: 3 = sup(1+0, 2+0)") != std::string::npos);
  CHECK(out.find("fully_reduced: false") != std::string::npos);
  CHECK(out.find("e[2]: 2,0,2") != std::string::npos);

  std::string json_out;
  CHECK(cli({"analyze", path, "--json"}, &json_out) == 0);
  CHECK(json_out.find("\"closure_ok\": true") != std::string::npos);
  CHECK(json_out.find("\"fully_reduced\": false") != std::string::npos);

  // The analyze text matches the library's own rendering.
  CHECK(out == render_text(analyze_kernel(demo_kernel_a())));

  std::string err;
  CHECK(cli({"analyze", tmp.path("missing.json")}, nullptr, &err) == 2);
  CHECK(err.find("error:") != std::string::npos);
  std::string bad = tmp.put("bad.json", "not json at all");
  CHECK(cli({"analyze", bad}, nullptr, &err) == 2);
}

TEST_CASE("cli isophi verdicts and exit codes") {
  TempDir tmp;
  std::string a = tmp.put("a.json", serialize(demo_kernel_a()));
  std::string b = tmp.put("b.json", serialize(demo_kernel_b()));
  std::string c = tmp.put("c.json", serialize(demo_kernel_c()));
  std::string d = tmp.put("d.json", serialize(demo_kernel_d()));

  std::string out;
  CHECK(cli({"isophi", a, b}, &out) == 1);
  CHECK(out.find("column_profile_f: 4,2,2") != std::string::npos);
  CHECK(out.find("column_profile_g: 4,3,1") != std::string::npos);
  CHECK(out.find("profile_obstruction: true") != std::string::npos);
  CHECK(out.find("verdict: refuted") != std::string::npos);

  CHECK(cli({"isophi", c, d}, &out) == 0);
  CHECK(out.find("profile_obstruction: false") != std::string::npos);
  CHECK(out.find("tau: 1->1,2->2") != std::string::npos);
  CHECK(out.find("psi: 0,-1") != std::string::npos);
  CHECK(out.find("varphi: 0,1") != std::string::npos);
  CHECK(out.find("induced_g: 0,-1") != std::string::npos);
  CHECK(out.find("verdict: certified") != std::string::npos);

  // Same profiles but not fully reduced: inconclusive.
  CHECK(cli({"isophi", a, a}, &out) == 3);
  CHECK(out.find("verdict: inconclusive") != std::string::npos);

  // Kernels with -inf entries are invalid input for this command.
  std::string withinf = tmp.put("dirac.json", R"({
    "kind": "kernel", "x_points": ["p", "q"], "y_points": ["p", "q"],
    "entries": [[0, "-inf"], ["-inf", 0]]
  })");
  std::string err;
  CHECK(cli({"isophi", withinf, withinf}, &out, &err) == 2);
  CHECK(err.find("-inf") != std::string::npos);

  // Genuinely non-conjugate fully reduced kernels with equal column profiles:
  // -d against +d for a strict triangle (for a path metric +d would have a
  // redundant middle column). Negation preserves pairwise Hilbert distances
  // but flips the sign of every cross difference, so no pairing of rows and
  // columns can reconcile them.
  std::string e = tmp.put("e.json", R"({
    "kind": "kernel", "x_points": ["1", "2", "3"], "y_points": ["1", "2", "3"],
    "entries": [[0, -2, -3], [-2, 0, -2], [-3, -2, 0]]
  })");
  std::string f = tmp.put("f.json", R"({
    "kind": "kernel", "x_points": ["1", "2", "3"], "y_points": ["1", "2", "3"],
    "entries": [[0, 2, 3], [2, 0, 2], [3, 2, 0]]
  })");
  CHECK(cli({"isophi", e, f}, &out) == 1);
  CHECK(out.find("profile_obstruction: false") != std::string::npos);
  CHECK(out.find("verdict: refuted") != std::string::npos);
}

TEST_CASE("cli dual") {
  TempDir tmp;
  std::string wide = tmp.put("wide.json", serialize(demo_dual_wide()));
  std::string narrow = tmp.put("narrow.json", serialize(demo_dual_narrow()));
  std::string zero = tmp.put("zero.json", serialize(TropVector(
                                              demo_dual_wide().x_points(),
                                              {ExtReal(0), ExtReal(0), ExtReal(0)})));
  std::string out;
  CHECK(cli({"dual", wide, zero, zero}, &out) == 0);
  CHECK(out.find("primal: 0") != std::string::npos);
  CHECK(out.find("dual: 0") != std::string::npos);
  CHECK(out.find("weak_duality: true") != std::string::npos);

  CHECK(cli({"dual", narrow, zero, zero}, &out) == 0);
  CHECK(out.find("dual: -1") != std::string::npos);

  // g outside the range draws a warning.
  std::string loose = tmp.put("loose.json", serialize(TropVector(
                                                demo_dual_wide().x_points(),
                                                {ExtReal(0), ExtReal(0), ExtReal(-5)})));
  CHECK(cli({"dual", wide, zero, loose}, &out) == 0);
  CHECK(out.find("warning: g is not in the range") != std::string::npos);

  // Mismatched points are invalid input.
  std::string off = tmp.put("off.json", serialize(TropVector({"x", "y", "z"},
                                                             {ExtReal(0), ExtReal(0), ExtReal(0)})));
  CHECK(cli({"dual", wide, zero, off}) == 2);
}

TEST_CASE("cli make-kernel") {
  TempDir tmp;
  std::string out;

  std::string mpath = tmp.path("metric.json");
  CHECK(cli({"make-kernel", "metric", "--point", "a", "--point", "b", "--point", "c",
             "--edge", "a,b,1", "--edge", "b,c,1", "-o", mpath},
            &out) == 0);
  Kernel mk = load_kernel(mpath);
  CHECK(mk.at(0, 2) == ExtReal(-2));
  CHECK(!mk.approximate());

  std::string fpath = tmp.path("funk.json");
  CHECK(cli({"make-kernel", "funk", "--point", "p:1/3,2/3", "--point", "q:2/3,1/3",
             "--base", "2", "-o", fpath},
            &out) == 0);
  Kernel fk = load_kernel(fpath);
  CHECK(fk.at(0, 1) == ExtReal(-1));
  CHECK(!fk.approximate());

  std::string ipath = tmp.path("inner.json");
  CHECK(cli({"make-kernel", "inner", "--point", "1,0", "--point", "0,1", "-o", ipath},
            &out) == 0);
  Kernel ik = load_kernel(ipath);
  CHECK(ik.x_points() == std::vector<std::string>{"p1", "p2"});
  CHECK(ik.at(0, 0) == ExtReal(1));

  std::string spath = tmp.path("semi.json");
  CHECK(cli({"make-kernel", "semiconvex", "--point", "u:0", "--point", "v:2",
             "--constant", "1", "-o", spath},
            &out) == 0);
  CHECK(load_kernel(spath).at(0, 1) == ExtReal(-2));

  // Invalid constructions exit 2.
  CHECK(cli({"make-kernel", "metric", "--point", "a", "--point", "b", "--edge", "a,b,0",
             "-o", tmp.path("x.json")}) == 2);
  CHECK(cli({"make-kernel", "funk", "--point", "p:1/2,1/3", "-o", tmp.path("y.json")}) == 2);
}

TEST_CASE("cli reference examples and usage errors") {
  std::string out;
  CHECK(cli({"paper-examples"}, &out) == 0);
  CHECK(out.find("FAIL") == std::string::npos);
  CHECK(out.find("ok third_column_is_sup_of_first_two") != std::string::npos);

  // Deterministic output: two runs agree byte for byte.
  std::string again;
  cli({"paper-examples"}, &again);
  CHECK(out == again);

  CHECK(cli({"paper-examples", "--inject-fault"}, &out) == 1);
  CHECK(out.find("FAIL") != std::string::npos);

  CHECK(cli({}) == 2);
  CHECK(cli({"no-such-command"}) == 2);
  CHECK(cli({"analyze"}) == 2);  // missing argument
  std::string help;
  CHECK(cli({"--help"}, &help) == 0);
  CHECK(help.find("analyze") != std::string::npos);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "hilbertlab/cli/cli.hpp"
#include "hilbertlab/cli/csv.hpp"
#include "hilbertlab/cli/manifest.hpp"

namespace fs = std::filesystem;
using namespace hilbertlab::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("hilbertlab-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return file(name);
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("constants prints the reference values") {
  const Run r = call({"constants", "--p", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("p*=4") != std::string::npos);
  CHECK(r.out.find("pichorides=2.414214") != std::string::npos);
  CHECK(r.out.find("beta_hilbert=3") != std::string::npos);
  CHECK(r.out.find("wds_bound=5.414214") != std::string::npos);
}

TEST_CASE("transform hr of the unit step") {
  TempDir d;
  const std::string in = d.write("step.txt", "RealLine; 2; 1;\n0 1 1\n");
  const std::string out = d.file("hr.csv");
  const Run r = call({"transform", "--op", "hr", "--input", in, "--points", "2", "--out", out});
  REQUIRE(r.code == 0);
  const CsvTable t = read_csv_file(out);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.number(0, "t") == doctest::Approx(2.0));
  CHECK(t.number(0, "value") == doctest::Approx(std::log(2.0) / M_PI).epsilon(1e-12));
  CHECK(fs::exists(manifest_path_for(out)));
}

TEST_CASE("usage errors exit 1") {
  CHECK(call({}).code == kInputError);
  CHECK(call({"transform", "--no-such-flag"}).code == kInputError);
  CHECK(call({"constants"}).code == kInputError);
  CHECK(call({"constants", "--p", "0.5"}).code == kInputError);
  TempDir d;
  const std::string in = d.write("bad.txt", "Torus; 2; 1;\n0 1\n");
  const Run r = call({"transform", "--op", "ht", "--input", in, "--points", "0"});
  CHECK(r.code == kInputError);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("failed gate exits 2") {
  const Run r = call({"simulate", "--experiment", "harmonic", "--bound", "0.01", "--paths", "200", "--dt", "1e-3",
                      "--boundary-tol", "0.13"});
  CHECK(r.code == kGateFailed);
  const Run ok = call({"simulate", "--experiment", "harmonic", "--paths", "200", "--dt", "1e-3",
                       "--boundary-tol", "0.13"});
  CHECK(ok.code == kOk);
}

TEST_CASE("reruns produce byte-identical CSV") {
  TempDir d;
  const std::vector<std::string> base{"simulate", "--experiment", "tau", "--paths", "500", "--dt", "1e-3",
                                      "--boundary-tol", "0.13", "--seed", "7", "--out"};
  auto a = base, b = base;
  a.push_back(d.file("a.csv"));
  b.push_back(d.file("b.csv"));
  call(a);
  call(b);
  CHECK(slurp(d.file("a.csv")) == slurp(d.file("b.csv")));
  CHECK(!slurp(d.file("a.csv")).empty());
}

TEST_CASE("HILBERTLAB_SEED sets the default seed") {
  TempDir d;
  const std::vector<std::string> base{"simulate", "--experiment", "tau", "--paths", "300", "--dt", "1e-3",
                                      "--boundary-tol", "0.13", "--out"};
  auto env = base, flag = base, other = base;
  env.push_back(d.file("env.csv"));
  flag.push_back(d.file("flag.csv"));
  flag.insert(flag.begin() + 1, {"--seed", "99"});
  other.push_back(d.file("other.csv"));
  setenv("HILBERTLAB_SEED", "99", 1);
  call(env);
  unsetenv("HILBERTLAB_SEED");
  call(flag);
  call(other);
  CHECK(slurp(d.file("env.csv")) == slurp(d.file("flag.csv")));
  CHECK(slurp(d.file("env.csv")) != slurp(d.file("other.csv")));
}

TEST_CASE("config file supplies options; the command line wins") {
  TempDir d;
  const std::string cfg = d.write("run.cfg", "# constants\np = 3\n");
  Run r = call({"constants", "--config", cfg});
  CHECK(r.code == 0);
  CHECK(r.out.find("p*=3") != std::string::npos);
  r = call({"constants", "--config", cfg, "--p", "4"});
  CHECK(r.out.find("p*=4") != std::string::npos);
  const std::string bad = d.write("bad.cfg", "nonsense = 1\n");
  CHECK(call({"constants", "--config", bad}).code == kInputError);
}

TEST_CASE("help documents every CSV column") {
  const std::map<std::string, std::vector<std::string>> columns{
      {"transform", {"t", "k", "x1..xd", "value", "error_estimate"}},
      {"norm-estimate",
       {"operator", "p", "size", "estimate", "pichorides_bound", "iterations", "residual", "converged"}},
      {"simulate", {"experiment", "quantity", "estimate", "sigma", "ci_lo", "ci_hi", "target", "relation", "pass"}},
      {"constants", {"p_star", "pichorides", "beta_hilbert", "wds_bound", "extrapolation"}},
      {"report", {"id", "subcommand", "experiment", "target", "estimate", "gap", "pass"}}};
  for (const auto& [sub, cols] : columns) {
    const Run r = call({sub, "--help"});
    CHECK(r.code == 0);
    for (const auto& c : cols) CHECK_MESSAGE(r.out.find(c) != std::string::npos, sub << " lacks " << c);
  }
}

TEST_CASE("csv round trip") {
  CsvTable t;
  t.header = {"a", "b"};
  t.rows = {{format_number(0.1), format_number(-1e-300)}, {"inf", "nan"}};
  std::stringstream s;
  write_csv(s, t);
  const CsvTable u = read_csv(s);
  CHECK(u.header == t.header);
  CHECK(u.rows == t.rows);
  CHECK(u.number(0, "a") == 0.1);
  CHECK(std::isinf(u.number(1, "a")));
  CHECK(std::isnan(u.number(1, "b")));
}

TEST_CASE("report from a single run") {
  TempDir d;
  const std::string out = d.file("tau.csv");
  REQUIRE(call({"simulate", "--experiment", "tau", "--paths", "500", "--dt", "1e-3", "--boundary-tol", "0.13", "--out",
                out})
              .code == 0);
  const std::string summary = d.file("summary.csv");
  const Run r = call({"report", manifest_path_for(out), "--out", summary});
  CHECK(r.code == 0);
  const CsvTable t = read_csv_file(summary);
  CHECK(t.rows.size() == 1);
  CHECK(t.at(0, "subcommand") == "simulate");
}

TEST_CASE("report merges norm runs into a convergence plot") {
  TempDir d;
  const std::string a = d.file("n512.csv"), b = d.file("n1024.csv");
  REQUIRE(call({"norm-estimate", "--op", "hdis", "--p", "3", "--size", "512", "--out", a}).code == 0);
  REQUIRE(call({"norm-estimate", "--op", "hdis", "--p", "3", "--size", "1024", "--out", b}).code == 0);
  const std::string svg = d.file("plot.svg"), summary = d.file("summary.csv");
  const Run r = call({"report", "--manifests", manifest_path_for(a), manifest_path_for(b), "--out", summary,
                      "--svg", svg});
  CHECK(r.code == 0);
  const CsvTable t = read_csv_file(summary);
  REQUIRE(t.rows.size() == 2);
  const double e0 = t.number(0, "estimate"), e1 = t.number(1, "estimate");
  const double ceiling = t.number(0, "target");
  CHECK(std::min(e0, e1) > 1.0);
  CHECK(std::max(e0, e1) <= ceiling + 1e-6);
  // Rows follow manifest order: 512 then 1024.
  CHECK(e1 >= e0);
  const std::string plot = slurp(svg);
  CHECK(plot.find("<svg") != std::string::npos);
  CHECK(plot.find("polyline") != std::string::npos);
  CHECK(plot.find("cot(pi/2p*)") != std::string::npos);
}

TEST_CASE("report rejects conflicting and incomplete manifests") {
  TempDir d;
  const std::string in = d.write("f.txt", "Torus; 2; 1;\n0 pi 1\n");
  const std::string out = d.file("ht.csv");
  REQUIRE(call({"transform", "--op", "ht", "--input", in, "--points", "1", "--out", out}).code == 0);
  const std::string m1 = manifest_path_for(out);
  const std::string copy = d.file("copy.manifest.json");
  fs::copy_file(m1, copy);

  // Same configuration, edited input: same id, different hash.
  d.write("f.txt", "Torus; 2; 1;\n0 pi 2\n");
  REQUIRE(call({"transform", "--op", "ht", "--input", in, "--points", "1", "--out", out}).code == 0);
  const Manifest a = read_manifest(copy), b = read_manifest(m1);
  CHECK(a.id == b.id);
  CHECK(a.hash != b.hash);
  Run r = call({"report", copy, m1});
  CHECK(r.code == kInputError);
  CHECK(r.err.find("conflicting manifests") != std::string::npos);
  CHECK(call({"report", m1, m1}).code == kOk);

  fs::remove(out);
  r = call({"report", m1});
  CHECK(r.code == kInputError);
  CHECK(r.err.find(read_manifest(m1).id) != std::string::npos);
}

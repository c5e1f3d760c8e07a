#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "rdsys/serialize.hpp"

using namespace rdsys;
namespace fs = std::filesystem;

namespace {

fs::path tmp_dir() {
  const char* env = std::getenv("RDSYS_TEST_TMP");
  fs::path dir = env ? fs::path(env) : fs::temp_directory_path() / "rdsys_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string tmp(const std::string& name) { return (tmp_dir() / name).string(); }

struct Run {
  int code;
  std::string out, err;
  Json report() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "rdsys");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("construct writes a verified bundle, byte for byte the same each time") {
  const auto a = tmp("h3_a.json"), b = tmp("h3_b.json");
  const auto r1 = run({"construct", "heisenberg", "--q", "3", "--out", a});
  REQUIRE(r1.code == 0);
  const auto rep = r1.report();
  CHECK(rep["verified"] == true);
  CHECK(rep["bundle"] == a);
  CHECK(rep["discrepancies"].empty());
  CHECK(rep["certificates"][0]["parameters"] == "(9,3,9,3,3,1,4)");
  REQUIRE(run({"construct", "heisenberg", "--q", "3", "--out", b}).code == 0);
  CHECK(slurp(a) == slurp(b));

  const auto bundle = Json::parse(slurp(a));
  CHECK(bundle["provenance"]["delta"] == 2);
  CHECK(bundle["sets"].size() == 3);
}

TEST_CASE("q = 5 reports the eps/16 discrepancy but still verifies") {
  const auto r = run({"construct", "heisenberg", "--q", "5"});
  REQUIRE(r.code == 0);
  const auto rep = r.report();
  REQUIRE(rep["discrepancies"].size() == 1);
  CHECK(rep["discrepancies"][0]["flag"] == "psi_delta_literal");
}

TEST_CASE("verify accepts bundles and rejects a perturbed set with a witness") {
  const auto bundle = tmp("q8.json");
  REQUIRE(run({"construct", "q8", "--out", bundle}).code == 0);
  CHECK(run({"verify", "rds", "--group", bundle, "--sets", bundle}).code == 0);
  CHECK(run({"verify", "linked", "--group", bundle, "--sets", bundle}).code == 0);

  auto j = Json::parse(slurp(bundle));
  auto idx = j["sets"][0]["indices"].get<std::vector<Elem>>();
  // Replace a by a^2, which lies in the forbidden subgroup.
  idx[1] = 2;
  j["sets"] = Json::array({Json{{"indices", idx}}});
  const auto bad = tmp("q8_bad.json");
  std::ofstream(bad) << j.dump();
  const auto r = run({"verify", "rds", "--group", bundle, "--sets", bad});
  CHECK(r.code == 1);
  const auto rep = r.report();
  CHECK(rep["verified"] == false);
  CHECK(rep["certificates"][0]["error"] == "EquationFails");
  CHECK(rep["certificates"][0].contains("witness"));
}

TEST_CASE("verify handles the nonnormal forbidden subgroup and S-rings") {
  const auto bundle = tmp("m27.json");
  REQUIRE(run({"construct", "extraspecial", "--p", "3", "--out", bundle}).code == 0);
  CHECK(run({"verify", "rds", "--group", bundle, "--sets", bundle, "--key", "alt_sets"}).code == 0);
  CHECK(run({"verify", "pds", "--group", bundle, "--sets", bundle, "--key", "pds_sets"}).code == 0);
  const auto linked = run({"verify", "linked", "--group", bundle, "--sets", bundle});
  CHECK(linked.code == 1);
  CHECK(linked.report()["certificates"][0]["error"] == "ProductNotTwoValued");
  const auto sr = run({"verify", "sring", "--group", bundle, "--sets", bundle, "--key", "partition"});
  CHECK(sr.code == 0);
  CHECK(sr.report()["certificates"][0]["rank"] == 9);
}

TEST_CASE("export: graph, dev and structure constants") {
  const auto bundle = tmp("h3_export.json");
  REQUIRE(run({"construct", "heisenberg", "--q", "3", "--out", bundle}).code == 0);

  const auto adj = tmp("h3.adj");
  const auto g = run({"export", "graph", "--bundle", bundle, "--format", "adjlist", "--out", adj});
  REQUIRE(g.code == 0);
  CHECK(g.report()["certificates"][0]["intersection_array"] == "{8,6,1;1,3,8}");
  const auto ls = lines(slurp(adj));
  CHECK(ls.size() == 27);
  for (const auto& l : ls) {
    std::istringstream is(l.substr(l.find(':') + 1));
    int count = 0;
    for (int v; is >> v;) ++count;
    CHECK(count == 8);
  }

  const auto dim = tmp("h3.dimacs");
  REQUIRE(run({"export", "graph", "--bundle", bundle, "--format", "dimacs", "--out", dim}).code == 0);
  CHECK(lines(slurp(dim)).front() == "p edge 27 108");

  const auto q8 = tmp("q8_export.json");
  REQUIRE(run({"construct", "q8", "--out", q8}).code == 0);
  const auto dev = tmp("q8.dev");
  REQUIRE(run({"export", "dev", "--bundle", q8, "--format", "adjlist", "--out", dev}).code == 0);
  CHECK(lines(slurp(dev)).size() == 8);

  const auto ct = tmp("h3.ctensor.json");
  REQUIRE(run({"export", "ctensor", "--bundle", bundle, "--format", "json", "--out", ct}).code == 0);
  const auto tensor = Json::parse(slurp(ct));
  CHECK(tensor["rank"] == 5);

  // The quaternion set is not reversible, so its Cayley graph is directed.
  const auto r = run({"export", "graph", "--bundle", q8, "--format", "adjlist", "--out", tmp("q8.adj")});
  CHECK(r.code == 1);
}

TEST_CASE("resolve-branch reports the realized branch") {
  const auto h = run({"resolve-branch", "--target", "heis2r", "--q", "3", "--r", "2"});
  REQUIRE(h.code == 0);
  const auto hr = h.report();
  CHECK(hr["resolution"]["realized"] == Json::array({33, 24}));
  CHECK(hr["resolution"]["closed_form"] == Json::array({21, 30}));
  CHECK(hr["discrepancies"][0]["flag"] == "closed_form_mismatch");

  const auto q = run({"resolve-branch", "--target", "q8-2r", "--r", "2"});
  REQUIRE(q.code == 0);
  CHECK(q.report()["resolution"]["realized"] == Json::array({10, 6}));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code != 0);
  CHECK(run({"construct", "heisenberg"}).code != 0);
  CHECK(run({"construct", "heisenberg", "--q", "12"}).code == 2);
  CHECK(run({"construct", "dps", "--n", "4", "--t", "4", "--s", "6"}).code == 2);
  CHECK(run({"verify", "rds", "--group", tmp("missing.json"), "--sets", tmp("missing.json")}).code == 2);
  CHECK(run({"resolve-branch", "--target", "heis2r", "--r", "2"}).code == 2);
  // Mathematically invalid input is a failure, not a usage error.
  CHECK(run({"construct", "thm12", "--p", "2", "--r", "1"}).code == 1);
}

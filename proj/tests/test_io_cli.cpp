#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "etm/census.hpp"
#include "etm/construct.hpp"
#include "etm/io.hpp"
#include "etm/report.hpp"

using namespace etm;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out, err;
};

RunResult run_cli(const std::string& args) {
  fs::path dir = fs::temp_directory_path();
  fs::path out = dir / "etm_cli_out.txt", err = dir / "etm_cli_err.txt";
  std::string cmd = std::string(ETMAP_BIN) + " " + args + " > " + out.string() + " 2> " + err.string();
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / name; }

}  // namespace

TEST_CASE("flagmap v1 round trip") {
  std::vector<FlagMap> maps = {to_flag_map(biggs_map(5, 2)), to_flag_map(james_map(7, 5, 5))};
  for (const auto& entry : basic_premap_catalog()) maps.push_back(entry.premap);
  for (const FlagMap& m : maps) {
    std::stringstream ss;
    write_flagmap(ss, m);
    FlagMap back = read_flagmap(ss);
    CHECK(back == m);
  }
}

TEST_CASE("flagmap v1 format details") {
  std::stringstream ss;
  write_flagmap(ss, basic_premap_catalog()[0].premap);  // class 1: single fixed flag
  CHECK(ss.str() == "flags 1\nr0 0\nr1 0\nr2 0\n");

  auto bad = [](const std::string& text) {
    std::stringstream in(text);
    return read_flagmap(in);
  };
  CHECK_THROWS_AS(bad("flag 1\nr0 0\nr1 0\nr2 0\n"), Error);
  CHECK_THROWS_AS(bad("flags 2\nr0 0 1\nr1 0 1\n"), Error);           // truncated
  CHECK_THROWS_AS(bad("flags 2\nr0 0 5\nr1 0 1\nr2 0 1\n"), Error);   // out of range
  CHECK_THROWS_AS(bad("flags 4\nr0 1 0 3 2\nr1 0 1 2 3\nr2 1 0 3 2\n"), Error);  // disconnected
}

TEST_CASE("report json uses the exact field names") {
  json j = to_json(analyze(to_flag_map(biggs_map(5, 2))));
  std::set<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.insert(it.key());
  CHECK(keys == std::set<std::string>{"V", "E", "F", "petrie_count", "chi", "orientable",
                                      "has_boundary", "genus_or_crosscaps", "face_sizes",
                                      "vertex_degrees", "petrie_lengths", "aut_order",
                                      "flags_transitive", "edge_transitive", "vertex_transitive",
                                      "arc_transitive", "et_class"});
  CHECK(j["V"] == 5);
  CHECK(j["genus_or_crosscaps"] == 1);
  CHECK(j["et_class"] == "2Pex");

  // boundary premap: genus is null, chi still reported
  json b = to_json(analyze(basic_premap_catalog()[0].premap));
  CHECK(b["genus_or_crosscaps"].is_null());
  CHECK(b["has_boundary"] == true);
}

TEST_CASE("dot export") {
  std::string dot = to_dot(to_flag_map(biggs_map(4, 2)).underlying_graph());
  CHECK(dot.find("graph {") == 0);
  CHECK(dot.find("v0 -- v1") != std::string::npos);
}

TEST_CASE("cli: biggs json matches analyze of the written file byte for byte") {
  fs::path f = temp_file("m73.flagmap");
  auto gen = run_cli("map biggs --n 7 --c 3 --json --out " + f.string());
  REQUIRE(gen.exit_code == 0);
  json j1 = json::parse(gen.out);
  CHECK(j1["V"] == 7);
  CHECK(j1["E"] == 21);
  CHECK(j1["F"] == 14);
  CHECK(j1["chi"] == 0);
  CHECK(j1["genus_or_crosscaps"] == 1);
  CHECK(j1["consistent"] == true);

  auto ana = run_cli("map analyze " + f.string() + " --json");
  REQUIRE(ana.exit_code == 0);
  json j2 = json::parse(ana.out);
  j1.erase("formula");
  j1.erase("consistent");
  CHECK(j1.dump() == j2.dump());
  fs::remove(f);
}

TEST_CASE("cli: domain errors exit 2") {
  auto r = run_cli("map biggs --n 6 --c 2");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("NotPrimePower") != std::string::npos);

  auto j = run_cli("map james --n 7 --c 5 --j 2");
  CHECK(j.exit_code == 2);
  CHECK(j.err.find("BadJ") != std::string::npos);

  auto u = run_cli("map nonsense");
  CHECK(u.exit_code == 2);
}

TEST_CASE("cli: field info") {
  auto r = run_cli("field info --p 7 --json");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["n"] == 7);
  CHECK(j["phi"] == 2);
  CHECK(j["primitive_elements"] == json::array({3, 5}));

  auto r9 = run_cli("field info --p 3 --e 2 --json");
  json j9 = json::parse(r9.out);
  CHECK(j9["n"] == 9);
  CHECK(j9["galois_orbits"].size() == 2);
}

TEST_CASE("cli: classify and k6") {
  fs::path f = temp_file("k6.flagmap");
  auto gen = run_cli("map k6 --which {5,5} --out " + f.string());
  REQUIRE(gen.exit_code == 0);
  auto cls = run_cli("map classify " + f.string());
  REQUIRE(cls.exit_code == 0);
  CHECK(cls.out.find("et_class 1") != std::string::npos);
  CHECK(cls.out.find("aut_order 60") != std::string::npos);
  CHECK(run_cli("map k6 --which bogus").exit_code == 2);
  fs::remove(f);

  // petrie of the {3,5} map is the {5,5} map
  auto pet = run_cli("map k6 --which {3,5} --petrie --json");
  json j = json::parse(pet.out);
  CHECK(j["chi"] == -3);
}

TEST_CASE("cli: census summary") {
  auto r = run_cli("census --n 3");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("n=3 candidates=2 edge_transitive_classes=2") != std::string::npos);

  auto b = run_cli("census --n 2 --boundary");
  REQUIRE(b.exit_code == 0);
  CHECK(b.out.find("boundary_edge_transitive_maps=3") != std::string::npos);

  auto bad = run_cli("census --n 7");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("cli: census class representatives re-analyze to the same class") {
  fs::path dir = temp_file("census_out_n4");
  fs::remove_all(dir);
  auto r = run_cli("census --n 4 --out " + dir.string());
  REQUIRE(r.exit_code == 0);
  int found = 0;
  for (auto& entry : fs::directory_iterator(dir)) {
    ++found;
    auto cls = run_cli("map classify " + entry.path().string());
    CHECK(cls.out.find("et_class 1") != std::string::npos);
  }
  CHECK(found == 2);
  fs::remove_all(dir);
}

TEST_CASE("cli: catalog premaps") {
  fs::path dir = temp_file("premaps_out");
  fs::remove_all(dir);
  auto r = run_cli("catalog premaps --out " + dir.string());
  REQUIRE(r.exit_code == 0);
  int count = 0;
  for (auto& entry : fs::directory_iterator(dir)) {
    read_flagmap_file(entry.path().string());  // parses and validates
    ++count;
  }
  CHECK(count == 14);
  fs::remove_all(dir);
}

TEST_CASE("cli: verify small") {
  auto r = run_cli("verify --max-n 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("criterion 9") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#ifndef MODCOMP_CLI_PATH
#define MODCOMP_CLI_PATH "modcomp"
#endif

namespace {

struct RunResult {
  int status;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string tmp = std::string("/tmp/modcomp_cli_test_out.txt");
  std::string cmd =
      std::string(MODCOMP_CLI_PATH) + " " + args + " > " + tmp + " 2>&1";
  int rc = std::system(cmd.c_str());
  std::ifstream in(tmp);
  std::stringstream buf;
  buf << in.rdbuf();
  std::remove(tmp.c_str());
  return {rc == -1 ? -1 : WEXITSTATUS(rc), buf.str()};
}

}  // namespace

TEST_CASE("vectors summary for sym3") {
  auto r = run_cli("vectors --group sym3 --signature 2,2,3,3");
  CHECK(r.status == 0);
  CHECK(r.out.find("12 vectors, 2 classes") != std::string::npos);
  CHECK(r.out.find("genus: 2") != std::string::npos);
  CHECK(r.out.find("ordering: elemorder-v1:") != std::string::npos);
}

TEST_CASE("vectors summary for cyclic 13") {
  auto r = run_cli("vectors --group cyclic:13 --signature 13,13,13,13");
  CHECK(r.status == 0);
  CHECK(r.out.find("1596 vectors, 133 classes") != std::string::npos);
}

TEST_CASE("empty results still exit cleanly") {
  auto r = run_cli("vectors --group cyclic:2 --signature 3,3,3,3");
  CHECK(r.status == 0);
  CHECK(r.out.find("0 vectors") != std::string::npos);
}

TEST_CASE("strata summaries match the census") {
  auto r = run_cli("strata --group sym3 --signature 2,2,3,3");
  CHECK(r.status == 0);
  CHECK(r.out.find("orbits: (2)") != std::string::npos);

  r = run_cli("strata --group sg21_1 --signature 3,3,7,7");
  CHECK(r.status == 0);
  CHECK(r.out.find("orbits: (6, 6)") != std::string::npos);
}

TEST_CASE("matrix text output") {
  auto r = run_cli("matrix --group sym3 --signature 2,2,3,3 --cut E4");
  CHECK(r.status == 0);
  CHECK(r.out.find("6 2") != std::string::npos);
  CHECK(r.out.find("1 6") != std::string::npos);
}

TEST_CASE("matrix json parses and carries metadata") {
  auto r = run_cli(
      "matrix --group sym3 --signature 2,2,3,3 --cut E4 --format json");
  CHECK(r.status == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["meta"]["version"] == "0.1.0");
  CHECK(doc["meta"]["ordering_fingerprint"].get<std::string>().find(
            "elemorder-v1") == 0);
  CHECK(doc["report"]["sizes"][0][0] == 6);
  CHECK(doc["report"]["sizes"][1][1] == 6);
  CHECK(doc["report"]["cut"] == "E4");
}

TEST_CASE("byte-identical reruns") {
  std::string args =
      "matrix --group sym3 --signature 2,2,3,3 --cut E4 --selection random "
      "--seed 7 --format json";
  auto a = run_cli(args);
  auto b = run_cli(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("tiling report and dot export") {
  auto r = run_cli("tiling --group sym3 --signature 2,2,3,3 --cut E4");
  CHECK(r.status == 0);
  CHECK(r.out.find("spoke cycles valid: yes") != std::string::npos);

  r = run_cli(
      "tiling --group sym3 --signature 2,2,3,3 --cut E4 --class-index 0 "
      "--format dot");
  CHECK(r.status == 0);
  CHECK(r.out.find("graph polygon") != std::string::npos);

  r = run_cli(
      "tiling --group sym3 --signature 2,2,3,3 --cut E4 --class-index 0 "
      "--graph --format dot");
  CHECK(r.status == 0);
  CHECK(r.out.find("digraph cayley") != std::string::npos);

  // E1 collapses for class 0, so the graph export must fail loudly
  r = run_cli(
      "tiling --group sym3 --signature 2,2,3,3 --cut E1 --class-index 0 "
      "--graph --format dot");
  CHECK(r.status != 0);
}

TEST_CASE("bad inputs exit nonzero") {
  CHECK(run_cli("vectors --group nosuch --signature 2,2,3,3").status != 0);
  CHECK(run_cli("vectors --group sym3 --signature 3,2,2,3").status != 0);
  CHECK(run_cli("vectors --group sym3 --signature 2,2,3").status != 0);
  CHECK(run_cli("matrix --group sym3 --signature 2,2,3,3 --cut E9").status !=
        0);
  CHECK(run_cli("matrix --group sym3 --signature 2,2,3,3 --selection random")
            .status != 0);  // missing seed
}

TEST_CASE("group spec files") {
  {
    std::ofstream f("/tmp/modcomp_test_group.json");
    f << R"json({"permutations": ["(1,2)", "(1,2,3)"]})json";
  }
  auto r = run_cli(
      "vectors --group /tmp/modcomp_test_group.json --signature 2,2,3,3");
  CHECK(r.status == 0);
  CHECK(r.out.find("12 vectors, 2 classes") != std::string::npos);

  {
    std::ofstream f("/tmp/modcomp_test_group.json");
    f << R"json({"table": [[0,1],[1,0]]})json";
  }
  r = run_cli(
      "vectors --group /tmp/modcomp_test_group.json --signature 2,2,2,2");
  CHECK(r.status == 0);
  std::remove("/tmp/modcomp_test_group.json");
}

TEST_CASE("matrix restricted to one orbit") {
  auto r = run_cli(
      "matrix --group sg21_1 --signature 3,3,7,7 --cut E4 --orbit 0 "
      "--format json");
  CHECK(r.status == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["report"]["sizes"].size() == 6);
  for (int i = 0; i < 6; ++i)
    CHECK(doc["report"]["sizes"][i][i] == 21);
  CHECK(run_cli("matrix --group sym3 --signature 2,2,3,3 --orbit 9").status !=
        0);
}

TEST_CASE("random-mode sample aggregation") {
  auto r = run_cli(
      "matrix --group sym3 --signature 2,2,3,3 --cut E4 --selection random "
      "--seed 3 --samples 4 --format json");
  CHECK(r.status == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["report"]["samples"] == 4);
  for (int i = 0; i < 2; ++i) {
    CHECK(doc["report"]["sizes_min"][i][i] == 6);
    CHECK(doc["report"]["sizes_max"][i][i] == 6);
    CHECK(doc["report"]["sizes_mean"][i][i] == 6.0);
    for (int j = 0; j < 2; ++j)
      CHECK(doc["report"]["sizes_min"][i][j] <=
            doc["report"]["sizes_max"][i][j]);
  }
  // samples need random selection
  CHECK(run_cli("matrix --group sym3 --signature 2,2,3,3 --samples 2")
            .status != 0);
}

TEST_CASE("reports can be written to a file") {
  auto r = run_cli(
      "vectors --group sym3 --signature 2,2,3,3 --format json --out "
      "/tmp/modcomp_out_test.json");
  CHECK(r.status == 0);
  std::ifstream in("/tmp/modcomp_out_test.json");
  REQUIRE(in.good());
  auto doc = nlohmann::json::parse(in);
  CHECK(doc["report"]["vector_count"] == 12);
  CHECK(doc["report"]["genus"] == 2);
  std::remove("/tmp/modcomp_out_test.json");
}

TEST_CASE("census light rows") {
  auto r = run_cli("census --skip-heavy");
  CHECK(r.status == 0);
  CHECK(r.out.find("sym3 (0; 2,2,3,3): genus 2, 12 vectors, 2 classes, "
                   "orbits (2)") != std::string::npos);
  CHECK(r.out.find("orbits (6, 6)") != std::string::npos);          // sg21_1
  CHECK(r.out.find("orbits (6, 10, 15, 16)") != std::string::npos);  // alt5
  CHECK(r.out.find("133 classes") != std::string::npos);             // c13

  r = run_cli("census --skip-heavy --format json");
  CHECK(r.status == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["report"].size() == 6);
  CHECK(doc["report"][0]["classes"] == 2);
  CHECK(doc["report"][0]["orbits"] == "(2)");

  r = run_cli("census --skip-heavy --format csv");
  CHECK(r.status == 0);
  CHECK(r.out.find("group,signature,genus,vectors,classes,orbits") !=
        std::string::npos);
}

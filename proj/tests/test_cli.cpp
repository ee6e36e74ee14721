#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(COVFOCK_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
    result.out.append(buf, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("verify emits a parsable passing report") {
  const auto res = run("verify --n-max 2");
  CHECK(res.exit_code == 0);
  const auto doc = nlohmann::json::parse(res.out);
  CHECK(doc["tool"] == "covfock");
  CHECK(doc["command"] == "verify");
  CHECK(doc["config"]["n_max"] == 2);
  CHECK(doc["config"]["tol"].is_null());
  CHECK(doc["summary"]["pass"] == true);
  CHECK(doc["summary"]["failed"] == 0);
  CHECK(doc["checks"].is_array());
  CHECK(doc["checks"].size() == doc["summary"]["total"].get<std::size_t>());
  for (const auto& check : doc["checks"]) {
    CHECK(check["pass"] == true);
  }
}

TEST_CASE("impossible tolerance fails with exit code 1") {
  const auto res = run("verify --n-max 1 --tol 1e-30");
  CHECK(res.exit_code == 1);
  const auto doc = nlohmann::json::parse(res.out);
  CHECK(doc["summary"]["pass"] == false);
  CHECK(doc["config"]["tol"] == 1e-30);
  CHECK(doc["summary"]["failed"] > 0);
}

TEST_CASE("verify csv has one row per check") {
  const auto res = run("verify --n-max 1 --format csv");
  CHECK(res.exit_code == 0);
  std::istringstream lines(res.out);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "suite,name,value,tolerance,comparison,pass");
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.find(",true") != std::string::npos);
  }
  CHECK(rows > 100);
}

TEST_CASE("reports are byte identical across thread counts") {
  const auto one = run("verify --n-max 3");
  const auto many = run("verify --n-max 3");
  CHECK(one.exit_code == 0);
  CHECK(one.out == many.out);

  // Same report regardless of the worker pool size.
  const std::string base = "COVFOCK_THREADS=1 " + std::string(COVFOCK_BIN);
  FILE* p1 = popen((base + " verify --n-max 3").c_str(), "r");
  REQUIRE(p1 != nullptr);
  std::string text1;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, p1)) > 0) text1.append(buf, got);
  pclose(p1);
  CHECK(text1 == one.out);
}

TEST_CASE("decompose golden rows") {
  const auto res = run("decompose --state '0,0,0;2' --format csv");
  CHECK(res.exit_code == 0);
  std::istringstream lines(res.out);
  std::string header;
  std::string row1;
  std::string row2;
  REQUIRE(std::getline(lines, header));
  REQUIRE(std::getline(lines, row1));
  REQUIRE(std::getline(lines, row2));
  CHECK(header == "c,j,m,re,im,abs_sq");
  CHECK(row1.substr(0, 6) == "3,0,0,");
  CHECK(row1.find("8.660254037844") != std::string::npos);
  CHECK(row2.substr(0, 6) == "1,0,0,");
  CHECK(row2.find("-5.0000000000000") != std::string::npos);
}

TEST_CASE("decompose json carries sum of squares") {
  const auto res = run("decompose --state '0,0,1;1'");
  CHECK(res.exit_code == 0);
  const auto doc = nlohmann::json::parse(res.out);
  CHECK(doc["command"] == "decompose");
  CHECK(doc["state"] == "0,0,1;1");
  CHECK(doc["level"] == 2);
  REQUIRE(doc["terms"].size() == 1);
  CHECK(doc["terms"][0]["c"] == 3);
  CHECK(doc["terms"][0]["j"] == 1);
  CHECK(doc["terms"][0]["m"] == 0);
  CHECK(std::abs(doc["terms"][0]["re"].get<double>() - 1.0) < 1e-10);
  CHECK(std::abs(doc["sum_sq"].get<double>() - 1.0) < 1e-10);
}

TEST_CASE("boost emits cosh sinh entries") {
  const auto res = run("boost --alpha 0.25 --n-max 1 --format csv");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("fock,2,2,1.0314130998795732e+00,0") != std::string::npos);
  CHECK(res.out.find("fock,2,3,0,-2.5261231680816826e-01") != std::string::npos);
  CHECK(res.out.find("minkowski,0,3,2.5261231680816826e-01,0") !=
        std::string::npos);
}

TEST_CASE("boost json includes both phase conventions at level 1") {
  const auto res = run("boost --alpha 0.5 --axis 2 --n-max 2 --level 1");
  CHECK(res.exit_code == 0);
  const auto doc = nlohmann::json::parse(res.out);
  CHECK(doc["axis"] == 2);
  CHECK(doc["fock_block"].size() == 4);
  CHECK(doc["minkowski_block"].size() == 4);
  // Level 2 block comes without the rephased form.
  const auto res2 = run("boost --alpha 0.5 --n-max 2 --level 2");
  const auto doc2 = nlohmann::json::parse(res2.out);
  CHECK(doc2["fock_block"].size() == 10);
  CHECK_FALSE(doc2.contains("minkowski_block"));
}

TEST_CASE("sample hits the gaussian peak") {
  const auto res =
      run("sample --state '0,0,0;0' --axis x1 --min 0 --max 0 --count 1 --format csv");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("3.1830988618379") != std::string::npos);
  // Odd state crosses zero at the origin.
  const auto odd =
      run("sample --state '0,0,0;1' --axis x4 --min 0 --max 0 --count 1 --format csv");
  CHECK(odd.out.find("0,0,0,0,0") != std::string::npos);
}

TEST_CASE("sample rejects conflicting state specs") {
  const auto res = run("sample --state '0,0,0;0' --label '0;1;0,0' --axis x1");
  CHECK(res.exit_code == 2);
  const auto doc = nlohmann::json::parse(res.out);
  CHECK(doc["error"]["exit_code"] == 2);
}

TEST_CASE("usage errors produce machine readable records") {
  for (const char* args : {"verify --n-max 99", "decompose --state '9,9,9;9'",
                           "boost --axis 4", "decompose --state garbage",
                           "verify --format xml", "sample --axis q --state '0,0,0;0'",
                           "nonsense"}) {
    const auto res = run(args);
    INFO(std::string(args));
    CHECK(res.exit_code == 2);
    const auto doc = nlohmann::json::parse(res.out);
    CHECK(doc.contains("error"));
    CHECK(doc["error"]["message"].is_string());
  }
}

TEST_CASE("missing fixture is a config error") {
  const auto res = run("verify --n-max 0 --fixture /does/not/exist.json");
  CHECK(res.exit_code == 2);
  const auto doc = nlohmann::json::parse(res.out);
  CHECK(doc["error"]["message"].get<std::string>().find("fixture") !=
        std::string::npos);
}

TEST_CASE("out flag writes the report to a file") {
  const std::string path = "/tmp/covfock_cli_out_test.json";
  std::remove(path.c_str());
  const auto res = run("verify --n-max 1 --out " + path);
  CHECK(res.exit_code == 0);
  CHECK(res.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto doc = nlohmann::json::parse(buffer.str());
  CHECK(doc["summary"]["pass"] == true);
  CHECK(doc["config"]["out"] == path);
  std::remove(path.c_str());
}

TEST_CASE("help exits zero") {
  const auto res = run("--help");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("verify") != std::string::npos);
}

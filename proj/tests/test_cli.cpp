#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const char* path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  const char* bin = std::getenv("ORBIT_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "ORBIT_BIN must point at the CLI binary");
  const std::string cmd =
      std::string(bin) + " " + args + " > cli_out.tmp 2> cli_err.tmp";
  const int rc = std::system(cmd.c_str());
  RunResult res;
  res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  res.out = slurp("cli_out.tmp");
  res.err = slurp("cli_err.tmp");
  std::remove("cli_out.tmp");
  std::remove("cli_err.tmp");
  return res;
}

}  // namespace

TEST_CASE("extremal reports the documented reference values") {
  const auto res = run("extremal --spectrum 0.6,0.3,0.1,0 --dims 2x2");
  REQUIRE(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.out);
  CHECK(j["schema_version"] == 1);
  CHECK(double(j["i_min"]) == doctest::Approx(0.05482).epsilon(1e-3));
  CHECK(double(j["i_max"]) == doctest::Approx(0.70454).epsilon(1e-3));
  CHECK(double(j["delta_i"]) == doctest::Approx(0.64971).epsilon(1e-3));
  CHECK(double(j["max_qmi_bound"]) == doctest::Approx(2.0));
  CHECK(j["minimal_tie"] == false);
}

TEST_CASE("histogram runs are byte-identical for a fixed seed") {
  const std::string args = "tableaux histogram --shape 2x3 --samples 1000 --seed 7";
  const auto a = run(args);
  const auto b = run(args);
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("# schema_version=1") == 0);
  CHECK(a.out.find("catalog_index,count") != std::string::npos);
  // thread count must not change the bytes either
  const auto c = run(args + " --threads 1");
  CHECK(c.out == a.out);
}

TEST_CASE("region emits the seven reference vertices") {
  const auto res = run("region --spectrum 0.6,0.3,0.1,0");
  REQUIRE(res.exit_code == 0);
  std::size_t vertices = 0, pos = 0;
  while ((pos = res.out.find("vertex,", pos)) != std::string::npos) {
    ++vertices;
    pos += 7;
  }
  CHECK(vertices == 7);
  CHECK(res.out.find("vertex,0.5,0.5") != std::string::npos);
  CHECK(res.out.find("# schema_version=1") == 0);

  const auto hull = run("region --spectrum 0.6,0.3,0.1,0 --hull");
  CHECK(hull.out.find("hull_only=1") != std::string::npos);
}

TEST_CASE("demon scenario JSON carries the balance sheet") {
  const auto res = run("demon --spectrum 0.6,0.3,0.1,0 --lambda-b 0.4");
  REQUIRE(res.exit_code == 0);
  const auto j = nlohmann::json::parse(res.out);
  CHECK(double(j["qmi_initial"]) == doctest::Approx(0.3974168451037092).epsilon(1e-9));
  CHECK(double(j["qmi_final"]) == doctest::Approx(0.30715291446588755).epsilon(1e-9));
  CHECK(double(j["energy_a_final"]) == doctest::Approx(0.15).epsilon(1e-9));
  CHECK(double(j["energy_b_final"]) == doctest::Approx(0.45).epsilon(1e-9));
  CHECK(double(j["energy_total_initial"]) ==
        doctest::Approx(double(j["energy_total_final"])).epsilon(1e-12));
}

TEST_CASE("sweep CSV starts and ends at the classical arrangements") {
  const auto res = run("sweep --spectrum 0.6,0.3,0.1,0 --family odd --steps 3");
  REQUIRE(res.exit_code == 0);
  std::istringstream lines(res.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "# schema_version=1");
  std::getline(lines, line);
  CHECK(line == "angle,cos_angle,lambda_a,lambda_b,qmi,pop_a,pop_b");
  std::getline(lines, line);
  CHECK(line.substr(0, 2) == "0,");  // angle zero
}

TEST_CASE("graph edge list matches the catalog ordering") {
  const auto res = run("graph --shape 2x3 --format csv");
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("1,2\n") != std::string::npos);
  CHECK(res.out.find("2,5\n") != std::string::npos);
  CHECK(res.out.find("5,4\n") != std::string::npos);

  const auto dot = run("graph --shape 3x3");
  CHECK(dot.out.find("digraph") != std::string::npos);
}

TEST_CASE("precondition failures exit 1, I/O failures exit 2") {
  CHECK(run("extremal --spectrum 0.6,0.3,abc --dims 2x2").exit_code == 1);
  CHECK(run("extremal --spectrum 0.6,0.3,0.1 --dims 2x2").exit_code == 1);
  CHECK(run("demon --spectrum 0.6,0.3,0.1,0 --lambda-b 0.05").exit_code == 1);
  CHECK(run("region --spectrum 0.6,0.3,0.1,0 --bogus-flag").exit_code == 1);
  CHECK(run("sweep --state missing_state.json --family odd").exit_code == 2);
  CHECK(run("region --spectrum 0.6,0.3,0.1,0 --output /no_such_dir/out.csv").exit_code == 2);
  CHECK(run("--help").exit_code == 0);

  const auto err = run("demon --spectrum 0.6,0.3,0.1,0 --lambda-b 0.05");
  CHECK(!err.err.empty());  // a message accompanies the failure
}

TEST_CASE("output lands in the requested file") {
  const auto res = run("extremal --spectrum 6,5,4,3,2,1 --dims 2x3 --output cli_file.json");
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.empty());
  const std::string content = slurp("cli_file.json");
  std::remove("cli_file.json");
  const auto j = nlohmann::json::parse(content);
  CHECK(double(j["i_min"]) == doctest::Approx(0.0015754320195191518).epsilon(1e-9));
  CHECK(j.contains("i_max") == false);  // no square maximizer for 2x3
}

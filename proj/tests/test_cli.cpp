#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "jobspec.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string binary() {
  const char* bin = std::getenv("TILTFACTOR_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "TILTFACTOR_BIN must point at the CLI binary");
  return bin;
}

RunResult run_cli(const std::string& args, const std::string& stdin_data = "",
                  const std::string& env_prefix = "") {
  std::string cmd;
  if (!stdin_data.empty()) cmd += "printf '%s' '" + stdin_data + "' | ";
  cmd += env_prefix + binary() + " " + args + " 2>/dev/null";
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("describe prints the standard data") {
  auto res = run_cli("describe --type A --rank 2");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("N=3") != std::string::npos);
  CHECK(res.out.find("|W|=6") != std::string::npos);
  CHECK(res.out.find("h=3") != std::string::npos);
  CHECK(res.out.find("rho=(1,1)") != std::string::npos);
}

TEST_CASE("minuscule of E8 is empty with exit 0") {
  auto res = run_cli("minuscule --type E --rank 8");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("none") != std::string::npos);
}

TEST_CASE("verification outcomes map to the exit-code contract") {
  // pass -> 0
  auto pass = run_cli("verify lemma --type A --rank 1 --p 3 --weight 1");
  CHECK(pass.exit_code == 0);
  CHECK(pass.out.find("chi(3) + chi(1)") != std::string::npos);

  // verification failure -> 1, never 2
  auto fail = run_cli("verify supplied --type A --rank 2 --p 3",
                      R"({"target":[3,0],"left":[[[2,0],"1"]],"right":[[[1,0],"1"]],)"
                      R"("tilt":[[[3,0],"1"]]})");
  CHECK(fail.exit_code == 1);

  // usage errors -> 2, never 1
  CHECK(run_cli("describe --type G --rank 1").exit_code == 2);
  CHECK(run_cli("verify lemma --type A --rank 1 --p 4 --weight 1").exit_code == 2);
  CHECK(run_cli("verify lemma --type A --rank 1 --p 3 --weight 1,2").exit_code == 2);
  CHECK(run_cli("verify bogus --type A --rank 1 --p 3").exit_code == 2);
  CHECK(run_cli("suite bogus").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);

  // coverage rejections -> 2
  CHECK(run_cli("verify lemma --type F --rank 4 --p 2 --weight 0,0,0,0").exit_code == 2);
  CHECK(run_cli("char --type A --rank 1 --p 3 --kind tilting --weight 4").exit_code == 2);
}

TEST_CASE("budget overrides apply") {
  // flag form
  CHECK(run_cli("tensor --type A --rank 2 --weight 2,2 --weight 2,2 --budget 10").exit_code == 2);
  // environment form
  auto res = run_cli("--help > /dev/null; TILTFACTOR_BUDGET=10 " + binary() +
                     " tensor --type A --rank 2 --weight 2,2 --weight 2,2");
  CHECK(res.exit_code == 2);
  auto ok = run_cli("tensor --type A --rank 2 --weight 2,2 --weight 2,2");
  CHECK(ok.exit_code == 0);
}

TEST_CASE("json output is deterministic") {
  const std::string args = "verify lemma --type B --rank 2 --p 3 --weight 0,1 --format json";
  auto a = run_cli(args);
  auto b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::ordered_json::parse(a.out);
  CHECK(j["claim"] == "lemma");
  CHECK(j["passed"] == true);
  CHECK(j.contains("witnesses"));
  CHECK(j["witnesses"].contains("lhs"));
  CHECK(j["witnesses"].contains("rhs"));
  CHECK(j.contains("skipped"));
  CHECK(j.contains("failures"));
  CHECK(j.contains("donkin_assumed"));
}

TEST_CASE("suites run from the CLI") {
  auto res = run_cli("suite table1");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("9/9 passed") != std::string::npos);

  auto res2 = run_cli("suite remark3 --format json");
  CHECK(res2.exit_code == 0);
  auto last = res2.out.rfind('{');
  auto j = nlohmann::ordered_json::parse(res2.out.substr(last));
  CHECK(j["failed"] == 0);
}

TEST_CASE("factorize lists certificates") {
  auto res = run_cli("factorize --type A --rank 1 --p 2 --target 5 --format json");
  CHECK(res.exit_code == 0);
  auto j = nlohmann::ordered_json::parse(res.out.substr(0, res.out.find('\n')));
  CHECK(j["left"] == nlohmann::ordered_json::array({2}));
  CHECK(j["right"] == nlohmann::ordered_json::array({3}));
  CHECK(j["character_checked"] == true);
}

TEST_CASE("job specs round-trip through serialization") {
  tiltfactor::JobSpec spec;
  spec.command = "verify";
  spec.type_letter = 'B';
  spec.rank = 3;
  spec.p = 5;
  spec.r = 2;
  spec.weights = {{0, 0, 1}};
  spec.mu = std::vector<int>{1, 0, 0};
  spec.claim = "proposition";
  spec.format = "json";
  spec.budget = 12345;
  spec.jobs = 4;

  nlohmann::ordered_json j = spec;
  auto back = j.get<tiltfactor::JobSpec>();
  CHECK(back == spec);

  tiltfactor::JobSpec minimal;
  minimal.command = "describe";
  nlohmann::ordered_json j2 = minimal;
  CHECK(j2.get<tiltfactor::JobSpec>() == minimal);
}

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

std::string arrtool_path;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// stderr is routed away so diagnostics never pollute the captured report
RunResult run(const std::string& args) {
  RunResult r;
  std::string cmd = arrtool_path + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path);
  f << text;
  return path.string();
}

const char* kPoints =
    R"({"type":"affine","ambient_dim":1,"hyperplanes":[{"coeffs":["1"],"constant":"0"},{"coeffs":["1"],"constant":"-1"}],"weights":["1","2"]})";

const char* kCentral =
    R"({"type":"central","ambient_dim":2,"hyperplanes":[{"coeffs":["1","0"]},{"coeffs":["0","1"]},{"coeffs":["1","-1"]}],"weights":["-3","1","2"]})";

}  // namespace

TEST_CASE("every report is canonical json that round-trips") {
  std::string aff = write_temp("cli_points.json", kPoints);
  std::string cen = write_temp("cli_central.json", kCentral);
  const std::string cmds[] = {
      "validate --input " + aff,
      "lattice --input " + cen,
      "os-dim --input " + aff,
      "flags --input " + cen,
      "gram --degree 1 --input " + aff,
      "singular --space affine --input " + aff,
      "singular --space projective --input " + cen,
      "decone --pivot 0 --input " + cen,
      "decone-isometry --pivot 2 --input " + cen,
      "transition --from 0 --to 1 --input " + cen,
      "verify --theorem psi-chain-map --input " + cen,
      "verify --list",
  };
  for (const std::string& cmd : cmds) {
    CAPTURE(cmd);
    RunResult first = run(cmd);
    CHECK(first.exit_code == 0);
    nlohmann::json report = nlohmann::json::parse(first.out);
    CHECK(report.dump(2) + "\n" == first.out);
    CHECK(report.contains("command"));
    CHECK(report.contains("input_digest"));
    CHECK(report.contains("results"));
    CHECK(run(cmd).out == first.out);  // byte-identical reruns
  }
}

TEST_CASE("random output is deterministic and feeds back in") {
  RunResult a = run("random --seed 11 --ell 2 --n 4 --zero-sum");
  RunResult b = run("random --seed 11 --ell 2 --n 4 --zero-sum");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  std::string path = write_temp("cli_random.json", a.out);
  RunResult v = run("validate --input " + path);
  CHECK(v.exit_code == 0);
  nlohmann::json report = nlohmann::json::parse(v.out);
  CHECK(report["results"]["kind"] == "central");
  CHECK(report["results"]["weight_sum"] == "0");
  CHECK(run("random --seed 12 --ell 2 --n 4 --zero-sum").out != a.out);
}

TEST_CASE("the two-point example reproduces its frozen form") {
  std::string aff = write_temp("cli_points.json", kPoints);
  nlohmann::json gram =
      nlohmann::json::parse(run("gram --degree 1 --input " + aff).out);
  CHECK(gram["results"]["matrix"] ==
        nlohmann::json::parse(R"([["1","0"],["0","2"]])"));
  nlohmann::json sing = nlohmann::json::parse(
      run("singular --space affine --input " + aff).out);
  CHECK(sing["results"]["singular"]["basis"] ==
        nlohmann::json::parse(R"([["2","-1"]])"));
  CHECK(sing["results"]["singular"]["restricted_gram"] ==
        nlohmann::json::parse(R"([["6"]])"));
}

TEST_CASE("exit codes separate usage, computation and verification failures") {
  std::string bad = write_temp("cli_bad.json", "{ not json");
  std::string aff = write_temp("cli_points.json", kPoints);
  std::string cen = write_temp("cli_central.json", kCentral);
  CHECK(run("validate --input " + bad).exit_code == 2);
  CHECK(run("validate --input /no/such/file").exit_code == 2);
  CHECK(run("lattice --no-such-flag").exit_code == 2);
  CHECK(run("verify").exit_code == 2);
  CHECK(run("verify --theorem no-such-theorem").exit_code == 2);
  CHECK(run("random --seed 1 --ell 9 --n 3").exit_code == 2);
  CHECK(run("decone --input " + aff).exit_code == 1);
  CHECK(run("gram --degree 9 --input " + aff).exit_code == 1);
  CHECK(run("transition --from 0 --to 0 --input " + cen).exit_code == 1);
  CHECK(run("singular --space affine --input " + cen).exit_code == 1);
  // weights summing to 7: the affine singular space still computes
  std::string unbalanced = write_temp(
      "cli_unbalanced.json",
      R"({"type":"affine","ambient_dim":1,"hyperplanes":[{"coeffs":["1"],"constant":"0"},{"coeffs":["1"],"constant":"-1"}],"weights":["3","4"]})");
  CHECK(run("singular --space affine --input " + unbalanced).exit_code == 0);
}

TEST_CASE("verify on a single input reports per-theorem outcomes") {
  std::string cen = write_temp("cli_central.json", kCentral);
  RunResult r = run("verify --all --input " + cen);
  CHECK(r.exit_code == 0);
  nlohmann::json report = nlohmann::json::parse(r.out);
  CHECK(report["results"]["all_passed"] == true);
  nlohmann::json names = nlohmann::json::parse(run("verify --list").out);
  CHECK(report["results"]["checks"].size() ==
        names["results"]["theorems"].size());
  for (const auto& c : report["results"]["checks"]) {
    CHECK(c["arrangement"] == "input");
    CHECK(c["passed"] == true);
  }
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_tests <path-to-arrtool>\n");
    return 1;
  }
  arrtool_path = argv[1];
  doctest::Context ctx;
  return ctx.run();
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fatpoints/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args, bool merge_stderr = false,
                  const std::string& env_prefix = "") {
  std::string cmd = env_prefix + std::string(FATPOINTS_CLI_PATH) + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult res;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                     "/fatpoints_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

int count_occurrences(const std::string& hay, const std::string& needle) {
  int count = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++count;
  return count;
}

}  // namespace

TEST_CASE("bound prints the exact fraction and decimal") {
  CliResult res = run_cli("bound --r 10 --m 1");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("81081/29200") != std::string::npos);
  CHECK(res.output.find("2.77675") != std::string::npos);
  CHECK(res.output.find("proven-greater") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("bound").exit_code == 2);
  CHECK(run_cli("bound --r 1").exit_code == 2);
  CHECK(run_cli("bound --r 10 --no-such-flag").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("sweep --r-min 5 --r-max 4").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("documented caps require --force") {
  CHECK(run_cli("bound --r 501").exit_code == 2);
  CliResult res = run_cli("bound --r 501 --force");
  CHECK(res.exit_code == 0);
}

TEST_CASE("unload on the two-point example") {
  std::string path = write_temp(
      "two_point.json",
      R"({ "points": 2, "proximities": [[2, 1]], "multiplicities": [0, 1] })");
  CliResult res = run_cli("unload --input " + path + " --trace");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("final multiplicities: 1 0") != std::string::npos);
  CHECK(res.output.find("pivot 1") != std::string::npos);
}

TEST_CASE("unload rejects bad files with exit 2 and a cited field") {
  CHECK(run_cli("unload --input /no/such/file.json").exit_code == 2);

  std::string bad = write_temp("bad.json", "{ not json ]");
  CliResult res = run_cli("unload --input " + bad, true);
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("line 1") != std::string::npos);

  std::string sat = write_temp(
      "sat.json",
      R"({ "points": 3, "proximities": [[3, 1], [3, 2]], "multiplicities": [1, 1, 1] })");
  CliResult res2 = run_cli("unload --input " + sat, true);
  CHECK(res2.exit_code == 2);
  CHECK(res2.output.find("proximities") != std::string::npos);
}

TEST_CASE("pivot policies give the same final multiplicities") {
  std::string path = write_temp(
      "chain4.json",
      R"({ "points": 4, "proximities": [[2, 1], [3, 1], [3, 2], [4, 3]], "multiplicities": [2, 2, 2, 2] })");
  std::string expected = "final multiplicities: 3 2 1 1";
  for (const char* policy : {"lowest", "highest", "most-negative"}) {
    CliResult res = run_cli("unload --input " + path + " --policy " + policy);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find(expected) != std::string::npos);
  }
}

TEST_CASE("simulate reports the worked example") {
  CliResult res = run_cli("simulate --r 4 --m 2");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("(3, 2, 1, 1)") != std::string::npos);
  CHECK(res.output.find("(4, 1, 0, 0)") != std::string::npos);
  CHECK(res.output.find("45/14") != std::string::npos);
  CHECK(res.output.find("holds") != std::string::npos);
  CHECK(run_cli("simulate --r 501 --m 1").exit_code == 2);
  CHECK(run_cli("simulate --r 10 --m 2000000").exit_code == 2);
}

TEST_CASE("verify-prop emits one verdict line per n") {
  CliResult res = run_cli("verify-prop --n-min 9 --n-max 20");
  CHECK(res.exit_code == 0);
  CHECK(count_occurrences(res.output, "proven-greater") == 12);
  CHECK(res.output.find("exploratory") == std::string::npos);

  CliResult low = run_cli("verify-prop --n-min 1 --n-max 1");
  CHECK(low.exit_code == 0);
  CHECK(low.output.find("exploratory") != std::string::npos);
}

TEST_CASE("strict mode turns inconclusive checks into exit 3") {
  // at n = 200 the sharpest check needs ~40 digits; a cap of 4 starves it
  std::string args = "verify-prop --n-min 200 --n-max 200 --precision 4 --precision-cap 4";
  CHECK(run_cli(args).exit_code == 0);
  CHECK(run_cli(args + " --strict").exit_code == 3);
  // with the default cap the escalation resolves everything
  CHECK(run_cli("verify-prop --n-min 200 --n-max 200 --precision 4 --strict").exit_code == 0);
}

TEST_CASE("precision cap comes from the environment unless a flag overrides it") {
  std::string args = "verify-prop --n-min 200 --n-max 200 --precision 4 --strict";
  CHECK(run_cli(args, false, "FATPOINTS_PRECISION_CAP=8 ").exit_code == 3);
  CHECK(run_cli(args + " --precision-cap 256", false, "FATPOINTS_PRECISION_CAP=8 ").exit_code == 0);
}

TEST_CASE("csv output round-trips byte-identically") {
  std::string cluster_path = write_temp(
      "csv_cluster.json",
      R"({ "points": 3, "proximities": [[2, 1], [3, 2]], "multiplicities": [1, 4, 2] })");
  for (std::string args :
       {std::string("bound --r 10 --format csv"),
        std::string("sweep --r-min 10 --r-max 20 --format csv"),
        std::string("sweep --r-min 13 --r-max 16 --m 3 --format csv --evain"),
        std::string("simulate --r 6 --m 2 --format csv"),
        std::string("unload --input " + cluster_path + " --format csv"),
        std::string("verify-prop --n-min 9 --n-max 11 --format csv")}) {
    CliResult res = run_cli(args);
    REQUIRE(res.exit_code == 0);
    CHECK(fatpoints::emit_csv(fatpoints::parse_csv(res.output)) == res.output);
  }
}

TEST_CASE("json output round-trips byte-identically") {
  for (std::string args : {std::string("bound --r 13 --format json"),
                           std::string("simulate --r 4 --m 2 --format json --trace"),
                           std::string("verify-prop --n-min 9 --n-max 10 --format json")}) {
    CliResult res = run_cli(args);
    REQUIRE(res.exit_code == 0);
    auto doc = nlohmann::ordered_json::parse(res.output);
    CHECK(doc.dump(2) + "\n" == res.output);
    CHECK(doc.contains("schema"));
  }
}

TEST_CASE("identical invocations give identical bytes") {
  std::string args = "sweep --r-min 10 --r-max 30 --format csv";
  CHECK(run_cli(args).output == run_cli(args).output);
}

TEST_CASE("unload json names the step fields") {
  std::string path = write_temp(
      "two_point2.json",
      R"({ "points": 2, "proximities": [[2, 1]], "multiplicities": [0, 1] })");
  CliResult res = run_cli("unload --input " + path + " --format json");
  CHECK(res.exit_code == 0);
  auto doc = nlohmann::ordered_json::parse(res.output);
  CHECK(doc["schema"] == "fatpoints/unload/v1");
  CHECK(doc["final"] == nlohmann::ordered_json::array({"1", "0"}));
  CHECK(doc["steps"][0]["pivot"] == 1);
  CHECK(doc["steps"][0]["excess_before"] == "-1");
}

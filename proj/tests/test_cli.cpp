#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "penta/json_io.hpp"

using penta::Json;

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string out;
};

const char* cli_path() { return std::getenv("PENTA_CLI"); }

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "penta_cli_tests";
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p);
  f << text;
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

// Runs the CLI with `args`, feeding `input` on stdin; captures stdout.
RunResult run_cli(const std::string& args, const std::string& input = "") {
  const fs::path dir = scratch_dir();
  static int counter = 0;
  const fs::path in_file = dir / ("in" + std::to_string(counter) + ".json");
  const fs::path out_file = dir / ("out" + std::to_string(counter) + ".json");
  ++counter;

  write_file(in_file, input);
  const std::string command = std::string("'") + cli_path() + "' " + args + " < " +
                              in_file.string() + " > " + out_file.string() + " 2>/dev/null";
  const int raw = std::system(command.c_str());
  RunResult result;
  result.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  result.out = read_file(out_file);
  return result;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("subcommand pipeline") {
  if (!cli_path()) {
    MESSAGE("PENTA_CLI not set; skipping CLI tests");
    return;
  }

  SUBCASE("check-point on (0,2,1)") {
    const RunResult r = run_cli("check-point", R"({"a":[0,0],"s":[2,0],"p":[1,0]})");
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["status"] == "ok");
    CHECK(j["payload"]["k0"]["member"] == true);
    CHECK(j["payload"]["k1"]["member"] == true);
    CHECK(j["payload"]["closed_pentablock"]["member"] == true);
  }

  SUBCASE("check-point rejects (2,0,0) from the pentablock") {
    const RunResult r = run_cli("check-point", R"({"a":[2,0],"s":[0,0],"p":[0,0]})");
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["payload"]["closed_pentablock"]["member"] == false);
    CHECK(j["payload"]["gamma_closed"]["member"] == true);
  }

  SUBCASE("lift and project round") {
    const RunResult lifted = run_cli("lift", R"({"a":[1,0],"s":[0,0],"p":[-1,0]})");
    REQUIRE(lifted.code == 0);
    const Json j = Json::parse(lifted.out);
    CHECK(j["payload"]["unitarity_residual"].get<double>() <= 1e-10);

    const RunResult back = run_cli("project", penta::dump_json(j["payload"]["unitary"]));
    REQUIRE(back.code == 0);
    const Json b = Json::parse(back.out);
    CHECK(b["payload"]["point"]["a"][0].get<double>() == doctest::Approx(1.0));
    CHECK(b["payload"]["point"]["p"][0].get<double>() == doctest::Approx(-1.0));
  }

  SUBCASE("lift failure names the violated condition") {
    const RunResult r = run_cli("lift", R"({"a":[1,0],"s":[2,0],"p":[1,0]})");
    CHECK(r.code == 1);
    const Json j = Json::parse(r.out);
    CHECK(j["status"] == "check-failed");
    CHECK(j["diagnostics"][0].get<std::string>().find("|a|^2") != std::string::npos);
  }

  SUBCASE("beta-example feeds verify-inner") {
    const RunResult made = run_cli("beta-example --beta [0,1]");
    REQUIRE(made.code == 0);
    const Json function = Json::parse(made.out)["payload"]["function"];

    const RunResult verified = run_cli("verify-inner", penta::dump_json(function));
    CHECK(verified.code == 0);
    const Json report = Json::parse(verified.out)["payload"]["report"];
    CHECK(report["pass"] == true);
    CHECK(report["circle_residual"].get<double>() <= 1e-10);

    // tamper: scale N1 and expect check-failed
    Json bad = function;
    bad["N1"][0][0] = bad["N1"][0][0].get<double>() * 1.01;
    bad["N1"][0][1] = bad["N1"][0][1].get<double>() * 1.01;
    bad["N1"][1][0] = bad["N1"][1][0].get<double>() * 1.01;
    bad["N1"][1][1] = bad["N1"][1][1].get<double>() * 1.01;
    const RunResult failed = run_cli("verify-inner", penta::dump_json(bad));
    CHECK(failed.code == 1);
    CHECK(Json::parse(failed.out)["status"] == "check-failed");

    const RunResult rejected = run_cli("make-inner", penta::dump_json(bad));
    CHECK(rejected.code == 1);
    CHECK(Json::parse(rejected.out)["payload"]["violated_condition"] == "3");
  }

  SUBCASE("b0b-example and normalize") {
    const RunResult made = run_cli("b0b-example", R"({"zeros":[[0.5,0]],"theta":0.25})");
    REQUIRE(made.code == 0);
    const Json function = Json::parse(made.out)["payload"]["function"];

    const RunResult normalized = run_cli("normalize", penta::dump_json(function));
    REQUIRE(normalized.code == 0);
    const Json j = Json::parse(normalized.out);
    CHECK(j["payload"]["t"].is_number());

    // whole envelopes pipe into the data-consuming commands unchanged
    const RunResult piped = run_cli("verify-inner", made.out);
    CHECK(piped.code == 0);
    CHECK(Json::parse(piped.out)["payload"]["report"]["pass"] == true);

    // a degree violation drives the coefficient residual to infinity,
    // which must still serialize as valid JSON
    Json overdeg = function;
    overdeg["n"] = 0;
    const RunResult infinite = run_cli("verify-inner", penta::dump_json(overdeg));
    CHECK(infinite.code == 1);
    const Json parsed = Json::parse(infinite.out);
    CHECK(parsed["payload"]["report"]["coeff_residual"].is_null());
  }

  SUBCASE("malformed input exits 2") {
    const RunResult r = run_cli("check-point", "{not json");
    CHECK(r.code == 2);
    CHECK(Json::parse(r.out)["status"] == "invalid-input");

    const RunResult missing = run_cli("check-point", R"({"a":[0,0],"s":[2,0]})");
    CHECK(missing.code == 2);

    const RunResult bad_beta = run_cli("beta-example --beta [2,0]");
    CHECK(bad_beta.code == 2);
  }

  SUBCASE("audit is deterministic and quiet flags work") {
    const RunResult a = run_cli("audit --seed 42 --count 25");
    const RunResult b = run_cli("audit --seed 42 --count 25");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const Json j = Json::parse(a.out);
    CHECK(j["payload"]["campaigns"].size() == 4);
    for (const auto& c : j["payload"]["campaigns"]) CHECK(c["pass"] == 25);
  }
}

}  // TEST_SUITE

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "csf/engine.hpp"
#include "csf/trace.hpp"
#include "test_support.hpp"

using namespace csft;

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

fs::path temp_file(const std::string& stem) {
  return fs::temp_directory_path() / ("csf_test_" + stem);
}

CliResult run_cli(const std::string& args) {
  auto out_path = temp_file("stdout.txt");
  auto err_path = temp_file("stderr.txt");
  std::string command = "CSFSIM_NO_COLOR=1 " + std::string(CSFSIM_BIN) + " " + args + " >" +
                        out_path.string() + " 2>" + err_path.string();
  int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp_file(out_path);
  result.err = slurp_file(err_path);
  return result;
}

std::string fixture_path(const std::string& rel) {
  return (fs::path(CSF_FIXTURE_DIR) / rel).string();
}

std::size_t count_lines(const std::string& text) {
  std::size_t n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

} // namespace

TEST_CASE("cli run: built-in, trace with ticks x stages lines, exit 0") {
  auto trace_path = temp_file("coach.jsonl");
  auto result = run_cli("run --scenario coach_father --ticks 3 --seed 0 --trace " +
                        trace_path.string());
  CHECK(result.exit_code == 0);

  auto text = slurp_file(trace_path);
  CHECK(count_lines(text) == 3 * 5); // one agent

  // Every line parses on its own.
  std::istringstream lines(text);
  std::string line;
  std::size_t parsed = 0;
  while (std::getline(lines, line)) {
    CHECK_NOTHROW(parse_trace_line(line));
    ++parsed;
  }
  CHECK(parsed == 15);

  CHECK(result.out.find("scenario coach_father") != std::string::npos);
  CHECK(result.out.find("bench") != std::string::npos);
  CHECK(result.out.find("conflicts") != std::string::npos);
}

TEST_CASE("cli run: unknown scenario path exits 2") {
  auto result = run_cli("run --scenario /no/such/file.json");
  CHECK(result.exit_code == 2);
  CHECK(result.err.find("error") != std::string::npos);
}

TEST_CASE("cli run: validation errors exit 1 with diagnostics on stderr") {
  auto result = run_cli("run --scenario " + fixture_path("invalid/ghost_salient.json"));
  CHECK(result.exit_code == 1);
  CHECK(result.err.find("ghost") != std::string::npos);
  CHECK(result.err.find("/agents/solo/default_salient") != std::string::npos);
}

TEST_CASE("cli run: epsilon override 1.0 deploys nothing") {
  auto result = run_cli("run --scenario coach_father --ticks 3 --epsilon 1.0");
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("deployed resources (ticks): (none)") != std::string::npos);
  CHECK(result.out.find("total actions 0") != std::string::npos);
}

TEST_CASE("cli run: identical invocations produce byte-identical trace files") {
  auto a = temp_file("det_a.jsonl");
  auto b = temp_file("det_b.jsonl");
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    CHECK(run_cli("run --scenario " + name + " --ticks 5 --seed 9 --trace " + a.string())
              .exit_code == 0);
    CHECK(run_cli("run --scenario " + name + " --ticks 5 --seed 9 --trace " + b.string())
              .exit_code == 0);
    CHECK(slurp_file(a) == slurp_file(b));
    CHECK_FALSE(slurp_file(a).empty());
  }
}

TEST_CASE("cli explain: salience rows match the trace payload exactly") {
  auto trace_path = temp_file("explain.jsonl");
  REQUIRE(run_cli("run --scenario coach_father --ticks 2 --seed 0 --trace " +
                  trace_path.string())
              .exit_code == 0);

  auto result = run_cli("explain --scenario coach_father --ticks 2 --seed 0 --tick 1 "
                        "--agent duarte");
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("frame coach") != std::string::npos);
  CHECK(result.out.find("frame father") != std::string::npos);

  // Pull the update payload for tick 1 and require the exact printed values.
  std::istringstream lines(slurp_file(trace_path));
  std::string line;
  Json payload;
  while (std::getline(lines, line)) {
    auto event = parse_trace_line(line);
    if (event.tick == 1 && event.stage == Stage::update) payload = event.payload;
  }
  REQUIRE_FALSE(payload.is_null());
  char buf[64];
  for (const auto& row : payload.at("salience")) {
    std::snprintf(buf, sizeof buf, "%.17g", row.at("salience").get<double>());
    std::string needle = "salience " + std::string(buf);
    CAPTURE(needle);
    CHECK(result.out.find(needle) != std::string::npos);
    CHECK(result.out.find("frame " + row.at("frame").get<std::string>()) != std::string::npos);
  }
  CHECK(result.out.find("salient") != std::string::npos);
}

TEST_CASE("cli explain: tick beyond the run exits 1") {
  auto result = run_cli("explain --scenario coach_father --ticks 2 --tick 99 --agent duarte");
  CHECK(result.exit_code == 1);
  auto unknown = run_cli("explain --scenario coach_father --ticks 2 --tick 0 --agent nobody");
  CHECK(unknown.exit_code == 1);
}

TEST_CASE("cli validate: exit codes and diagnostics") {
  CHECK(run_cli("validate --scenario " + fixture_path("minimal.json")).exit_code == 0);

  auto dangling = run_cli("validate --scenario " + fixture_path("invalid/dangling_ref.json"));
  CHECK(dangling.exit_code == 1);
  CHECK(count_lines(dangling.err) == 1);
  CHECK(dangling.err.find("r9") != std::string::npos);

  auto warning = run_cli("validate --scenario " + fixture_path("warning_only.json"));
  CHECK(warning.exit_code == 0);
  CHECK(count_lines(warning.err) == 1);
  CHECK(warning.err.find("warning") != std::string::npos);

  CHECK(run_cli("validate --scenario /no/such/file.json").exit_code == 2);
}

TEST_CASE("cli list: prints the built-ins") {
  auto result = run_cli("list");
  CHECK(result.exit_code == 0);
  CHECK(result.out == "coach_father\nlibrary_dance\n");
}

TEST_CASE("cli run: policy and trace overrides are accepted") {
  auto result = run_cli("run --scenario library_dance --ticks 5 --policy decay --lambda 0.5 "
                        "--theta 0.25");
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("scenario library_dance") != std::string::npos);
}

// End-to-end checks of the qauth command-line tool: subcommand output
// formats, the report round-trip, config files, and error reporting.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

std::string temp_path(const char* suffix) {
  static int counter = 0;
  return "/tmp/qauth_cli_test_" + std::to_string(getpid()) + "_" +
         std::to_string(counter++) + suffix;
}

// Runs the CLI with the given arguments, capturing stdout and stderr.
RunResult run_cli(const std::string& args) {
  const std::string out_file = temp_path(".out");
  const std::string command =
      std::string(QAUTH_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  std::remove(out_file.c_str());
  return result;
}

}  // namespace

TEST_CASE("bounds subcommand emits the threshold security value") {
  const auto r = run_cli("bounds --scheme threshold --base five --levels 2 --alpha 0.08");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("threshold_security") != std::string::npos);
  CHECK(r.output.find("0.6065") != std::string::npos);
  CHECK(r.output.find("\"vacuous\": false") != std::string::npos);
}

TEST_CASE("compare prints the threshold growth exponent") {
  const auto r =
      run_cli("compare --epsilon 1e-6 --delta 1e-6 --p 0.005 --inner five --outer five");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("threshold") != std::string::npos);
  CHECK(r.output.find("2.32") != std::string::npos);
  CHECK(r.output.find("3.79") != std::string::npos);
}

TEST_CASE("weight-1 attacks on the trap scheme produce zero failures") {
  const auto r = run_cli(
      "simulate-security --scheme trap --inner five --levels 1 --attack-weight 1 "
      "--trials 100000 --seed 7");
  CHECK(r.exit_code == 0);
  // CSV row: ...,attack_w,trials,failures,...
  CHECK(r.output.find(",1,100000,0,") != std::string::npos);
}

TEST_CASE("emitted JSON reports validate under the check subcommand") {
  const std::string report = temp_path(".json");
  const auto sim = run_cli("--out " + report +
                           " --format json simulate-correctness --scheme code --base five "
                           "--levels 1 --p 0.02 --trials 50000 --seed 3");
  REQUIRE(sim.exit_code == 0);
  const auto check = run_cli("check " + report);
  CHECK(check.exit_code == 0);
  CHECK(check.output.find("0 mismatched") != std::string::npos);

  // Tampering with the stored bound must be caught.
  {
    std::ifstream in(report);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    const auto pos = text.find("\"bound_value\":");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 14, "\"bound_value\": 0.5, \"bound_value_old\":");
    std::ofstream out(report);
    out << text;
  }
  const auto tampered = run_cli("check " + report);
  CHECK(tampered.exit_code == 1);
  CHECK(tampered.output.find("mismatch") != std::string::npos);
  std::remove(report.c_str());
}

TEST_CASE("bounds reports also round-trip through check") {
  const std::string report = temp_path(".json");
  const auto r = run_cli("--out " + report +
                         " bounds --scheme trap --base five --levels 1 --p 0.01 --refined");
  REQUIRE(r.exit_code == 0);
  const auto check = run_cli("check " + report);
  CHECK(check.exit_code == 0);
  CHECK(check.output.find("0 mismatched") != std::string::npos);
  std::remove(report.c_str());
}

TEST_CASE("identical seeds give byte-identical reports") {
  const std::string a = temp_path(".csv");
  const std::string b = temp_path(".csv");
  const std::string args =
      " simulate-security --scheme threshold --inner five --levels 1 --alpha 0.3 "
      "--attack-weight 4 --trials 20000 --seed 99";
  REQUIRE(run_cli("--out " + a + args).exit_code == 0);
  REQUIRE(run_cli("--out " + b + args).exit_code == 0);
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK(sa.str().find("threshold,five") != std::string::npos);
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("format both writes a CSV and a JSON mirror that validates") {
  const std::string base = temp_path("");
  const auto r = run_cli("--out " + base +
                         " --format both sweep --scheme trap --inner five --levels 1 "
                         "--range 1:4 --trials 5000 --seed 17");
  REQUIRE(r.exit_code == 0);
  std::ifstream csv(base + ".csv");
  REQUIRE(csv.good());
  std::string header;
  std::getline(csv, header);
  CHECK(header ==
        "scheme,base,M,L,p,alpha,attack_w,trials,failures,point,ci_low,ci_high,"
        "bound_value,bound_name,seed");
  int rows = 0;
  for (std::string line; std::getline(csv, line);) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 4);

  const auto check = run_cli("check " + base + ".json");
  CHECK(check.exit_code == 0);
  CHECK(check.output.find("0 mismatched") != std::string::npos);
  std::remove((base + ".csv").c_str());
  std::remove((base + ".json").c_str());
}

TEST_CASE("config files provide defaults that flags override") {
  const std::string config = temp_path(".ini");
  {
    std::ofstream out(config);
    out << "[simulate-security]\n"
        << "scheme = trap\n"
        << "inner = five\n"
        << "inner-levels = 1\n"
        << "attack-weight = 1\n"
        << "trials = 5000\n"
        << "seed = 11\n";
  }
  const auto from_config = run_cli("--config " + config + " simulate-security");
  CHECK(from_config.exit_code == 0);
  CHECK(from_config.output.find(",1,5000,0,") != std::string::npos);

  // A flag overrides the configured trial count.
  const auto overridden =
      run_cli("--config " + config + " simulate-security --trials 2000");
  CHECK(overridden.exit_code == 0);
  CHECK(overridden.output.find(",1,2000,0,") != std::string::npos);
  std::remove(config.c_str());
}

TEST_CASE("invalid parameters exit nonzero and name the violated precondition") {
  const auto bad_alpha =
      run_cli("bounds --scheme threshold --base five --levels 2 --alpha 0.2");
  CHECK(bad_alpha.exit_code == 2);
  CHECK(bad_alpha.output.find("alpha") != std::string::npos);

  const auto bad_code = run_cli("bounds --scheme trap --base shor --levels 1");
  CHECK(bad_code.exit_code == 2);
  CHECK(bad_code.output.find("shor") != std::string::npos);

  const auto bad_pattern = run_cli(
      "simulate-security --scheme trap --inner five --levels 1 --attack-pattern XQ "
      "--trials 10");
  CHECK(bad_pattern.exit_code == 2);
}

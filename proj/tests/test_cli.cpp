#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "qcfd/cli.hpp"
#include "qcfd/errors.hpp"
#include "qcfd/problem_json.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qcfd");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = qcfd::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const char* kProblem41 = R"({
  "alpha": 1.5,
  "t_final": 1.0,
  "initial": [{"power": 3, "power_alpha": 1}],
  "exact": [{"power": 3, "power_alpha": 1, "time_rate": -1}],
  "right_bc": [{"time_rate": -1}],
  "source": [
    {"coeff": -1, "power": 3, "power_alpha": 1, "time_rate": -1},
    {"coeff": -1, "power": 3, "power_alpha": 1, "time_rate": -1, "derivative": true}
  ]
})";

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("scheme subcommand") {
  const Run r = run({"scheme", "--label", "4", "--alpha", "1.5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("order 2") != std::string::npos);
  CHECK(r.out.find("symmetric_c: yes") != std::string::npos);
  CHECK(r.out.find("e_1 = ") != std::string::npos);
  CHECK(r.out.find("e_7 = ") != std::string::npos);

  const Run f = run({"scheme", "--label", "(1,2)+(1,8)", "--alpha", "1.3"});
  CHECK(f.code == 0);
  CHECK(f.out.find("order 4") != std::string::npos);
  CHECK(run({"scheme", "--label", "(2,5)", "--alpha", "1.5"}).code == 2);
  CHECK(run({"scheme", "--label", "4", "--alpha", "2.5"}).code == 2);
}

TEST_CASE("stability subcommand") {
  const Run r = run({"stability", "--label", "(1,2)+(1,4)", "--alpha", "1.5", "--n", "100"});
  CHECK(r.code == 0);
  CHECK(r.out.find("label,alpha,N,tau,tau_over_halpha,f_max,rho,iterations,converged,verdict\n") == 0);
  CHECK(r.out.find("verdict: unstable") != std::string::npos);

  const Run s = run({"stability", "--label", "4", "--alpha", "1.5", "--n", "50", "--tau-rule", "h/10,h"});
  CHECK(s.code == 0);
  CHECK(s.out.find("verdict: stable") != std::string::npos);
  CHECK(run({"stability", "--label", "4", "--alpha", "1.5", "--n", "50", "--tau-rule", "bogus"}).code == 2);
}

TEST_CASE("converge subcommand") {
  const std::vector<std::string> args = {"converge", "--example", "4.1", "--label", "3",
                                         "--alpha", "1.5", "--grids", "8,16,32"};
  const Run a = run(args);
  CHECK(a.code == 0);
  CHECK(a.out.find("N,error,rate\n") != std::string::npos);
  CHECK(a.out.find("\n32,") != std::string::npos);
  std::vector<std::string> serial = args;
  serial.push_back("--serial");
  CHECK(run(serial).out == a.out);
  CHECK(run(args).out == a.out);

  const std::string path = (std::filesystem::temp_directory_path() / "qcfd_converge.csv").string();
  std::vector<std::string> to_file = args;
  to_file.insert(to_file.end(), {"--out", path});
  CHECK(run(to_file).out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == a.out);

  CHECK(run({"converge", "--example", "4.1", "--label", "3", "--alpha", "1.5", "--grids", "8,12"}).code == 2);
  CHECK(run({"converge", "--example", "4.3", "--label", "3", "--alpha", "1.5", "--grids", "8"}).code == 2);
}

TEST_CASE("solve subcommand and problem files") {
  const Run builtin = run({"solve", "--example", "4.1", "--label", "4", "--alpha", "1.5", "--n", "16"});
  CHECK(builtin.code == 0);
  CHECK(builtin.out.find("x,value\n") == 0);

  const std::string path = write_temp("qcfd_problem41.json", kProblem41);
  const Run file = run({"solve", "--problem", path, "--label", "4", "--n", "16"});
  CHECK(file.code == 0);
  CHECK(file.out == builtin.out);

  const Run twod = run({"solve", "--example", "4.3", "--label", "4", "--alpha", "1.5", "--n", "8"});
  CHECK(twod.code == 0);
  CHECK(twod.out.find("x,y,value\n") == 0);

  CHECK(run({"solve", "--label", "4", "--n", "16"}).code == 2);
  const std::string bad = write_temp("qcfd_bad.json", R"({"alpha": 1.5, "sources": []})");
  CHECK(run({"solve", "--problem", bad, "--label", "4"}).code == 2);
}

TEST_CASE("problem file parsing") {
  const qcfd::ProblemFile f = qcfd::parse_problem_json(kProblem41);
  CHECK(f.problem.alpha == 1.5);
  CHECK(f.problem.source.size() == 2);
  CHECK(f.problem.source[1].derivative);
  CHECK(f.correction == -1);
  CHECK_THROWS_AS(qcfd::parse_problem_json("{"), qcfd::ConfigurationError);
  CHECK_THROWS_AS(qcfd::parse_problem_json(R"({"alpha": 1.5, "initial": [], "source": [{"anchor": "up"}]})"),
                  qcfd::ConfigurationError);
  CHECK_THROWS_AS(qcfd::parse_problem_json(R"({"initial": [], "source": []})"), qcfd::ConfigurationError);
  CHECK_THROWS_AS(
      qcfd::parse_problem_json(R"({"alpha": 1.5, "initial": [], "source": [], "correction": -2})"),
      qcfd::ConfigurationError);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("converge") != std::string::npos);
  CHECK(run({"scheme", "--alpha", "1.5"}).code == 2);
  // The installed binary reports the same codes.
  CHECK(std::system(QCFD_CLI_PATH " scheme --label 4 --alpha 1.5 > /dev/null") == 0);
  CHECK(WEXITSTATUS(std::system(QCFD_CLI_PATH " frobnicate > /dev/null 2>&1")) == 2);
}

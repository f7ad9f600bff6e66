// Drives the installed binary through every subcommand and checks exit codes,
// JSON fields and output determinism. argv[1] is the binary path.

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

int g_failures = 0;

void expect(bool cond, const std::string& what) {
  if (cond) {
    std::printf("[PASS] %s\n", what.c_str());
  } else {
    std::printf("[FAIL] %s\n", what.c_str());
    ++g_failures;
  }
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run(const std::string& binary, const std::string& args) {
  const std::string err_path = "cli_e2e_stderr.txt";
  const std::string cmd = binary + " " + args + " 2>" + err_path;
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) r.out += buf.data();
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream err_in(err_path);
  std::ostringstream ss;
  ss << err_in.rdbuf();
  r.err = ss.str();
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_e2e <binary>\n");
    return 2;
  }
  const std::string bin = argv[1];
  constexpr double kPi = std::numbers::pi;

  {
    const RunResult r = run(bin, "eigen --a 0 --b 3.14159265358979 --n 2001");
    expect(r.exit_code == 0, "eigen exits 0");
    const json j = json::parse(r.out);
    expect(std::abs(j["lambda1"].get<double>() - 1.0) <= 1e-5, "eigen lambda1 ~ 1");
    expect(j["n"] == 2001, "eigen reports n");
  }

  {
    const RunResult r = run(bin, "torsion --a 0 --b 3.141592653589793 --n 4001 --out e.csv");
    expect(r.exit_code == 0, "torsion exits 0");
    const json j = json::parse(r.out);
    expect(std::abs(j["sup_e"].get<double>() - kPi * kPi / 8.0) <= 1e-10,
           "torsion sup equals pi^2/8");
    const std::string csv = slurp("e.csv");
    expect(csv.rfind("x,value\n", 0) == 0, "torsion CSV has the x,value header");
  }

  {
    const RunResult r =
        run(bin, "counterexample verify --a 1 --b 10000 --c 0 --p 3 --rho 0.405");
    expect(r.exit_code == 0, "counterexample verify (case 1 witness) exits 0");
    const json j = json::parse(r.out);
    expect(j["valid"] == true, "witness is valid");
    expect(std::abs(j["condi_margin"].get<double>() - 705.886) <= 1.0,
           "witness condi margin ~ 706");
  }

  {
    const RunResult r =
        run(bin, "counterexample verify --a 1 --b 0 --c 0 --p 1 --rho 0.3");
    expect(r.exit_code == 1, "constant M is not a witness: exit 1");
    const json j = json::parse(r.out);
    expect(j["valid"] == false, "constant-M witness flag is false");
  }

  {
    const RunResult r = run(bin, "counterexample search --case 1 --b 1e4 --p-min 1 "
                                 "--p-max 6 --rho-grid 300 --n 2001");
    expect(r.exit_code == 0, "case 1 search exits 0");
    const json j = json::parse(r.out);
    expect(j["scalar_test_min_p"] == 3, "case 1 scalar test min p == 3");
    expect(j["witness"]["p"] == 3.0, "case 1 witness p == 3");
  }

  {
    const RunResult r = run(bin, "counterexample search --case 2 --a 1 --c 1 --rho 0.1 "
                                 "--p-min -8 --p-max -1 --b-grid 500 --n 2001");
    expect(r.exit_code == 0, "case 2 search exits 0");
    const json j = json::parse(r.out);
    expect(j["witness"]["p"] == -2.0, "case 2 witness p == -2");
    const double bt = j["b_threshold"].get<double>();
    expect(bt >= 55.0 && bt <= 70.0, "case 2 b threshold in [55, 70]");
  }

  {
    const RunResult r = run(bin, "solve --model sublinear --lambda -1 --q 0.5");
    expect(r.exit_code == 2, "sublinear with lambda <= 0 exits 2");
    const json j = json::parse(r.err);
    expect(j["error"] == "NoPositiveSolution", "stderr carries NoPositiveSolution");
  }

  {
    write_file("solve_cfg.json", R"({
      "domain": {"a": 0, "b": 3.141592653589793, "n": 2001},
      "M": {"family": "power_shift", "a": 1, "b": 1, "c": 0, "p": 1},
      "model": {"kind": "sublinear", "lambda": 1, "q": 0.5},
      "solver": {"scheme": "picard"}
    })");
    const RunResult r1 = run(bin, "solve --config solve_cfg.json --out sol1.csv");
    expect(r1.exit_code == 0, "config solve exits 0");
    const json j = json::parse(r1.out);
    expect(j["report"]["converged"] == true, "report converged");
    expect(j["report"]["residual_sup"].get<double>() <= 1e-6, "report residual small");
    expect(j["pair_construction"]["feasible"] == true, "construction feasible");

    const RunResult r2 = run(bin, "solve --config solve_cfg.json --out sol2.csv");
    expect(r1.out == r2.out, "identical config gives byte-identical JSON");
    expect(slurp("sol1.csv") == slurp("sol2.csv"), "identical config gives identical CSV");
    expect(slurp("sol1.csv").rfind("x,value\n", 0) == 0, "solution CSV header");
  }

  {
    write_file("verify_cfg.json", R"({
      "domain": {"a": 0, "b": 3.141592653589793, "n": 1001},
      "M": {"family": "power_shift", "a": 1, "b": 1, "c": 0, "p": 1},
      "model": {"kind": "sublinear", "lambda": 1, "q": 0.5}
    })");
    const RunResult r = run(bin, "verify-pair --config verify_cfg.json");
    expect(r.exit_code == 0, "verify-pair (constructed) exits 0");
    const json j = json::parse(r.out);
    expect(j["ok"] == true, "pair report ok");
    expect(j["mu_max"].get<double>() >= j["mu_min"].get<double>(), "mu range ordered");
  }

  {
    // explicit CSV pair violating the order: sin above the shallow parabola
    std::ostringstream lo, hi;
    lo << "x,value\n";
    hi << "x,value\n";
    const int n = 101;
    for (int i = 0; i < n; ++i) {
      const double x = kPi * i / (n - 1);
      char row[96];
      std::snprintf(row, sizeof(row), "%.17g,%.17g\n", x, std::sin(x));
      lo << row;
      std::snprintf(row, sizeof(row), "%.17g,%.17g\n", x, 0.405 * x * (kPi - x));
      hi << row;
    }
    write_file("pair_lo.csv", lo.str());
    write_file("pair_hi.csv", hi.str());
    write_file("verify_bad.json", R"({
      "domain": {"a": 0, "b": 3.141592653589793, "n": 101},
      "model": {"kind": "sublinear", "lambda": 1, "q": 0.5},
      "pair": {"lower_csv": "pair_lo.csv", "upper_csv": "pair_hi.csv"}
    })");
    const RunResult r = run(bin, "verify-pair --config verify_bad.json");
    expect(r.exit_code == 1, "order-violating pair exits 1");
    const json j = json::parse(r.err);
    expect(j["error"] == "OrderViolated", "stderr carries OrderViolated");
  }

  {
    const RunResult r = run(bin, "classify-m --family power_shift --a 1 --b 100 --c 1 --p -2");
    expect(r.exit_code == 0, "classify-m exits 0");
    const json j = json::parse(r.out);
    expect(j["M1"] == true, "decaying family is nonincreasing");
    expect(j["M2"] == false, "decaying family is not nondecreasing");
    expect(j["m0"].get<double>() >= 1.0, "m0 >= a");
  }

  {
    write_file("bad_key.json", R"({"solver": {"tol_stepp": 1e-10}})");
    const RunResult r = run(bin, "solve --config bad_key.json --model sublinear --lambda 1 --q 0.5");
    expect(r.exit_code == 2, "unknown config key exits 2");
    const json j = json::parse(r.err);
    expect(j["error"] == "InvalidConfig", "stderr carries InvalidConfig");
  }

  {
    write_file("one_iter.json", R"({
      "domain": {"a": 0, "b": 3.141592653589793, "n": 501},
      "M": {"family": "power_shift", "a": 1, "b": 1, "c": 0, "p": 1},
      "model": {"kind": "sublinear", "lambda": 1, "q": 0.5},
      "solver": {"max_iter": 1}
    })");
    const RunResult r = run(bin, "solve --config one_iter.json");
    expect(r.exit_code == 3, "max_iter exhaustion exits 3");
    const json rep = json::parse(r.out);
    expect(rep["report"]["converged"] == false, "non-converged report still emitted");
    expect(r.err.find("NoConvergence") != std::string::npos,
           "stderr mentions NoConvergence");
    expect(r.err.find("shifted") != std::string::npos,
           "failure diagnostic suggests the shifted scheme");
  }

  {
    const RunResult quiet = run(bin, "torsion --a 0 --b 1 --n 101");
    expect(quiet.err.find("info:") == std::string::npos, "default log level is quiet");
    const RunResult info =
        run("KIRCHHOFF_LOG=info " + bin, "solve --model sublinear --lambda 1 --q 0.5");
    expect(info.err.find("info:") != std::string::npos,
           "KIRCHHOFF_LOG=info writes progress lines to stderr");
    const RunResult quiet2 = run(bin, "solve --model sublinear --lambda 1 --q 0.5");
    expect(info.out == quiet2.out, "log level never changes report content");
  }

  {
    const RunResult r = run(bin, "frobnicate");
    expect(r.exit_code == 2, "unknown subcommand exits 2");
  }

  if (g_failures > 0) {
    std::printf("%d CLI checks failed\n", g_failures);
    return 1;
  }
  std::printf("all CLI checks passed\n");
  return 0;
}

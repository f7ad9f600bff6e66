#pragma once

#include <string>

#include "kirchhoff/errors.hpp"
#include "kirchhoff/solver.hpp"

namespace kirchhoff::cli {

struct DomainConfig {
  double a = 0.0;
  double b = 3.141592653589793;
  int n = 2001;
};

struct MConfig {
  std::string family = "power_shift";
  double a = 1.0, b = 1.0, c = 0.0, p = 1.0;  // default M(t) = 1 + t
  double m = 1.0;                             // constant family value
  double scan_max = 1e6;
};

struct ModelConfig {
  bool present = false;
  std::string kind;
  double lambda = 0.0, q = 0.0, p = 0.0;
};

struct OutputConfig {
  std::string path;
  std::string format = "csv";
};

struct PairFilesConfig {
  bool present = false;
  std::string lower_csv, upper_csv;
};

struct RunConfig {
  DomainConfig domain;
  MConfig M;
  ModelConfig model;
  SolveConfig solver;
  OutputConfig output;
  PairFilesConfig pair;
};

/// Strict parse: unknown keys anywhere are rejected with a path-qualified
/// message; every referenced invariant is validated here.
RunConfig parse_run_config(const std::string& json_text);

KirchhoffM make_kirchhoff_m(const MConfig& cfg);

/// 0 success/verified, 1 verification-or-witness failure, 2 invalid input,
/// 3 numerical non-convergence.
int exit_code_for(ErrorCode code);

/// Subcommand dispatch; prints reports on stdout and a single-line JSON
/// diagnostic on stderr for errors. KIRCHHOFF_LOG=quiet|info|debug controls
/// stderr verbosity only.
int dispatch(int argc, const char* const* argv);

}  // namespace kirchhoff::cli

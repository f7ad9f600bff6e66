#include "kirchhoff/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "kirchhoff/counterexamples.hpp"
#include "kirchhoff/models.hpp"
#include "kirchhoff/spectral.hpp"

namespace kirchhoff::cli {

namespace {

using nlohmann::json;

int log_level() {
  const char* env = std::getenv("KIRCHHOFF_LOG");
  if (env == nullptr) return 0;
  if (std::strcmp(env, "debug") == 0) return 2;
  if (std::strcmp(env, "info") == 0) return 1;
  return 0;
}

void log_info(const std::string& line) {
  if (log_level() >= 1) std::cerr << "info: " << line << "\n";
}

// ---- deterministic JSON emission: fixed key order, 17 significant digits

std::string jnum(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string jstr(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

std::string jbool(bool b) { return b ? "true" : "false"; }

std::string domain_json(const Interval& d) {
  return "{\"a\":" + jnum(d.a) + ",\"b\":" + jnum(d.b) +
         ",\"n\":" + std::to_string(d.n) + "}";
}

std::string solve_report_json(const SolveReport& rep) {
  return "{\"converged\":" + jbool(rep.converged) +
         ",\"iterations\":" + std::to_string(rep.iterations) +
         ",\"r_value\":" + jnum(rep.r_value) + ",\"mu\":" + jnum(rep.mu) +
         ",\"residual_sup\":" + jnum(rep.residual_sup) +
         ",\"self_consistency_gap\":" + jnum(rep.self_consistency_gap) +
         ",\"in_interval\":" + jbool(rep.in_interval) +
         ",\"domain\":" + domain_json(rep.u.domain) + "}";
}

std::string pair_construction_json(const PairConstruction& pc) {
  std::string t = "{";
  if (pc.threshold_info.k_threshold) {
    t += "\"k_threshold\":" + jnum(*pc.threshold_info.k_threshold);
  }
  if (pc.threshold_info.lambda0) {
    if (t.size() > 1) t += ",";
    t += "\"lambda0\":" + jnum(*pc.threshold_info.lambda0);
  }
  if (pc.threshold_info.lambda1_m_inf) {
    if (t.size() > 1) t += ",";
    t += "\"lambda1_m_inf\":" + jnum(*pc.threshold_info.lambda1_m_inf);
  }
  t += "}";
  return "{\"model\":" + jstr(pc.f.kind_name()) +
         ",\"epsilon\":" + jnum(pc.epsilon) + ",\"K\":" + jnum(pc.K) +
         ",\"mu_max_used\":" + jnum(pc.mu_max_used) +
         ",\"feasible\":" + jbool(pc.feasible) +
         ",\"lambda1\":" + jnum(pc.eigen.lambda1) + ",\"threshold_info\":" + t + "}";
}

std::string pair_report_json(const PairReport& rep) {
  return "{\"ok\":" + jbool(rep.ok) + ",\"mu_min\":" + jnum(rep.m_range.mu_min) +
         ",\"mu_max\":" + jnum(rep.m_range.mu_max) +
         ",\"s_min\":" + jnum(rep.m_range.s_min) +
         ",\"s_max\":" + jnum(rep.m_range.s_max) +
         ",\"worst_super_margin\":" + jnum(rep.worst_super_margin) +
         ",\"worst_sub_margin\":" + jnum(rep.worst_sub_margin) +
         ",\"worst_nodes\":[" + std::to_string(rep.worst_super_node) + "," +
         std::to_string(rep.worst_sub_node) + "]}";
}

std::string witness_json(const CounterexampleWitness& w) {
  return "{\"a\":" + jnum(w.a) + ",\"b\":" + jnum(w.b) + ",\"c\":" + jnum(w.c) +
         ",\"p\":" + jnum(w.p) + ",\"rho\":" + jnum(w.rho) +
         ",\"condi_lhs\":" + jnum(w.condi_lhs) +
         ",\"condi_rhs\":" + jnum(w.condi_rhs) +
         ",\"condi_margin\":" + jnum(w.condi_margin) +
         ",\"order_violation_gap\":" + jnum(w.order_violation_gap) +
         ",\"order_violation_x\":" + jnum(w.order_violation_x) +
         ",\"pointwise_ok\":" + jbool(w.pointwise_ok) +
         ",\"min_pointwise_margin\":" + jnum(w.min_pointwise_margin) +
         ",\"valid\":" + jbool(w.valid() && w.pointwise_ok) + "}";
}

std::string classification_json(const KirchhoffM& m) {
  const Classification& c = m.classification();
  return "{\"family\":" + jstr(m.family_name()) + ",\"m0\":" + jnum(c.m0) +
         ",\"M0\":" + jbool(c.m0_positive) + ",\"M1\":" + jbool(c.m1_nonincreasing) +
         ",\"M2\":" + jbool(c.m2_nondecreasing) +
         ",\"M2_strict\":" + jbool(c.m2_strictly_increasing) +
         ",\"M3\":" + jbool(c.m3_invertible) +
         ",\"G_direction\":" + std::to_string(c.g_direction) +
         ",\"H_increasing\":" + jbool(c.h_increasing) +
         ",\"scan_max\":" + jnum(m.scan_max()) + "}";
}

// ---- strict config parsing

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      raise(ErrorCode::invalid_config,
            "config key not recognized: " + path + item.key());
    }
  }
}

double get_num(const json& obj, const std::string& path, const char* key,
               double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) {
    raise(ErrorCode::invalid_config, path + key + ": expected a number");
  }
  return obj[key].get<double>();
}

std::string get_str(const json& obj, const std::string& path, const char* key,
                    const std::string& fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_string()) {
    raise(ErrorCode::invalid_config, path + key + ": expected a string");
  }
  return obj[key].get<std::string>();
}

Scheme parse_scheme(const std::string& name) {
  if (name == "monotone_from_below") return Scheme::monotone_from_below;
  if (name == "monotone_from_above") return Scheme::monotone_from_above;
  if (name == "picard") return Scheme::picard;
  if (name == "shifted") return Scheme::shifted;
  raise(ErrorCode::invalid_config, "solver.scheme: unknown scheme '" + name + "'");
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const std::exception& ex) {
    raise(ErrorCode::invalid_config, std::string("config is not valid JSON: ") + ex.what());
  }
  if (!root.is_object()) raise(ErrorCode::invalid_config, "config must be a JSON object");
  check_keys(root, "", {"domain", "M", "model", "solver", "output", "pair"});

  RunConfig cfg;
  if (root.contains("domain")) {
    const json& d = root["domain"];
    check_keys(d, "domain.", {"a", "b", "n"});
    cfg.domain.a = get_num(d, "domain.", "a", cfg.domain.a);
    cfg.domain.b = get_num(d, "domain.", "b", cfg.domain.b);
    const double n = get_num(d, "domain.", "n", cfg.domain.n);
    if (n != std::floor(n) || n < 3) {
      raise(ErrorCode::invalid_config, "domain.n: must be an integer >= 3");
    }
    cfg.domain.n = static_cast<int>(n);
    if (!(cfg.domain.b > cfg.domain.a)) {
      raise(ErrorCode::invalid_config, "domain: requires b > a");
    }
  }
  if (root.contains("M")) {
    const json& mj = root["M"];
    check_keys(mj, "M.", {"family", "a", "b", "c", "p", "m", "scan_max"});
    cfg.M.family = get_str(mj, "M.", "family", cfg.M.family);
    if (cfg.M.family != "power_shift" && cfg.M.family != "constant") {
      raise(ErrorCode::invalid_config, "M.family: must be 'power_shift' or 'constant'");
    }
    cfg.M.a = get_num(mj, "M.", "a", cfg.M.a);
    cfg.M.b = get_num(mj, "M.", "b", cfg.M.b);
    cfg.M.c = get_num(mj, "M.", "c", cfg.M.c);
    cfg.M.p = get_num(mj, "M.", "p", cfg.M.p);
    cfg.M.m = get_num(mj, "M.", "m", cfg.M.m);
    cfg.M.scan_max = get_num(mj, "M.", "scan_max", cfg.M.scan_max);
  }
  if (root.contains("model")) {
    const json& mo = root["model"];
    check_keys(mo, "model.", {"kind", "lambda", "q", "p"});
    cfg.model.present = true;
    cfg.model.kind = get_str(mo, "model.", "kind", "");
    if (cfg.model.kind != "sublinear" && cfg.model.kind != "concave_convex" &&
        cfg.model.kind != "logistic") {
      raise(ErrorCode::invalid_config,
            "model.kind: must be sublinear | concave_convex | logistic");
    }
    cfg.model.lambda = get_num(mo, "model.", "lambda", 0.0);
    cfg.model.q = get_num(mo, "model.", "q", 0.0);
    cfg.model.p = get_num(mo, "model.", "p", 0.0);
  }
  if (root.contains("solver")) {
    const json& s = root["solver"];
    check_keys(s, "solver.", {"tol_step", "tol_residual", "max_iter", "scheme", "shift_c"});
    cfg.solver.tol_step = get_num(s, "solver.", "tol_step", cfg.solver.tol_step);
    cfg.solver.tol_residual = get_num(s, "solver.", "tol_residual", cfg.solver.tol_residual);
    const double mi = get_num(s, "solver.", "max_iter", cfg.solver.max_iter);
    if (mi != std::floor(mi) || mi < 1) {
      raise(ErrorCode::invalid_config, "solver.max_iter: must be an integer >= 1");
    }
    cfg.solver.max_iter = static_cast<int>(mi);
    cfg.solver.scheme = parse_scheme(get_str(s, "solver.", "scheme", "picard"));
    cfg.solver.shift_c = get_num(s, "solver.", "shift_c", cfg.solver.shift_c);
    cfg.solver.validate();
  }
  if (root.contains("output")) {
    const json& o = root["output"];
    check_keys(o, "output.", {"path", "format"});
    cfg.output.path = get_str(o, "output.", "path", "");
    cfg.output.format = get_str(o, "output.", "format", "csv");
    if (cfg.output.format != "csv" && cfg.output.format != "json") {
      raise(ErrorCode::invalid_config, "output.format: must be 'csv' or 'json'");
    }
  }
  if (root.contains("pair")) {
    const json& pr = root["pair"];
    check_keys(pr, "pair.", {"lower_csv", "upper_csv"});
    cfg.pair.present = true;
    cfg.pair.lower_csv = get_str(pr, "pair.", "lower_csv", "");
    cfg.pair.upper_csv = get_str(pr, "pair.", "upper_csv", "");
    if (cfg.pair.lower_csv.empty() || cfg.pair.upper_csv.empty()) {
      raise(ErrorCode::invalid_config, "pair: both lower_csv and upper_csv are required");
    }
  }
  return cfg;
}

KirchhoffM make_kirchhoff_m(const MConfig& cfg) {
  if (cfg.family == "constant") return KirchhoffM::constant(cfg.m, cfg.scan_max);
  return KirchhoffM::power_shift(cfg.a, cfg.b, cfg.c, cfg.p, cfg.scan_max);
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::order_violated:
    case ErrorCode::boundary_violated:
    case ErrorCode::not_verified:
    case ErrorCode::no_witness:
      return 1;
    case ErrorCode::no_convergence:
    case ErrorCode::out_of_range:
    case ErrorCode::non_monotone:
    case ErrorCode::negative_mass:
      return 3;
    default:
      return 2;
  }
}

namespace {

RunConfig load_config(const std::string& path) {
  if (path.empty()) return RunConfig{};
  std::ifstream in(path);
  if (!in) raise(ErrorCode::invalid_config, "cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str());
}

void write_solution_csv(const std::string& path, const GridFunction& u) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) raise(ErrorCode::invalid_config, "cannot open output file: " + path);
  write_csv(out, u);
  log_info("wrote " + path);
}

PairConstruction build_model_pair(const RunConfig& cfg, const KirchhoffM& m,
                                  const Interval& domain) {
  const ModelConfig& mo = cfg.model;
  if (mo.kind == "sublinear") return build_pair_sublinear(mo.lambda, mo.q, m, domain);
  if (mo.kind == "concave_convex") {
    return build_pair_concave_convex(mo.lambda, mo.q, mo.p, m, domain);
  }
  return build_pair_logistic(mo.lambda, mo.p, m, domain);
}

int run_solve(const RunConfig& cfg, const std::string& out_flag) {
  if (!cfg.model.present) {
    raise(ErrorCode::invalid_config, "solve requires a model (config or --model)");
  }
  const Interval domain = make_interval(cfg.domain.a, cfg.domain.b, cfg.domain.n);
  const KirchhoffM m = make_kirchhoff_m(cfg.M);
  log_info("building " + cfg.model.kind + " pair on (" + std::to_string(domain.a) +
           ", " + std::to_string(domain.b) + "), n = " + std::to_string(domain.n));
  const PairConstruction pc = build_model_pair(cfg, m, domain);
  const SolveReport rep = solve_in_interval(pc.pair, m, pc.f, cfg.solver);
  const std::string out_path = !out_flag.empty() ? out_flag : cfg.output.path;
  write_solution_csv(out_path, rep.u);
  std::cout << "{\"pair_construction\":" << pair_construction_json(pc)
            << ",\"report\":" << solve_report_json(rep) << "}\n";
  if (!rep.converged) {
    std::cerr << "{\"error\":\"NoConvergence\",\"message\":\"fixed-point iteration "
                 "stopped at max_iter or residual/interval check failed; the "
                 "shifted scheme often helps\"}\n";
    return 3;
  }
  return 0;
}

int run_verify_pair(const RunConfig& cfg) {
  const Interval domain = make_interval(cfg.domain.a, cfg.domain.b, cfg.domain.n);
  const KirchhoffM m = make_kirchhoff_m(cfg.M);
  if (!cfg.model.present) {
    raise(ErrorCode::invalid_config, "verify-pair requires a model for the reaction term");
  }

  OrderInterval pair;
  Nonlinearity f = Nonlinearity::sublinear(1.0, 0.5);
  if (cfg.pair.present) {
    std::ifstream lo(cfg.pair.lower_csv), hi(cfg.pair.upper_csv);
    if (!lo) raise(ErrorCode::invalid_config, "cannot open " + cfg.pair.lower_csv);
    if (!hi) raise(ErrorCode::invalid_config, "cannot open " + cfg.pair.upper_csv);
    pair.lower = read_csv(lo);
    pair.upper = read_csv(hi);
    const ModelConfig& mo = cfg.model;
    if (mo.kind == "sublinear") {
      f = Nonlinearity::sublinear(mo.lambda, mo.q);
    } else if (mo.kind == "concave_convex") {
      f = Nonlinearity::concave_convex(mo.lambda, mo.q, mo.p);
    } else {
      f = Nonlinearity::logistic(mo.lambda, mo.p);
    }
  } else {
    const PairConstruction pc = build_model_pair(cfg, m, domain);
    pair = pc.pair;
    f = pc.f;
  }
  const PairReport rep = verify_pair(pair, m, f);
  std::cout << pair_report_json(rep) << "\n";
  return rep.ok ? 0 : 1;
}

int run_counterexample_verify(double a, double b, double c, double p, double rho,
                              int n) {
  const KirchhoffM m = b > 0.0 ? KirchhoffM::power_shift(a, b, c, p)
                               : KirchhoffM::constant(a);
  const CounterexampleWitness w = pointwise_verify(m, rho, n);
  std::cout << witness_json(w) << "\n";
  return (w.valid() && w.pointwise_ok) ? 0 : 1;
}

}  // namespace

int dispatch(int argc, const char* const* argv) {
  CLI::App app{"1D finite-difference toolkit for nonlocal Kirchhoff problems"};
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "build a verified pair and solve inside it");
  std::string solve_config, solve_model, solve_out;
  double flag_lambda = std::nan(""), flag_q = std::nan(""), flag_p = std::nan("");
  solve_cmd->add_option("--config", solve_config, "JSON config path");
  solve_cmd->add_option("--model", solve_model, "sublinear | concave-convex | logistic");
  solve_cmd->add_option("--lambda", flag_lambda, "model coefficient");
  solve_cmd->add_option("--q", flag_q, "concave exponent");
  solve_cmd->add_option("--p", flag_p, "convex/decay exponent");
  solve_cmd->add_option("--out", solve_out, "solution CSV path");

  // verify-pair
  auto* verify_cmd = app.add_subcommand("verify-pair", "check the two differential inequalities");
  std::string verify_config;
  verify_cmd->add_option("--config", verify_config, "JSON config path")->required();

  // counterexample
  auto* ce_cmd = app.add_subcommand("counterexample", "comparison-principle stress tests");
  ce_cmd->require_subcommand(1);
  auto* ce_verify = ce_cmd->add_subcommand("verify", "check one parameter tuple");
  double ce_a = 1.0, ce_b = 1.0, ce_c = 0.0, ce_p = 1.0, ce_rho = 0.1;
  int ce_n = 4001;
  ce_verify->add_option("--a", ce_a, "family offset")->required();
  ce_verify->add_option("--b", ce_b, "family coefficient (0 selects constant M = a)")->required();
  ce_verify->add_option("--c", ce_c, "family shift")->required();
  ce_verify->add_option("--p", ce_p, "family exponent")->required();
  ce_verify->add_option("--rho", ce_rho, "parabola amplitude")->required();
  ce_verify->add_option("--n", ce_n, "grid nodes");

  auto* ce_search = ce_cmd->add_subcommand("search", "scan for the least-parameter witness");
  int ce_case = 1;
  double s_b = 1e4, s_a = 1.0, s_c = 1.0, s_rho = 0.1;
  int s_pmin = 1, s_pmax = 6, s_rho_grid = 1000, s_b_grid = 1000;
  ce_search->add_option("--case", ce_case, "1 (increasing M) or 2 (decreasing M)")->required();
  ce_search->add_option("--b", s_b, "case 1: fixed family coefficient");
  ce_search->add_option("--a", s_a, "case 2: family offset");
  ce_search->add_option("--c", s_c, "case 2: family shift");
  ce_search->add_option("--rho", s_rho, "case 2: fixed parabola amplitude");
  ce_search->add_option("--p-min", s_pmin, "least exponent scanned");
  ce_search->add_option("--p-max", s_pmax, "greatest exponent scanned");
  ce_search->add_option("--rho-grid", s_rho_grid, "case 1: rho grid points");
  ce_search->add_option("--b-grid", s_b_grid, "case 2: log-grid points for b");
  ce_search->add_option("--n", ce_n, "grid nodes");

  // eigen / torsion
  auto* eigen_cmd = app.add_subcommand("eigen", "principal Dirichlet eigenpair");
  double ea = 0.0, eb = 3.141592653589793, etol = 1e-12;
  int en = 2001;
  std::string eigen_out;
  eigen_cmd->add_option("--a", ea, "left endpoint")->required();
  eigen_cmd->add_option("--b", eb, "right endpoint")->required();
  eigen_cmd->add_option("--n", en, "grid nodes")->required();
  eigen_cmd->add_option("--tol", etol, "Rayleigh quotient tolerance");
  eigen_cmd->add_option("--out", eigen_out, "eigenfunction CSV path");

  auto* torsion_cmd = app.add_subcommand("torsion", "solution of -Δe = 1, e = 0 on the boundary");
  double ta = 0.0, tb = 3.141592653589793;
  int tn = 2001;
  std::string torsion_out;
  torsion_cmd->add_option("--a", ta, "left endpoint")->required();
  torsion_cmd->add_option("--b", tb, "right endpoint")->required();
  torsion_cmd->add_option("--n", tn, "grid nodes")->required();
  torsion_cmd->add_option("--out", torsion_out, "torsion CSV path");

  // classify-m
  auto* classify_cmd = app.add_subcommand("classify-m", "scan M, G, H monotonicity and bounds");
  std::string cls_config, cls_family = "power_shift";
  double cls_a = 1.0, cls_b = 1.0, cls_c = 0.0, cls_p = 1.0, cls_m = 1.0,
         cls_scan = 1e6;
  classify_cmd->add_option("--config", cls_config, "JSON config path (uses its M section)");
  classify_cmd->add_option("--family", cls_family, "power_shift | constant");
  classify_cmd->add_option("--a", cls_a, "offset");
  classify_cmd->add_option("--b", cls_b, "coefficient");
  classify_cmd->add_option("--c", cls_c, "shift");
  classify_cmd->add_option("--p", cls_p, "exponent");
  classify_cmd->add_option("--m", cls_m, "constant value");
  classify_cmd->add_option("--scan-max", cls_scan, "scan range upper bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help();
      return 0;
    }
    std::cerr << "{\"error\":\"InvalidConfig\",\"message\":" << jstr(e.what()) << "}\n";
    return 2;
  }

  try {
    if (solve_cmd->parsed()) {
      RunConfig cfg = load_config(solve_config);
      if (!solve_model.empty()) {
        cfg.model.present = true;
        cfg.model.kind = solve_model == "concave-convex" ? "concave_convex" : solve_model;
        if (cfg.model.kind != "sublinear" && cfg.model.kind != "concave_convex" &&
            cfg.model.kind != "logistic") {
          raise(ErrorCode::invalid_config, "--model: unknown model '" + solve_model + "'");
        }
      }
      if (!std::isnan(flag_lambda)) cfg.model.lambda = flag_lambda;
      if (!std::isnan(flag_q)) cfg.model.q = flag_q;
      if (!std::isnan(flag_p)) cfg.model.p = flag_p;
      return run_solve(cfg, solve_out);
    }
    if (verify_cmd->parsed()) {
      return run_verify_pair(load_config(verify_config));
    }
    if (ce_verify->parsed()) {
      return run_counterexample_verify(ce_a, ce_b, ce_c, ce_p, ce_rho, ce_n);
    }
    if (ce_search->parsed()) {
      if (ce_case == 1) {
        const Case1SearchResult r = search_case1(s_b, s_pmin, s_pmax, s_rho_grid, s_a, ce_n);
        std::cout << "{\"witness\":" << witness_json(r.witness)
                  << ",\"scalar_test_min_p\":" << r.scalar_test_min_p << "}\n";
        return 0;
      }
      if (ce_case == 2) {
        const Case2SearchResult r =
            search_case2(s_a, s_c, s_rho, s_pmin, s_pmax, s_b_grid, ce_n);
        std::cout << "{\"witness\":" << witness_json(r.witness)
                  << ",\"b_threshold\":" << jnum(r.b_threshold) << "}\n";
        return 0;
      }
      raise(ErrorCode::invalid_config, "--case must be 1 or 2");
    }
    if (eigen_cmd->parsed()) {
      const Interval domain = make_interval(ea, eb, en);
      const EigenPair ep = principal_eigenpair(domain, etol);
      if (!eigen_out.empty()) {
        std::ofstream out(eigen_out);
        if (!out) raise(ErrorCode::invalid_config, "cannot open " + eigen_out);
        write_csv(out, ep.phi1);
      }
      std::cout << "{\"lambda1\":" << jnum(ep.lambda1) << ",\"n\":" << domain.n
                << ",\"domain\":" << domain_json(domain)
                << ",\"iterations\":" << ep.iterations << "}\n";
      return 0;
    }
    if (torsion_cmd->parsed()) {
      const Interval domain = make_interval(ta, tb, tn);
      const GridFunction e = torsion(domain);
      if (!torsion_out.empty()) {
        std::ofstream out(torsion_out);
        if (!out) raise(ErrorCode::invalid_config, "cannot open " + torsion_out);
        write_csv(out, e);
      }
      std::cout << "{\"sup_e\":" << jnum(e.max_value()) << ",\"n\":" << domain.n
                << ",\"domain\":" << domain_json(domain) << "}\n";
      return 0;
    }
    if (classify_cmd->parsed()) {
      KirchhoffM m = KirchhoffM::constant(1.0);
      if (!cls_config.empty()) {
        m = make_kirchhoff_m(load_config(cls_config).M);
      } else if (cls_family == "constant") {
        m = KirchhoffM::constant(cls_m, cls_scan);
      } else if (cls_family == "power_shift") {
        m = KirchhoffM::power_shift(cls_a, cls_b, cls_c, cls_p, cls_scan);
      } else {
        raise(ErrorCode::invalid_config, "--family: must be power_shift or constant");
      }
      std::cout << classification_json(m) << "\n";
      return 0;
    }
  } catch (const Error& err) {
    std::cerr << "{\"error\":\"" << err.code_name() << "\",\"message\":"
              << jstr(err.what()) << "}\n";
    return exit_code_for(err.code());
  } catch (const std::exception& ex) {
    std::cerr << "{\"error\":\"Internal\",\"message\":" << jstr(ex.what()) << "}\n";
    return 2;
  }
  return 2;
}

}  // namespace kirchhoff::cli

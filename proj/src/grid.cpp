#include "kirchhoff/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "kirchhoff/kernels.hpp"

namespace kirchhoff {

namespace {

const kernels::KernelOps& ops() { return kernels::active_ops(); }

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void require_same_domain(const GridFunction& u, const GridFunction& v) {
  if (!(u.domain == v.domain)) {
    raise(ErrorCode::domain_mismatch,
          "grid functions live on different intervals");
  }
}

}  // namespace

Interval make_interval(double a, double b, int n) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    raise(ErrorCode::domain_error, "interval endpoints must be finite");
  }
  if (!(b > a)) raise(ErrorCode::domain_error, "interval requires b > a");
  if (n < 3) raise(ErrorCode::domain_error, "interval requires n >= 3 nodes");
  return Interval{a, b, n};
}

double GridFunction::sup_abs() const {
  return ops().sup_abs(values.data(), values.size());
}

double GridFunction::max_value() const {
  double m = -std::numeric_limits<double>::infinity();
  for (double v : values) m = std::max(m, v);
  return m;
}

GridFunction make_grid_function(const Interval& domain, double fill) {
  return GridFunction{domain, std::vector<double>(domain.n, fill)};
}

GridFunction sample(const Interval& domain, const std::function<double(double)>& f) {
  GridFunction u = make_grid_function(domain);
  for (int i = 0; i < domain.n; ++i) u.values[i] = f(domain.node(i));
  return u;
}

void validate(const GridFunction& u) {
  if (u.size() != u.domain.n) {
    raise(ErrorCode::domain_error, "grid function length does not match its interval");
  }
  for (int i = 0; i < u.size(); ++i) {
    if (!std::isfinite(u.values[i])) {
      raise(ErrorCode::domain_error,
            "grid function has a non-finite value at node " + std::to_string(i));
    }
  }
}

GridFunction laplacian(const GridFunction& u) {
  const int n = u.domain.n;
  const double h = u.domain.h();
  GridFunction out = make_grid_function(u.domain, 0.0);
  ops().second_diff_scaled(u.values.data(), out.values.data(), n, 1.0 / (h * h));
  return out;
}

namespace {

// Solves (-v_{i-1} + d*v_i - v_{i+1}) = r_i for i = 1..n-2 with v_0, v_{n-1}
// fixed; constant-diagonal Thomas elimination. The recurrence is sequential,
// so this stays scalar.
void thomas_const_diag(double d, const std::vector<double>& r, double v0,
                       double vn, std::vector<double>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<double> cp(n, 0.0), dp(n, 0.0);
  v[0] = v0;
  v[n - 1] = vn;
  double denom = d;
  cp[1] = -1.0 / denom;
  dp[1] = (r[1] + v0) / denom;
  for (int i = 2; i <= n - 2; ++i) {
    denom = d + cp[i - 1];
    cp[i] = -1.0 / denom;
    const double rhs = r[i] + (i == n - 2 ? vn : 0.0);
    dp[i] = (rhs + dp[i - 1]) / denom;
  }
  v[n - 2] = dp[n - 2];
  for (int i = n - 3; i >= 1; --i) v[i] = dp[i] - cp[i] * v[i + 1];
}

GridFunction solve_tridiag(const GridFunction& g, double shift_c,
                           double bc_left, double bc_right) {
  const int n = g.domain.n;
  const double h = g.domain.h();
  const double h2 = h * h;
  const double d = 2.0 + shift_c * h2;

  std::vector<double> rhs(n, 0.0);
  for (int i = 1; i <= n - 2; ++i) rhs[i] = h2 * g.values[i];

  GridFunction u = make_grid_function(g.domain);
  thomas_const_diag(d, rhs, bc_left, bc_right, u.values);

  // Refine toward a residual a few ulps above the rounding floor; the
  // contract only promises 1e-12 normwise relative, the extra headroom keeps
  // downstream identities clean.
  const double target = 64.0 * std::numeric_limits<double>::epsilon();
  for (int round = 0; round < 3; ++round) {
    std::vector<double> res(n, 0.0);
    double res_sup = 0.0;
    for (int i = 1; i <= n - 2; ++i) {
      res[i] = rhs[i] - (-u.values[i - 1] + d * u.values[i] - u.values[i + 1]);
      res_sup = std::max(res_sup, std::abs(res[i]));
    }
    const double scale =
        (2.0 + d) * ops().sup_abs(u.values.data(), u.values.size()) +
        ops().sup_abs(rhs.data(), rhs.size());
    if (res_sup <= target * std::max(scale, 1e-300)) break;
    std::vector<double> corr(n, 0.0);
    thomas_const_diag(d, res, 0.0, 0.0, corr);
    for (int i = 1; i <= n - 2; ++i) u.values[i] += corr[i];
  }
  return u;
}

}  // namespace

GridFunction solve_poisson(const GridFunction& g, double bc_left, double bc_right) {
  return solve_tridiag(g, 0.0, bc_left, bc_right);
}

GridFunction solve_shifted_poisson(const GridFunction& g, double shift_c,
                                   double bc_left, double bc_right) {
  if (shift_c < 0.0) raise(ErrorCode::domain_error, "shift must be >= 0");
  return solve_tridiag(g, shift_c, bc_left, bc_right);
}

double norm_sq_h1(const GridFunction& u) {
  return ops().sum_sq_diff(u.values.data(), u.values.size()) / u.domain.h();
}

double integrate(const GridFunction& u) {
  const double s = ops().sum(u.values.data(), u.values.size());
  return u.domain.h() * (s - 0.5 * (u.values.front() + u.values.back()));
}

LeqResult leq(const GridFunction& u, const GridFunction& v) {
  require_same_domain(u, v);
  const double gap = ops().max_minus(u.values.data(), v.values.data(), u.values.size());
  int worst = 0;
  for (int i = 0; i < u.size(); ++i) {
    if (u.values[i] - v.values[i] == gap) {
      worst = i;
      break;
    }
  }
  return LeqResult{gap <= kLeqSlack, worst, gap};
}

void write_csv(std::ostream& out, const GridFunction& u) {
  out << "x,value\n";
  for (int i = 0; i < u.size(); ++i) {
    out << fmt17(u.x(i)) << ',' << fmt17(u.values[i]) << '\n';
  }
}

GridFunction read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "x,value") {
    raise(ErrorCode::invalid_config, "CSV must start with header 'x,value'");
  }
  std::vector<double> xs, vals;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      raise(ErrorCode::invalid_config, "CSV row missing comma: " + line);
    }
    try {
      xs.push_back(std::stod(line.substr(0, comma)));
      vals.push_back(std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      raise(ErrorCode::invalid_config, "CSV row is not numeric: " + line);
    }
  }
  if (xs.size() < 3) raise(ErrorCode::invalid_config, "CSV needs at least 3 rows");
  const Interval domain = make_interval(xs.front(), xs.back(), static_cast<int>(xs.size()));
  GridFunction u{domain, std::move(vals)};
  validate(u);
  const double tol = 1e-9 * std::max(1.0, std::abs(domain.b - domain.a));
  for (int i = 0; i < u.size(); ++i) {
    if (std::abs(xs[i] - domain.node(i)) > tol) {
      raise(ErrorCode::invalid_config, "CSV nodes are not a uniform grid");
    }
  }
  return u;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_config: return "InvalidConfig";
    case ErrorCode::domain_error: return "DomainError";
    case ErrorCode::domain_mismatch: return "DomainMismatch";
    case ErrorCode::out_of_range: return "OutOfRange";
    case ErrorCode::non_monotone: return "NonMonotone";
    case ErrorCode::negative_mass: return "NegativeMass";
    case ErrorCode::order_violated: return "OrderViolated";
    case ErrorCode::boundary_violated: return "BoundaryViolated";
    case ErrorCode::not_verified: return "NotVerified";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::no_witness: return "NoWitness";
    case ErrorCode::no_positive_solution: return "NoPositiveSolution";
    case ErrorCode::no_epsilon: return "NoEpsilon";
    case ErrorCode::lambda_too_large: return "LambdaTooLarge";
    case ErrorCode::lambda_below_threshold: return "LambdaBelowThreshold";
  }
  return "UnknownError";
}

}  // namespace kirchhoff

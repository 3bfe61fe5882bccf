#include "gmssc/analysis.hpp"

#include "gmssc/error.hpp"
#include "gmssc/format.hpp"
#include "gmssc/rounding.hpp"
#include "gmssc/tail_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace gmssc {

double gmssc_ratio(double beta) {
  if (!(beta > 1.0)) {
    throw error("bad-beta", "ratio needs beta > 1, got " + std::to_string(beta));
  }
  return beta * std::exp(1.0 / beta) *
         (1.0 + std::exp(-1.0) / (beta - 1.0));
}

double mlc_ratio(double alpha) {
  if (!(alpha >= 2.0)) {
    throw error("bad-alpha", "ratio needs alpha >= 2, got " + std::to_string(alpha));
  }
  return alpha * alpha / (2.0 * (alpha - 1.0));
}

RatioCurve minimize_ratio(Problem problem, double lo, double hi, double step) {
  if (!(step > 0.0)) {
    throw error("bad-range", "step must be positive, got " + std::to_string(step));
  }
  if (!(lo <= hi)) {
    throw error("bad-range", "need lo <= hi, got [" + std::to_string(lo) + ", " +
                                 std::to_string(hi) + "]");
  }
  RatioCurve curve;
  curve.minimum = std::numeric_limits<double>::infinity();
  long long count = static_cast<long long>((hi - lo) / step + 1e-9) + 1;
  for (long long i = 0; i < count; ++i) {
    double parameter = lo + static_cast<double>(i) * step;
    double value = problem == Problem::gmssc ? gmssc_ratio(parameter)
                                             : mlc_ratio(parameter);
    curve.parameter.push_back(parameter);
    curve.value.push_back(value);
    if (value < curve.minimum) {
      curve.minimum = value;
      curve.argmin = parameter;
    }
  }
  return curve;
}

std::vector<EdgeDiagnostics> edge_diagnostics(const Instance& instance,
                                              const FractionalSchedule& schedule,
                                              const TransformedSchedule& z) {
  const int T_k = z.horizon();
  const double parameter = z.spec.parameter;
  std::vector<EdgeDiagnostics> out;
  out.reserve(instance.edges.size());

  std::vector<double> ys;
  for (std::size_t e = 0; e < instance.edges.size(); ++e) {
    const Edge& edge = instance.edges[e];
    EdgeDiagnostics d;
    d.edge = static_cast<int>(e);
    d.c_x = edge_cost(schedule, static_cast<int>(e));
    d.t_e = z.cover_time[e];
    d.p_t.resize(static_cast<std::size_t>(T_k));
    d.k_t.resize(static_cast<std::size_t>(T_k));

    for (int t = 1; t <= T_k; ++t) {
      ys.clear();
      int already = 0;
      for (int v : edge.vertices) {
        ys.push_back(z.y(v, t));
        if (z.z_before(v, t) >= 1.0) ++already;
      }
      d.p_t[static_cast<std::size_t>(t - 1)] = poisson_binomial_cdf(ys, edge.k - 1);
      d.k_t[static_cast<std::size_t>(t - 1)] = std::max(edge.k - already, 0);
    }

    if (d.t_e) {
      double sum = static_cast<double>(*d.t_e);
      for (int t = *d.t_e + 1; t <= T_k; ++t) {
        sum += d.p_t[static_cast<std::size_t>(t - 1)];
      }
      d.c_z = sum;
    } else {
      d.c_z = std::numeric_limits<double>::quiet_NaN();  // reported, not fatal
    }
    d.tail_certificate = d.p_t[static_cast<std::size_t>(T_k - 1)] *
                         static_cast<double>(T_k) / (parameter - 1.0);
    out.push_back(std::move(d));
  }
  return out;
}

namespace {

double cz_constant(double beta) {
  return std::exp(1.0 / beta) * (1.0 + std::exp(-1.0) / (beta - 1.0));
}

}  // namespace

std::string diagnostics_csv(const std::vector<EdgeDiagnostics>& diagnostics,
                            double beta) {
  double constant = cz_constant(beta);
  std::ostringstream out;
  out << "edge,t_e,c_x,c_z,bound,ratio\n";
  for (const EdgeDiagnostics& d : diagnostics) {
    double bound = constant * d.c_x + d.tail_certificate;
    out << d.edge << ',' << (d.t_e ? *d.t_e : -1) << ',' << csv_double(d.c_x)
        << ',' << csv_double(d.c_z) << ',' << csv_double(bound) << ','
        << csv_double(d.c_z / (constant * d.c_x)) << '\n';
  }
  return out.str();
}

CzBoundReport check_cz_bound(const std::vector<EdgeDiagnostics>& diagnostics,
                             double beta) {
  if (!(beta > 1.0)) {
    throw error("bad-beta", "need beta > 1, got " + std::to_string(beta));
  }
  CzBoundReport report;
  report.constant = cz_constant(beta);
  for (const EdgeDiagnostics& d : diagnostics) {
    if (!d.t_e) {
      throw error("no-t_e", "edge " + std::to_string(d.edge) +
                                " never accumulates unit transformed mass");
    }
    double bound = report.constant * d.c_x + d.tail_certificate;
    double slack = bound + 1e-6 - d.c_z;
    if (slack < 0.0) {
      throw error("lemma-violated",
                  "edge " + std::to_string(d.edge) + ": c_z " +
                      csv_double(d.c_z) + " exceeds bound " + csv_double(bound));
    }
    report.slack.push_back(slack);
    double ratio = d.c_z / (report.constant * d.c_x);
    if (ratio > report.tightest_ratio) {
      report.tightest_ratio = ratio;
      report.tightest_edge = d.edge;
    }
  }
  return report;
}

namespace {

// e^{x/beta} P^k(x + shift) on the exponential branch of P^k; callers only
// integrate where x + shift >= 1, so the branch agrees with the bound
// almost everywhere on the domain.
double weighted_tail(int order, double shift, double beta, double x) {
  double rk = std::sqrt(static_cast<double>(order));
  double anchor = (order - 1.0) / order;
  return std::exp(x / beta - rk * (x + shift - anchor));
}

// Exact integral of weighted_tail over [lo, infinity).
double weighted_tail_integral(int order, double shift, double beta, double lo) {
  double rk = std::sqrt(static_cast<double>(order));
  double anchor = (order - 1.0) / order;
  double rate = rk - 1.0 / beta;  // positive since 1/beta < 1 <= sqrt(order)
  return std::exp(-rk * (shift - anchor)) * std::exp(-rate * lo) / rate;
}

struct QuadBudget {
  long long remaining = 0;
  double spend(double value) {
    if (--remaining < 0) {
      throw error("quadrature-failure", "evaluation budget exhausted");
    }
    return value;
  }
};

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm,
                        double fb, double whole, double tol, int depth,
                        QuadBudget& budget) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double flm = budget.spend(f(lm));
  double frm = budget.spend(f(rm));
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth <= 0) {
    throw error("quadrature-failure",
                "tolerance unreachable at depth limit on [" +
                    std::to_string(a) + ", " + std::to_string(b) + "]");
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1,
                          budget) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1,
                          budget);
}

template <typename F>
double integrate(const F& f, double a, double b, double tol, QuadBudget& budget) {
  if (!(b > a)) return 0.0;
  double fa = budget.spend(f(a));
  double m = 0.5 * (a + b);
  double fm = budget.spend(f(m));
  double fb = budget.spend(f(b));
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48, budget);
}

// Integral of weighted_tail over [lo, hi] (hi may be infinite): adaptive
// quadrature on the finite part up to the closed-form cutover at x = 60.
constexpr double kClosedFormFrom = 60.0;

double tail_segment(int order, double shift, double beta, double lo, double hi,
                    double tol, QuadBudget& budget) {
  auto f = [&](double x) { return weighted_tail(order, shift, beta, x); };
  double quad_hi = std::min(hi, kClosedFormFrom);
  double value = 0.0;
  if (quad_hi > lo) value += integrate(f, lo, quad_hi, tol, budget);
  if (hi > kClosedFormFrom) {
    double from = std::max(lo, kClosedFormFrom);
    value += weighted_tail_integral(order, shift, beta, from);
    if (std::isfinite(hi)) {
      value -= weighted_tail_integral(order, shift, beta, hi);
    }
  }
  return value;
}

}  // namespace

SwitchIntegrals check_jump_claim(int i, double a, double b,
                                             double delta, double beta,
                                             long long quad_points) {
  if (i < 2) throw error("domain-error", "need i >= 2, got " + std::to_string(i));
  if (!(a >= 0.0 && b >= a)) {
    throw error("domain-error", "need 0 <= a <= b, got a = " +
                                    std::to_string(a) + ", b = " +
                                    std::to_string(b));
  }
  if (!(delta >= 0.0)) {
    throw error("domain-error", "need delta >= 0, got " + std::to_string(delta));
  }
  if (!(beta > 1.0)) {
    throw error("bad-beta", "need beta > 1, got " + std::to_string(beta));
  }

  const double inf = std::numeric_limits<double>::infinity();
  const double tol = 1e-9;
  QuadBudget budget{quad_points};

  SwitchIntegrals result;
  // Order-i bound until the switch at 1+b, order-1 with accumulated
  // overshoot afterwards.
  result.lhs = tail_segment(i, (a + delta) / i, beta, 1.0 + a, 1.0 + b, tol,
                            budget) +
               tail_segment(1, b + (a + delta) / (i - 1.0), beta, 1.0 + b, inf,
                            tol, budget);
  result.rhs = tail_segment(1, a + delta / i, beta, 1.0 + a, inf, tol, budget);
  result.ok = result.lhs <= result.rhs + 1e-7;
  return result;
}

MlcReport mlc_check(const Instance& instance, double alpha, int trials,
                    std::uint64_t seed) {
  for (std::size_t e = 0; e < instance.edges.size(); ++e) {
    if (instance.edges[e].k != static_cast<int>(instance.edges[e].vertices.size())) {
      throw error("not-mlc", "edge " + std::to_string(e) +
                                 " has k < its size; the mlc lemmas need k = |e|");
    }
  }

  FractionalSchedule schedule = solve_gmssc_lp(instance);
  KernelSpec spec = mlc_kernel(instance.n, alpha);
  TransformedSchedule z = transform_schedule(spec, schedule);
  CostReport mc = estimate_cost(z, instance, trials, seed);

  MlcReport report;
  for (std::size_t e = 0; e < instance.edges.size(); ++e) {
    MlcEdgeRow row;
    row.edge = static_cast<int>(e);
    if (!z.cover_time[e]) {
      throw error("no-t_e", "edge " + std::to_string(e) +
                                " never accumulates unit transformed mass");
    }
    row.t_e = *z.cover_time[e];
    row.c_x = schedule.edge_costs[e];
    row.deterministic_bound = alpha / (alpha - 1.0) * row.c_x;
    row.mc_mean = mc.edge_mean[e];
    row.mc_std_error = mc.edge_std_error[e];

    if (static_cast<double>(row.t_e) > row.deterministic_bound + 1e-6) {
      throw error("lemma-violated",
                  "edge " + std::to_string(e) + ": t_e " +
                      std::to_string(row.t_e) + " exceeds alpha/(alpha-1) c_x = " +
                      csv_double(row.deterministic_bound));
    }
    double mc_bound = 0.5 * alpha * row.t_e + 3.0 * row.mc_std_error;
    if (row.mc_mean > mc_bound) {
      throw error("lemma-violated",
                  "edge " + std::to_string(e) + ": mean cover time " +
                      csv_double(row.mc_mean) + " exceeds alpha/2 t_e + 3se = " +
                      csv_double(mc_bound));
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace gmssc

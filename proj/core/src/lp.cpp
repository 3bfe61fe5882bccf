#include "gmssc/lp.hpp"

#include "gmssc/error.hpp"
#include "gmssc/format.hpp"
#include "gmssc/simplex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace gmssc {

double FractionalSchedule::x_before(int v, int t) const {
  double sum = 0.0;
  for (int s = 1; s < t; ++s) sum += x[v][s - 1];
  return sum;
}

GmsscLp build_base_lp(const Instance& instance, int horizon) {
  int max_k = 0;
  for (const Edge& edge : instance.edges) max_k = std::max(max_k, edge.k);
  if (horizon < std::max(1, max_k)) {
    throw error("horizon-too-small",
                "horizon " + std::to_string(horizon) +
                    " cannot cover requirement " + std::to_string(max_k));
  }

  GmsscLp lp;
  lp.n = instance.n;
  lp.m = static_cast<int>(instance.edges.size());
  lp.horizon = horizon;

  for (int v = 0; v < lp.n; ++v) {
    for (int t = 1; t <= horizon; ++t) lp.model.add_variable(0.0);
  }
  for (int e = 0; e < lp.m; ++e) {
    for (int t = 1; t <= horizon; ++t) lp.model.add_variable(1.0);
  }

  // Per-slot capacity: at most one unit of schedule mass per slot.
  for (int t = 1; t <= horizon; ++t) {
    std::vector<std::pair<int, double>> coeffs;
    coeffs.reserve(static_cast<std::size_t>(lp.n));
    for (int v = 0; v < lp.n; ++v) coeffs.emplace_back(lp.x_var(v, t), 1.0);
    lp.model.add_row(std::move(coeffs), RowSense::le, 1.0);
  }

  // S = {} covering rows: k u(e,t) + sum_{v in e} x_{v,<t} >= k for t <= T,
  // and the hard coverage row at t = T+1 where u is pinned to zero.
  for (int e = 0; e < lp.m; ++e) {
    const Edge& edge = instance.edges[static_cast<std::size_t>(e)];
    double k = static_cast<double>(edge.k);
    for (int t = 1; t <= horizon + 1; ++t) {
      std::vector<std::pair<int, double>> coeffs;
      if (t <= horizon) coeffs.emplace_back(lp.u_var(e, t), k);
      for (int v : edge.vertices) {
        for (int s = 1; s < t; ++s) coeffs.emplace_back(lp.x_var(v, s), 1.0);
      }
      lp.model.add_row(std::move(coeffs), RowSense::ge, k);
    }
  }
  return lp;
}

std::vector<KcCut> separate_kc(const std::vector<double>& x_prefix,
                               double u_value, const Edge& edge, double tol) {
  std::vector<int> by_mass = edge.vertices;
  std::sort(by_mass.begin(), by_mass.end(), [&](int a, int b) {
    double xa = x_prefix[static_cast<std::size_t>(a)];
    double xb = x_prefix[static_cast<std::size_t>(b)];
    return xa > xb || (xa == xb && a < b);
  });

  double outside = 0.0;
  for (int v : edge.vertices) outside += x_prefix[static_cast<std::size_t>(v)];

  std::vector<KcCut> cuts;
  for (int s = 0; s < edge.k; ++s) {
    if (s > 0) outside -= x_prefix[static_cast<std::size_t>(by_mass[s - 1])];
    double need = static_cast<double>(edge.k - s);
    double lhs = need * u_value + outside;
    if (lhs < need - tol) {
      KcCut cut;
      cut.subset.assign(by_mass.begin(), by_mass.begin() + s);
      std::sort(cut.subset.begin(), cut.subset.end());
      cut.violation = need - lhs;
      cuts.push_back(std::move(cut));
    }
  }
  return cuts;
}

double kc_required_u(const Edge& edge, const std::vector<double>& x_prefix) {
  std::vector<double> mass;
  mass.reserve(edge.vertices.size());
  for (int v : edge.vertices) mass.push_back(x_prefix[static_cast<std::size_t>(v)]);
  std::sort(mass.begin(), mass.end(), std::greater<double>());

  double outside = std::accumulate(mass.begin(), mass.end(), 0.0);
  double required = 0.0;
  for (int s = 0; s < edge.k; ++s) {
    if (s > 0) outside -= mass[static_cast<std::size_t>(s - 1)];
    double need = static_cast<double>(edge.k - s);
    required = std::max(required, (need - outside) / need);
  }
  return std::min(std::max(required, 0.0), 1.0);
}

namespace {

using CutKey = std::tuple<int, int, std::vector<int>>;  // (edge, t, subset)

}  // namespace

FractionalSchedule solve_gmssc_lp(const Instance& instance,
                                  const GmsscLpOptions& options) {
  const int horizon = instance.n;
  GmsscLp lp = build_base_lp(instance, horizon);
  const int m = lp.m;

  std::set<CutKey> seen;
  for (int e = 0; e < m; ++e) {
    for (int t = 1; t <= horizon + 1; ++t) seen.emplace(e, t, std::vector<int>{});
  }

  LpSolution solution;
  int round = 0;
  for (;; ++round) {
    if (round >= options.max_rounds) {
      throw error("iteration-limit",
                  "separation did not converge after " +
                      std::to_string(options.max_rounds) + " rounds (" +
                      std::to_string(seen.size()) + " rows active)");
    }
    solution = solve_lp(lp.model, options.pivot_tol);

    // prefix[v][t-1] = x_{v,<t} for t = 1..T+1
    std::vector<std::vector<double>> prefix(
        static_cast<std::size_t>(lp.n),
        std::vector<double>(static_cast<std::size_t>(horizon + 1), 0.0));
    for (int v = 0; v < lp.n; ++v) {
      double sum = 0.0;
      for (int t = 1; t <= horizon; ++t) {
        prefix[static_cast<std::size_t>(v)][static_cast<std::size_t>(t - 1)] = sum;
        sum += std::max(solution.values[static_cast<std::size_t>(lp.x_var(v, t))], 0.0);
      }
      prefix[static_cast<std::size_t>(v)][static_cast<std::size_t>(horizon)] = sum;
    }

    int added = 0;
    std::vector<double> at_t(static_cast<std::size_t>(lp.n));
    for (int t = 1; t <= horizon + 1; ++t) {
      for (int v = 0; v < lp.n; ++v) {
        at_t[static_cast<std::size_t>(v)] =
            prefix[static_cast<std::size_t>(v)][static_cast<std::size_t>(t - 1)];
      }
      for (int e = 0; e < m; ++e) {
        const Edge& edge = instance.edges[static_cast<std::size_t>(e)];
        double u_value =
            t <= horizon
                ? solution.values[static_cast<std::size_t>(lp.u_var(e, t))]
                : 0.0;
        for (KcCut& cut :
             separate_kc(at_t, u_value, edge, options.separation_tol)) {
          if (!seen.emplace(e, t, cut.subset).second) continue;
          double need = static_cast<double>(edge.k - static_cast<int>(cut.subset.size()));
          std::vector<std::pair<int, double>> coeffs;
          if (t <= horizon) coeffs.emplace_back(lp.u_var(e, t), need);
          for (int v : edge.vertices) {
            if (std::binary_search(cut.subset.begin(), cut.subset.end(), v)) continue;
            for (int s = 1; s < t; ++s) coeffs.emplace_back(lp.x_var(v, s), 1.0);
          }
          lp.model.add_row(std::move(coeffs), RowSense::ge, need);
          ++added;
        }
      }
    }
    if (added == 0) break;
  }

  FractionalSchedule schedule;
  schedule.horizon = horizon;
  schedule.x.assign(static_cast<std::size_t>(lp.n),
                    std::vector<double>(static_cast<std::size_t>(horizon), 0.0));
  for (int v = 0; v < lp.n; ++v) {
    for (int t = 1; t <= horizon; ++t) {
      schedule.x[static_cast<std::size_t>(v)][static_cast<std::size_t>(t - 1)] =
          std::max(solution.values[static_cast<std::size_t>(lp.x_var(v, t))], 0.0);
    }
  }

  // Renormalize u to the minimal values the covering inequalities allow.
  schedule.u.assign(static_cast<std::size_t>(m),
                    std::vector<double>(static_cast<std::size_t>(horizon), 0.0));
  schedule.edge_costs.assign(static_cast<std::size_t>(m), 0.0);
  std::vector<double> at_t(static_cast<std::size_t>(lp.n));
  double objective = 0.0;
  for (int t = 1; t <= horizon; ++t) {
    for (int v = 0; v < lp.n; ++v) {
      at_t[static_cast<std::size_t>(v)] = schedule.x_before(v, t);
    }
    for (int e = 0; e < m; ++e) {
      double value = kc_required_u(instance.edges[static_cast<std::size_t>(e)], at_t);
      schedule.u[static_cast<std::size_t>(e)][static_cast<std::size_t>(t - 1)] = value;
      schedule.edge_costs[static_cast<std::size_t>(e)] += value;
      objective += value;
    }
  }
  schedule.objective = objective;
  return schedule;
}

FractionalSchedule solve_gmssc_lp(const Instance& instance, double tol) {
  GmsscLpOptions options;
  options.separation_tol = tol;
  return solve_gmssc_lp(instance, options);
}

double edge_cost(const FractionalSchedule& schedule, int e) {
  double sum = 0.0;
  for (int t = 1; t <= schedule.horizon; ++t) sum += schedule.u_at(e, t);
  return sum;
}

std::string write_lp_solution(const FractionalSchedule& schedule) {
  std::ostringstream out;
  out << "lp v1\n";
  out << "objective " << format_double(schedule.objective, 17) << '\n';
  for (std::size_t v = 0; v < schedule.x.size(); ++v) {
    for (int t = 1; t <= schedule.horizon; ++t) {
      double value = schedule.x[v][static_cast<std::size_t>(t - 1)];
      if (value > 0.0) {
        out << "x " << v << ' ' << t << ' ' << format_double(value, 17) << '\n';
      }
    }
  }
  for (std::size_t e = 0; e < schedule.u.size(); ++e) {
    for (int t = 1; t <= schedule.horizon; ++t) {
      double value = schedule.u[e][static_cast<std::size_t>(t - 1)];
      if (value > 0.0) {
        out << "u " << e << ' ' << t << ' ' << format_double(value, 17) << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace gmssc

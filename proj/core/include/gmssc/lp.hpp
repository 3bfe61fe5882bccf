#pragma once

#include "gmssc/instance.hpp"
#include "gmssc/lp_model.hpp"

#include <string>
#include <vector>

namespace gmssc {

// An LP-feasible fractional schedule over slots t = 1..T.
//   x(v,t): fraction of vertex v placed in slot t.
//   u(e,t): fraction of edge e still uncovered at the start of slot t.
// After solving, u is renormalized to the minimal values compatible with x
// under every covering inequality. That makes u(e,.) non-increasing with
// u(e,1) = 1, pins u(e,T+1) = 0 (enforced by the hard coverage rows), and
// yields a non-negative per-edge mass x_e(t) = u(e,t) - u(e,t+1) summing
// to 1.
struct FractionalSchedule {
  int horizon = 0;                     // T
  std::vector<std::vector<double>> x;  // [n][T]
  std::vector<std::vector<double>> u;  // [m][T]
  double objective = 0.0;              // sum over e,t of u(e,t)
  std::vector<double> edge_costs;      // c_x(e) = sum_t u(e,t)

  double x_at(int v, int t) const { return x[v][t - 1]; }
  double u_at(int e, int t) const {  // t in 1..T+1
    return t <= horizon ? u[e][t - 1] : 0.0;
  }
  double x_before(int v, int t) const;  // x_{v,<t}, t in 1..T+1
  double x_edge(int e, int t) const {   // t in 1..T
    return u_at(e, t) - u_at(e, t + 1);
  }
};

// A violated covering inequality
//   (k_e - |S|) u_{e,t} + sum_{v in e\S} x_{v,<t} >= k_e - |S|.
struct KcCut {
  std::vector<int> subset;  // S, sorted vertex ids, |S| < k_e
  double violation = 0.0;   // amount by which the inequality fails
  int edge = -1;            // annotated by the solve loop
  int t = 0;
};

struct GmsscLp {
  LpModel model;
  int n = 0;
  int m = 0;
  int horizon = 0;

  // Variable layout: all x first (v major, t minor), then all u.
  int x_var(int v, int t) const { return v * horizon + (t - 1); }
  int u_var(int e, int t) const { return n * horizon + e * horizon + (t - 1); }
};

// Base relaxation: per-slot capacity sum_v x(v,t) <= 1, the S = {} covering
// rows for every (e, t <= T), and the hard coverage rows
// sum_{v in e} x_{v,<T+1} >= k_e. Remaining covering inequalities are added
// on demand as cutting planes.
GmsscLp build_base_lp(const Instance& instance, int horizon);

// Exact separation for one edge at one slot. x_prefix is indexed by vertex
// id and holds x_{v,<t}; u_value is the current u(e,t) (0 at t = T+1).
// For each subset size s < k_e the most violated subset consists of the s
// vertices of largest prefix mass (ties: lowest id); one cut is emitted per
// violated size.
std::vector<KcCut> separate_kc(const std::vector<double>& x_prefix,
                               double u_value, const Edge& edge, double tol);

// Minimal u(e,t) compatible with the prefix masses under every covering
// inequality; the subset-size maximum that separate_kc searches over.
double kc_required_u(const Edge& edge, const std::vector<double>& x_prefix);

struct GmsscLpOptions {
  double separation_tol = 1e-7;
  int max_rounds = 200;
  double pivot_tol = 1e-9;
};

// Cutting-plane loop around the simplex solver; terminates when no covering
// inequality is violated by more than the separation tolerance. The returned
// objective uses the renormalized u and lower-bounds the integral optimum.
// Throws "infeasible" / "unbounded" / "iteration-limit".
FractionalSchedule solve_gmssc_lp(const Instance& instance,
                                  const GmsscLpOptions& options);
FractionalSchedule solve_gmssc_lp(const Instance& instance, double tol = 1e-7);

// c_x(e); identical to the telescoped form sum_t t * x_e(t) because
// u(e,T+1) = 0.
double edge_cost(const FractionalSchedule& schedule, int e);

// Text dump, full double precision:
//   lp v1
//   objective <value>
//   x <v> <t> <value>      (nonzeros)
//   u <e> <t> <value>      (nonzeros)
std::string write_lp_solution(const FractionalSchedule& schedule);

}  // namespace gmssc

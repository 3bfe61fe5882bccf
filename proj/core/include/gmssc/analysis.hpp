#pragma once

#include "gmssc/instance.hpp"
#include "gmssc/kernel.hpp"
#include "gmssc/lp.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gmssc {

// Approximation guarantee of the full pipeline as a function of the kernel
// parameter:
//   gmssc: beta e^{1/beta} (1 + e^{-1} / (beta - 1))   for beta > 1
//   mlc:   alpha^2 / (2 (alpha - 1))                   for alpha >= 2
// Throw "bad-beta" / "bad-alpha" outside those ranges.
double gmssc_ratio(double beta);
double mlc_ratio(double alpha);

enum class Problem { gmssc, mlc };

struct RatioCurve {
  std::vector<double> parameter;
  std::vector<double> value;
  double argmin = 0.0;
  double minimum = 0.0;
};

// Grid sweep of the ratio over [lo, hi] with the given step (lo = hi gives a
// single point). argmin is the first grid point attaining the minimum.
RatioCurve minimize_ratio(Problem problem, double lo, double hi, double step);

// Per-edge certificates tying the transformed schedule to the LP cost.
//   p_t: exact Pr[fewer than k_e vertices of e scheduled before t] when each
//        vertex lands before t independently with probability y(v,t).
//   k_t: residual requirement k_e - |{v in e : z_{v,<t} >= 1}|, floored at 0.
//   c_z: t_e + sum_{t > t_e} p_t, truncated at the kernel horizon.
//   tail_certificate: p_{T_k}(e) * T_k / (parameter - 1), an analytic bound
//        on the mass lost to truncation (the per-slot bound decays like
//        (t/T_k)^{-beta} past the horizon because the kernel grows the
//        cumulative mass logarithmically).
struct EdgeDiagnostics {
  int edge = 0;
  std::optional<int> t_e;
  double c_x = 0.0;
  double c_z = 0.0;
  double tail_certificate = 0.0;
  std::vector<double> p_t;  // t = 1..T_k
  std::vector<int> k_t;     // t = 1..T_k
};

std::vector<EdgeDiagnostics> edge_diagnostics(const Instance& instance,
                                              const FractionalSchedule& schedule,
                                              const TransformedSchedule& z);

// CSV: edge,t_e,c_x,c_z,bound,ratio with bound = C(beta) c_x + tail and
// ratio = c_z / (C(beta) c_x); t_e prints -1 when never reached.
std::string diagnostics_csv(const std::vector<EdgeDiagnostics>& diagnostics,
                            double beta);

struct CzBoundReport {
  double constant = 0.0;  // C(beta) = e^{1/beta} (1 + e^{-1}/(beta-1))
  int tightest_edge = -1;
  double tightest_ratio = 0.0;  // max over edges of c_z / (C(beta) c_x)
  std::vector<double> slack;    // bound + 1e-6 - c_z, per edge
};

// Asserts c_z(e) <= C(beta) c_x(e) + tail_certificate(e) + 1e-6 for every
// edge. Throws "no-t_e" when an edge never accumulates unit mass and
// "lemma-violated" with a witness edge otherwise.
CzBoundReport check_cz_bound(const std::vector<EdgeDiagnostics>& diagnostics,
                             double beta);

struct SwitchIntegrals {
  double lhs = 0.0;
  double rhs = 0.0;
  bool ok = false;  // lhs <= rhs + 1e-7
};

// Verifies one instance of the bound-switching inequality used when an
// edge's residual requirement drops from i to i-1 at accumulated overshoot
// b (starting from a, with initial gap delta): integrating the order-i tail
// bound up to the switch point and the order-1 bound beyond it, both against
// the e^{x/beta} weight, never exceeds the order-1 integral started at a.
// Finite segments use adaptive Simpson quadrature (budget quad_points
// evaluations, "quadrature-failure" if the 1e-9 tolerance is unreachable);
// the integrands are pure exponentials beyond x = 60 and are integrated in
// closed form there. Requires i >= 2, 0 <= a <= b, delta >= 0, beta > 1.
SwitchIntegrals check_jump_claim(int i, double a, double b,
                                             double delta, double beta,
                                             long long quad_points = 1000000);

struct MlcEdgeRow {
  int edge = 0;
  int t_e = 0;
  double c_x = 0.0;
  double deterministic_bound = 0.0;  // alpha/(alpha-1) c_x
  double mc_mean = 0.0;
  double mc_std_error = 0.0;
};

struct MlcReport {
  std::vector<MlcEdgeRow> rows;
};

// End-to-end check of the two mlc lemmas on a full-requirement instance
// (k_e = |e| everywhere; "not-mlc" otherwise): solves the LP, applies the
// mlc kernel, and asserts per edge
//   t_e <= alpha/(alpha-1) c_x + 1e-6          (deterministic)
//   mean cover time <= alpha/2 t_e + 3 stderr  (Monte Carlo)
// Throws "lemma-violated" with a witness on failure.
MlcReport mlc_check(const Instance& instance, double alpha, int trials = 2000,
                    std::uint64_t seed = 2026);

}  // namespace gmssc

#pragma once

#include "gmssc/lp_model.hpp"

#include <vector>

namespace gmssc {

enum class LpStatus { optimal, infeasible, unbounded, iteration_limit };

struct SimplexOptions {
  double pivot_tol = 1e-9;
  long long max_iterations = 1000000;
};

struct LpSolution {
  LpStatus status = LpStatus::optimal;
  std::vector<double> values;  // one per model variable; empty unless optimal
  double objective = 0.0;
  long long iterations = 0;
};

// Two-phase dense primal simplex. Pricing is Dantzig (most negative reduced
// cost) until a run of degenerate pivots is detected, then switches to
// Bland's rule permanently, which guarantees termination. Never throws on
// solver outcomes; inspect status.
LpSolution simplex_solve(const LpModel& model, const SimplexOptions& options = {});

// Contract wrapper: returns an optimal solution or throws
// "infeasible" / "unbounded" / "iteration-limit".
LpSolution solve_lp(const LpModel& model, double pivot_tol = 1e-9);

}  // namespace gmssc

#pragma once

#include "gmssc/instance.hpp"
#include "gmssc/kernel.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace gmssc {

// Tentative time for vertices whose cumulative transformed mass never
// reaches the drawn threshold within the kernel horizon.
inline constexpr int kNever = std::numeric_limits<int>::max();

struct RoundingTrial {
  std::uint64_t seed = 0;
  std::vector<double> alpha;  // per-vertex thresholds in [0,1)
  std::vector<int> tau;       // tentative times in {1..T_k} or kNever
  std::vector<int> order;     // order[p] = vertex in position p+1
};

// Threshold rounding: draw an independent uniform threshold per vertex, set
// tau_v to the first t with z_{v,<t} >= alpha_v, and order vertices by tau.
// Ties (including the never-scheduled class, which always comes last) are
// broken by an independent uniform shuffle, so
//   Pr[tau_v <= t] = min(1, z_{v,<t})   exactly.
RoundingTrial alpha_point_round(const TransformedSchedule& z,
                                std::uint64_t seed);

struct CostReport {
  std::vector<int> cover_time;  // per edge, 1-based position
  long long total = 0;

  // Monte Carlo aggregates, filled by estimate_cost.
  int trials = 0;
  double mean = 0.0;
  double std_error = 0.0;  // sample stddev / sqrt(trials); 0 for one trial
  std::vector<double> edge_mean;
  std::vector<double> edge_std_error;
};

// Cover times of a full permutation of 0..n-1 ("not-a-permutation" else).
// Edge e is covered at the position of its k_e-th scheduled vertex.
CostReport cover_times(const Instance& instance, const std::vector<int>& order);

// Seed for trial r under a master seed; fixed derivation so per-trial
// outputs are reproducible individually.
std::uint64_t trial_seed(std::uint64_t master_seed, int trial);

// Mean and standard error of the rounded cost over independent trials,
// plus per-edge aggregates. Deterministic given (seed, trials).
CostReport estimate_cost(const TransformedSchedule& z, const Instance& instance,
                         int trials, std::uint64_t seed);

}  // namespace gmssc

#include "gmssc/rounding.hpp"

#include "gmssc/error.hpp"
#include "gmssc/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace gmssc {

RoundingTrial alpha_point_round(const TransformedSchedule& z,
                                std::uint64_t seed) {
  const int n = z.vertex_count();
  const int T_k = z.horizon();

  RoundingTrial trial;
  trial.seed = seed;
  trial.alpha.resize(static_cast<std::size_t>(n));
  trial.tau.resize(static_cast<std::size_t>(n));

  SplitMix64 threshold_rng(seed);
  for (int v = 0; v < n; ++v) {
    double alpha = threshold_rng.uniform01();
    trial.alpha[static_cast<std::size_t>(v)] = alpha;
    // Smallest t in 1..T_k with z_{v,<t} >= alpha; the prefix is monotone.
    const std::vector<double>& prefix = z.z_prefix[static_cast<std::size_t>(v)];
    auto it = std::lower_bound(prefix.begin(), prefix.begin() + T_k, alpha);
    trial.tau[static_cast<std::size_t>(v)] =
        it == prefix.begin() + T_k
            ? kNever
            : static_cast<int>(it - prefix.begin()) + 1;
  }

  trial.order.resize(static_cast<std::size_t>(n));
  std::iota(trial.order.begin(), trial.order.end(), 0);
  std::sort(trial.order.begin(), trial.order.end(), [&](int a, int b) {
    int ta = trial.tau[static_cast<std::size_t>(a)];
    int tb = trial.tau[static_cast<std::size_t>(b)];
    return ta < tb || (ta == tb && a < b);
  });

  // Independent stream for tie breaking so it does not perturb thresholds.
  SplitMix64 tie_rng(mix_seed(seed ^ 0x7469652d62726bULL));
  std::size_t lo = 0;
  while (lo < trial.order.size()) {
    std::size_t hi = lo + 1;
    while (hi < trial.order.size() &&
           trial.tau[static_cast<std::size_t>(trial.order[hi])] ==
               trial.tau[static_cast<std::size_t>(trial.order[lo])]) {
      ++hi;
    }
    shuffle_range(trial.order, lo, hi, tie_rng);
    lo = hi;
  }
  return trial;
}

CostReport cover_times(const Instance& instance, const std::vector<int>& order) {
  const int n = instance.n;
  if (static_cast<int>(order.size()) != n) {
    throw error("not-a-permutation",
                "order has " + std::to_string(order.size()) +
                    " entries for " + std::to_string(n) + " vertices");
  }
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (int p = 0; p < n; ++p) {
    int v = order[static_cast<std::size_t>(p)];
    if (v < 0 || v >= n || position[static_cast<std::size_t>(v)] != -1) {
      throw error("not-a-permutation",
                  "order is not a permutation of 0.." + std::to_string(n - 1));
    }
    position[static_cast<std::size_t>(v)] = p + 1;
  }

  CostReport report;
  report.cover_time.reserve(instance.edges.size());
  std::vector<int> positions;
  for (const Edge& edge : instance.edges) {
    positions.clear();
    for (int v : edge.vertices) {
      positions.push_back(position[static_cast<std::size_t>(v)]);
    }
    auto kth = positions.begin() + (edge.k - 1);
    std::nth_element(positions.begin(), kth, positions.end());
    report.cover_time.push_back(*kth);
    report.total += *kth;
  }
  return report;
}

std::uint64_t trial_seed(std::uint64_t master_seed, int trial) {
  return mix_seed(master_seed ^
                  (0x9e3779b97f4a7c15ULL *
                   static_cast<std::uint64_t>(trial + 1)));
}

CostReport estimate_cost(const TransformedSchedule& z, const Instance& instance,
                         int trials, std::uint64_t seed) {
  if (trials < 1) {
    throw error("bad-trials", "need at least one trial, got " +
                                  std::to_string(trials));
  }
  const std::size_t m = instance.edges.size();

  CostReport aggregate;
  aggregate.trials = trials;
  aggregate.edge_mean.assign(m, 0.0);
  aggregate.edge_std_error.assign(m, 0.0);

  // Welford accumulators in fixed trial order; results depend only on
  // (seed, trials).
  double mean = 0.0, m2 = 0.0;
  std::vector<double> edge_mean(m, 0.0), edge_m2(m, 0.0);
  for (int r = 0; r < trials; ++r) {
    RoundingTrial trial = alpha_point_round(z, trial_seed(seed, r));
    CostReport single = cover_times(instance, trial.order);

    double count = static_cast<double>(r + 1);
    double delta = static_cast<double>(single.total) - mean;
    mean += delta / count;
    m2 += delta * (static_cast<double>(single.total) - mean);
    for (std::size_t e = 0; e < m; ++e) {
      double value = static_cast<double>(single.cover_time[e]);
      double d = value - edge_mean[e];
      edge_mean[e] += d / count;
      edge_m2[e] += d * (value - edge_mean[e]);
    }
  }

  double rf = static_cast<double>(trials);
  aggregate.mean = mean;
  aggregate.std_error =
      trials > 1 ? std::sqrt(m2 / (rf - 1.0)) / std::sqrt(rf) : 0.0;
  for (std::size_t e = 0; e < m; ++e) {
    aggregate.edge_mean[e] = edge_mean[e];
    aggregate.edge_std_error[e] =
        trials > 1 ? std::sqrt(edge_m2[e] / (rf - 1.0)) / std::sqrt(rf) : 0.0;
  }
  return aggregate;
}

}  // namespace gmssc

#include "gmssc/exact.hpp"

#include "gmssc/error.hpp"
#include "gmssc/rng.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace gmssc {

ExactResult exact_opt(const Instance& instance) {
  const int n = instance.n;
  if (n > 20) {
    throw error("too-large", "subset dynamic program is capped at n = 20, got " +
                                 std::to_string(n));
  }
  const std::size_t states = std::size_t{1} << n;
  const int m = static_cast<int>(instance.edges.size());

  std::vector<std::uint32_t> edge_mask(static_cast<std::size_t>(m), 0);
  for (int e = 0; e < m; ++e) {
    for (int v : instance.edges[static_cast<std::size_t>(e)].vertices) {
      edge_mask[static_cast<std::size_t>(e)] |= std::uint32_t{1} << v;
    }
  }

  // uncovered[S] = number of edges whose requirement S does not meet yet.
  std::vector<std::uint16_t> uncovered(states, 0);
  for (std::size_t s = 0; s < states; ++s) {
    std::uint16_t count = 0;
    for (int e = 0; e < m; ++e) {
      int hits = std::popcount(static_cast<std::uint32_t>(s) &
                               edge_mask[static_cast<std::size_t>(e)]);
      if (hits < instance.edges[static_cast<std::size_t>(e)].k) ++count;
    }
    uncovered[s] = count;
  }

  // cost[S] = cheapest total over schedules whose first |S| slots are S:
  // each proper prefix P contributes uncovered[P].
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> cost(states, kUnset);
  cost[0] = 0;
  for (std::size_t s = 1; s < states; ++s) {
    std::uint32_t best = kUnset;
    std::uint32_t bits = static_cast<std::uint32_t>(s);
    while (bits != 0) {
      std::uint32_t low = bits & (~bits + 1);
      std::size_t prev = s & ~static_cast<std::size_t>(low);
      std::uint32_t candidate = cost[prev] + uncovered[prev];
      best = std::min(best, candidate);
      bits ^= low;
    }
    cost[s] = best;
  }

  ExactResult result;
  result.cost = cost[states - 1];

  // Walk back choosing the lowest vertex id that attains the optimum at
  // each step, so the returned optimal permutation is deterministic.
  std::size_t s = states - 1;
  std::vector<int> reversed;
  reversed.reserve(static_cast<std::size_t>(n));
  while (s != 0) {
    int chosen = -1;
    for (int v = 0; v < n; ++v) {
      std::uint32_t bit = std::uint32_t{1} << v;
      if (!(s & bit)) continue;
      std::size_t prev = s & ~static_cast<std::size_t>(bit);
      if (cost[prev] + uncovered[prev] == cost[s]) {
        chosen = v;
        break;
      }
    }
    reversed.push_back(chosen);
    s &= ~(std::size_t{1} << chosen);
  }
  result.order.assign(reversed.rbegin(), reversed.rend());
  return result;
}

std::vector<int> greedy_mssc(const Instance& instance) {
  for (std::size_t e = 0; e < instance.edges.size(); ++e) {
    if (instance.edges[e].k != 1) {
      throw error("not-mssc", "edge " + std::to_string(e) + " has k = " +
                                  std::to_string(instance.edges[e].k));
    }
  }
  const int n = instance.n;
  std::vector<bool> covered(instance.edges.size(), false);
  std::vector<bool> scheduled(static_cast<std::size_t>(n), false);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int best_vertex = -1;
    int best_gain = -1;
    for (int v = 0; v < n; ++v) {
      if (scheduled[static_cast<std::size_t>(v)]) continue;
      int gain = 0;
      for (std::size_t e = 0; e < instance.edges.size(); ++e) {
        if (covered[e]) continue;
        const std::vector<int>& vs = instance.edges[e].vertices;
        if (std::binary_search(vs.begin(), vs.end(), v)) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best_vertex = v;
      }
    }
    scheduled[static_cast<std::size_t>(best_vertex)] = true;
    order.push_back(best_vertex);
    for (std::size_t e = 0; e < instance.edges.size(); ++e) {
      if (covered[e]) continue;
      const std::vector<int>& vs = instance.edges[e].vertices;
      if (std::binary_search(vs.begin(), vs.end(), best_vertex)) covered[e] = true;
    }
  }
  return order;
}

std::vector<int> random_schedule(const Instance& instance, std::uint64_t seed) {
  std::vector<int> order(static_cast<std::size_t>(instance.n));
  std::iota(order.begin(), order.end(), 0);
  SplitMix64 rng(mix_seed(seed ^ 0x73686566ULL));
  shuffle_range(order, 0, order.size(), rng);
  return order;
}

}  // namespace gmssc

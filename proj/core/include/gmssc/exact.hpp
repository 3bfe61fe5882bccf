#pragma once

#include "gmssc/instance.hpp"

#include <cstdint>
#include <vector>

namespace gmssc {

struct ExactResult {
  long long cost = 0;
  std::vector<int> order;  // an optimal permutation
};

// Exact optimum by subset dynamic programming over prefixes, O(2^n n m).
// The cost of a permutation equals the sum over its proper prefixes P of the
// number of edges not yet covered by P. Backtracking breaks ties by lowest
// vertex id, so the returned permutation is deterministic. Throws
// "too-large" for n > 20.
ExactResult exact_opt(const Instance& instance);

// Adaptive greedy for k_e = 1 instances: repeatedly schedule the vertex
// covering the most uncovered edges (ties: lowest id). Throws "not-mssc"
// when some k_e > 1.
std::vector<int> greedy_mssc(const Instance& instance);

// Uniform random permutation baseline, deterministic per seed.
std::vector<int> random_schedule(const Instance& instance, std::uint64_t seed);

}  // namespace gmssc

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmssc/error.hpp"
#include "gmssc/exact.hpp"
#include "gmssc/instance.hpp"
#include "gmssc/rng.hpp"
#include "gmssc/rounding.hpp"

#include "test_util.hpp"

#include <algorithm>
#include <vector>

using gmssc::ExactResult;
using gmssc::Instance;
using testutil::code_of;
using testutil::make_instance;

TEST_CASE("subset DP on a hand-checked instance") {
  Instance instance = make_instance(2, {{{0}, 1}, {{0, 1}, 2}});
  ExactResult result = gmssc::exact_opt(instance);
  CHECK(result.cost == 3);
  CHECK(result.order == std::vector<int>{0, 1});
}

TEST_CASE("backtracking ties place the lowest id in the later slot") {
  // Both orders cost 1; the backward walk fixes the last position first and
  // prefers the lowest id there.
  Instance symmetric = make_instance(2, {{{0, 1}, 1}});
  ExactResult result = gmssc::exact_opt(symmetric);
  CHECK(result.cost == 1);
  CHECK(result.order == std::vector<int>{1, 0});
}

TEST_CASE("DP equals exhaustive permutation search") {
  gmssc::SplitMix64 rng(321);
  for (int trial = 0; trial < 40; ++trial) {
    gmssc::GeneratorParams params;
    params.n = 2 + static_cast<int>(rng.below(6));
    params.m = 1 + static_cast<int>(rng.below(6));
    params.s_min = 1;
    params.s_max = std::min(3, params.n);
    params.rule = (trial % 3 == 0) ? gmssc::RequirementRule::full_size
                                   : gmssc::RequirementRule::uniform;
    params.seed = rng.next();
    Instance instance = gmssc::generate(params);

    ExactResult result = gmssc::exact_opt(instance);
    CHECK(result.cost == testutil::brute_force_opt(instance));
    CHECK(gmssc::cover_times(instance, result.order).total == result.cost);
  }
}

TEST_CASE("DP size cap") {
  Instance big = make_instance(21, {{{0}, 1}});
  CHECK(code_of([&] { gmssc::exact_opt(big); }) == "too-large");
}

TEST_CASE("greedy on a hand-checked mssc instance") {
  // Vertex 0 covers two edges at once, so it leads despite the tie on ids.
  Instance instance = make_instance(2, {{{0}, 1}, {{0}, 1}, {{1}, 1}});
  CHECK(gmssc::greedy_mssc(instance) == std::vector<int>{0, 1});
  CHECK(gmssc::cover_times(instance, {0, 1}).total == 4);

  Instance tie = make_instance(2, {{{0}, 1}, {{1}, 1}});
  CHECK(gmssc::greedy_mssc(tie) == std::vector<int>{0, 1});

  Instance gmssc_only = make_instance(2, {{{0, 1}, 2}});
  CHECK(code_of([&] { gmssc::greedy_mssc(gmssc_only); }) == "not-mssc");
}

TEST_CASE("greedy always takes a maximum-gain vertex, lowest id first") {
  gmssc::SplitMix64 rng(888);
  for (int trial = 0; trial < 40; ++trial) {
    gmssc::GeneratorParams params;
    params.n = 3 + static_cast<int>(rng.below(6));
    params.m = 2 + static_cast<int>(rng.below(6));
    params.s_min = 1;
    params.s_max = 3;
    params.rule = gmssc::RequirementRule::all_ones;
    params.seed = rng.next();
    Instance instance = gmssc::generate(params);

    std::vector<int> order = gmssc::greedy_mssc(instance);
    std::vector<bool> covered(instance.edges.size(), false);
    std::vector<bool> scheduled(static_cast<std::size_t>(instance.n), false);
    for (int v : order) {
      auto gain_of = [&](int w) {
        int gain = 0;
        for (std::size_t e = 0; e < instance.edges.size(); ++e) {
          if (covered[e]) continue;
          const std::vector<int>& vs = instance.edges[e].vertices;
          gain += std::binary_search(vs.begin(), vs.end(), w) ? 1 : 0;
        }
        return gain;
      };
      int gain = gain_of(v);
      for (int w = 0; w < instance.n; ++w) {
        if (scheduled[static_cast<std::size_t>(w)] || w == v) continue;
        int other = gain_of(w);
        CHECK(other <= gain);
        if (other == gain) CHECK(v < w);  // ties fall to the lowest id
      }
      scheduled[static_cast<std::size_t>(v)] = true;
      for (std::size_t e = 0; e < instance.edges.size(); ++e) {
        if (covered[e]) continue;
        const std::vector<int>& vs = instance.edges[e].vertices;
        if (std::binary_search(vs.begin(), vs.end(), v)) covered[e] = true;
      }
    }
  }
}

TEST_CASE("random baseline is a seeded permutation") {
  Instance instance = make_instance(6, {{{0, 1, 2}, 2}});
  std::vector<int> a = gmssc::random_schedule(instance, 11);
  std::vector<int> b = gmssc::random_schedule(instance, 11);
  std::vector<int> c = gmssc::random_schedule(instance, 12);
  CHECK(a == b);
  CHECK(a != c);
  std::vector<int> sorted = a;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK_NOTHROW(gmssc::cover_times(instance, a));
}

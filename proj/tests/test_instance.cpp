#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gmssc/error.hpp"
#include "gmssc/instance.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <set>
#include <string>

using gmssc::error;
using gmssc::GeneratorParams;
using gmssc::Instance;
using gmssc::RequirementRule;
using testutil::code_of;

TEST_CASE("validate accepts a well-formed instance and sorts edges") {
  Instance raw;
  raw.n = 4;
  raw.edges.push_back({{3, 1, 0}, 2});
  Instance checked = gmssc::validate(raw);
  CHECK(checked.edges[0].vertices == std::vector<int>{0, 1, 3});
  CHECK(checked.edges[0].k == 2);
}

TEST_CASE("validate rejects bad requirements and vertices") {
  Instance a;
  a.n = 2;
  a.edges.push_back({{0, 1}, 3});
  CHECK(code_of([&] { gmssc::validate(a); }) == "bad-k");

  Instance b;
  b.n = 2;
  b.edges.push_back({{0, 1}, 0});
  CHECK(code_of([&] { gmssc::validate(b); }) == "bad-k");

  Instance c;
  c.n = 1;
  c.edges.push_back({{0, 5}, 1});
  CHECK(code_of([&] { gmssc::validate(c); }) == "bad-vertex");

  Instance d;
  d.n = 3;
  d.edges.push_back({{1, 1}, 1});
  CHECK(code_of([&] { gmssc::validate(d); }) == "bad-vertex");

  Instance e;
  e.n = 0;
  CHECK(code_of([&] { gmssc::validate(e); }) == "bad-vertex");

  Instance f;
  f.n = 3;
  CHECK(code_of([&] { gmssc::validate(f); }) == "empty-instance");
}

TEST_CASE("generate is deterministic and honors parameters") {
  GeneratorParams params;
  params.n = 9;
  params.m = 7;
  params.s_min = 2;
  params.s_max = 5;
  params.rule = RequirementRule::uniform;
  params.seed = 12345;

  Instance first = gmssc::generate(params);
  Instance second = gmssc::generate(params);
  CHECK(first == second);
  CHECK(gmssc::write_instance(first) == gmssc::write_instance(second));

  params.seed = 54321;
  CHECK_FALSE(gmssc::generate(params) == first);
}

TEST_CASE("generated instances satisfy every invariant across seeds") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GeneratorParams params;
    params.n = 3 + static_cast<int>(seed % 8);
    params.m = 1 + static_cast<int>(seed % 5);
    params.s_min = 1;
    params.s_max = std::min(params.n, 4);
    params.rule = seed % 3 == 0   ? RequirementRule::all_ones
                  : seed % 3 == 1 ? RequirementRule::full_size
                                  : RequirementRule::uniform;
    params.seed = seed;

    Instance instance = gmssc::generate(params);
    REQUIRE(instance.n == params.n);
    REQUIRE(static_cast<int>(instance.edges.size()) == params.m);
    for (const gmssc::Edge& edge : instance.edges) {
      int size = static_cast<int>(edge.vertices.size());
      CHECK(size >= params.s_min);
      CHECK(size <= params.s_max);
      CHECK(edge.k >= 1);
      CHECK(edge.k <= size);
      if (params.rule == RequirementRule::all_ones) CHECK(edge.k == 1);
      if (params.rule == RequirementRule::full_size) CHECK(edge.k == size);
      CHECK(std::is_sorted(edge.vertices.begin(), edge.vertices.end()));
      std::set<int> distinct(edge.vertices.begin(), edge.vertices.end());
      CHECK(static_cast<int>(distinct.size()) == size);
      CHECK(edge.vertices.front() >= 0);
      CHECK(edge.vertices.back() < params.n);
    }
  }
}

TEST_CASE("generate rejects impossible size ranges") {
  GeneratorParams params;
  params.n = 3;
  params.m = 2;
  params.s_min = 1;
  params.s_max = 4;
  CHECK(code_of([&] { gmssc::generate(params); }) == "infeasible-params");

  params.s_max = 2;
  params.s_min = 0;
  CHECK(code_of([&] { gmssc::generate(params); }) == "infeasible-params");

  params.s_min = 1;
  params.m = 0;
  CHECK(code_of([&] { gmssc::generate(params); }) == "infeasible-params");
}

TEST_CASE("instance text round trips") {
  std::string text = "gmssc v1\n3 2\n1 0\n2 1 2\n";
  Instance instance = gmssc::read_instance(text);
  CHECK(instance.n == 3);
  REQUIRE(instance.edges.size() == 2);
  CHECK(instance.edges[0].vertices == std::vector<int>{0});
  CHECK(instance.edges[0].k == 1);
  CHECK(instance.edges[1].vertices == std::vector<int>{1, 2});
  CHECK(instance.edges[1].k == 2);
  CHECK(gmssc::write_instance(instance) == text);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GeneratorParams params;
    params.n = 5;
    params.m = 4;
    params.s_min = 1;
    params.s_max = 3;
    params.seed = seed;
    Instance generated = gmssc::generate(params);
    CHECK(gmssc::read_instance(gmssc::write_instance(generated)) == generated);
  }
}

TEST_CASE("read_instance rejects malformed input with line numbers") {
  auto code_and_message = [](const std::string& text) {
    try {
      gmssc::read_instance(text);
    } catch (const error& e) {
      return std::string(e.what());
    }
    return std::string();
  };

  CHECK(code_of([] { gmssc::read_instance("gmssc v2\n1 1\n1 0\n"); }) ==
        "parse-error");
  CHECK(code_of([] { gmssc::read_instance(""); }) == "parse-error");
  CHECK(code_of([] { gmssc::read_instance("gmssc v1\n2\n1 0\n"); }) ==
        "parse-error");
  CHECK(code_of([] { gmssc::read_instance("gmssc v1\n2 2\n1 0\n"); }) ==
        "parse-error");
  CHECK(code_of([] { gmssc::read_instance("gmssc v1\n2 1\n1 zero\n"); }) ==
        "parse-error");
  CHECK(code_of([] { gmssc::read_instance("gmssc v1\n2 1\n1 0\nextra\n"); }) ==
        "parse-error");
  CHECK(code_of([] { gmssc::read_instance("gmssc v1\n2 1\n3 0 1\n"); }) ==
        "parse-error");  // k exceeds edge size, surfaced at read time

  CHECK(code_and_message("gmssc v1\n2 1\n1 zero\n").find("line 3") !=
        std::string::npos);
  CHECK(code_and_message("gmssc v2\n").find("line 1") != std::string::npos);
}

TEST_CASE("duplicate edges are kept as distinct entries") {
  Instance instance = testutil::make_instance(2, {{{0}, 1}, {{0}, 1}, {{1}, 1}});
  CHECK(instance.edges.size() == 3);
  CHECK(instance.edges[0] == instance.edges[1]);
}

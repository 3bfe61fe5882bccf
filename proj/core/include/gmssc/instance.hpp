#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gmssc {

// A hyperedge with a covering requirement: the edge is covered at the first
// position of a schedule where k of its vertices have appeared.
struct Edge {
  std::vector<int> vertices;  // distinct ids in [0, n), kept sorted
  int k = 1;                  // 1 <= k <= |vertices|
};

// n vertices with ids 0..n-1 and a list of hyperedges. Duplicate edges are
// meaningful (the objective sums over edges) and are kept as distinct
// entries. Treated as immutable once validated.
struct Instance {
  int n = 0;
  std::vector<Edge> edges;
};

enum class RequirementRule {
  all_ones,   // k_e = 1
  full_size,  // k_e = |e|
  uniform,    // k_e uniform in [1, |e|]
};

struct GeneratorParams {
  int n = 1;
  int m = 1;
  int s_min = 1;  // edge sizes drawn uniformly from [s_min, s_max]
  int s_max = 1;
  RequirementRule rule = RequirementRule::uniform;
  std::uint64_t seed = 0;
};

// Checks structural invariants and returns the instance with each edge's
// vertex list sorted. Throws "bad-k", "bad-vertex" or "empty-instance".
Instance validate(Instance instance);

// Deterministic random instance; identical params give an identical
// instance. Throws "infeasible-params" when the size range does not fit n.
Instance generate(const GeneratorParams& params);

// Text format, whitespace separated, one record per line:
//   gmssc v1
//   <n> <m>
//   <k_e> <v_1> ... <v_s>     (m lines, 0-based vertex ids)
// read_instance throws "parse-error" with a line number on malformed input.
Instance read_instance(const std::string& text);
std::string write_instance(const Instance& instance);
Instance read_instance_file(const std::string& path);
void write_instance_file(const Instance& instance, const std::string& path);

bool operator==(const Edge& a, const Edge& b);
bool operator==(const Instance& a, const Instance& b);

}  // namespace gmssc

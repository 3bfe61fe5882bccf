#include "gmssc/instance.hpp"

#include "gmssc/error.hpp"
#include "gmssc/rng.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

namespace gmssc {

Instance validate(Instance instance) {
  if (instance.n < 1) {
    throw error("bad-vertex", "instance needs at least one vertex, n = " +
                                  std::to_string(instance.n));
  }
  if (instance.edges.empty()) {
    throw error("empty-instance", "instance needs at least one edge");
  }
  for (std::size_t e = 0; e < instance.edges.size(); ++e) {
    Edge& edge = instance.edges[e];
    std::sort(edge.vertices.begin(), edge.vertices.end());
    for (std::size_t i = 0; i < edge.vertices.size(); ++i) {
      int v = edge.vertices[i];
      if (v < 0 || v >= instance.n) {
        throw error("bad-vertex", "edge " + std::to_string(e) +
                                      " references vertex " + std::to_string(v) +
                                      " outside [0, " +
                                      std::to_string(instance.n) + ")");
      }
      if (i > 0 && edge.vertices[i - 1] == v) {
        throw error("bad-vertex", "edge " + std::to_string(e) +
                                      " repeats vertex " + std::to_string(v));
      }
    }
    if (edge.k < 1 || edge.k > static_cast<int>(edge.vertices.size())) {
      throw error("bad-k", "edge " + std::to_string(e) + " has k = " +
                               std::to_string(edge.k) + " with " +
                               std::to_string(edge.vertices.size()) +
                               " vertices");
    }
  }
  return instance;
}

Instance generate(const GeneratorParams& params) {
  if (params.n < 1 || params.m < 1 || params.s_min < 1 ||
      params.s_min > params.s_max || params.s_max > params.n) {
    throw error("infeasible-params",
                "need 1 <= s_min <= s_max <= n and m >= 1, got n = " +
                    std::to_string(params.n) + ", m = " +
                    std::to_string(params.m) + ", sizes [" +
                    std::to_string(params.s_min) + ", " +
                    std::to_string(params.s_max) + "]");
  }
  SplitMix64 rng(mix_seed(params.seed));
  Instance instance;
  instance.n = params.n;
  instance.edges.reserve(static_cast<std::size_t>(params.m));
  std::vector<int> pool(static_cast<std::size_t>(params.n));
  for (int v = 0; v < params.n; ++v) pool[static_cast<std::size_t>(v)] = v;
  for (int e = 0; e < params.m; ++e) {
    int size = params.s_min +
               static_cast<int>(rng.below(
                   static_cast<std::uint64_t>(params.s_max - params.s_min + 1)));
    // Partial Fisher-Yates: the first `size` entries form a uniform subset.
    for (int i = 0; i < size; ++i) {
      int j = i + static_cast<int>(
                      rng.below(static_cast<std::uint64_t>(params.n - i)));
      std::swap(pool[static_cast<std::size_t>(i)],
                pool[static_cast<std::size_t>(j)]);
    }
    Edge edge;
    edge.vertices.assign(pool.begin(), pool.begin() + size);
    switch (params.rule) {
      case RequirementRule::all_ones:
        edge.k = 1;
        break;
      case RequirementRule::full_size:
        edge.k = size;
        break;
      case RequirementRule::uniform:
        edge.k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(size)));
        break;
    }
    instance.edges.push_back(std::move(edge));
  }
  return validate(std::move(instance));
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw error("parse-error", "line " + std::to_string(line) + ": " + what);
}

int parse_int(const std::string& token, int line, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    parse_fail(line, std::string("expected ") + what + ", got '" + token + "'");
  }
  if (used != token.size()) {
    parse_fail(line, std::string("expected ") + what + ", got '" + token + "'");
  }
  return value;
}

}  // namespace

Instance read_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  auto next_line = [&](const char* what) {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return;
    }
    ++line_no;
    parse_fail(line_no, std::string("missing ") + what);
  };

  next_line("header");
  {
    std::istringstream ls(line);
    std::string magic, version, extra;
    ls >> magic >> version;
    if (!ls || magic != "gmssc" || version != "v1" || (ls >> extra)) {
      parse_fail(line_no, "expected header 'gmssc v1'");
    }
  }

  next_line("vertex and edge counts");
  Instance instance;
  int m = 0;
  {
    std::istringstream ls(line);
    std::string a, b, extra;
    ls >> a >> b;
    if (!ls || (ls >> extra)) parse_fail(line_no, "expected '<n> <m>'");
    instance.n = parse_int(a, line_no, "vertex count");
    m = parse_int(b, line_no, "edge count");
  }
  if (instance.n < 1) parse_fail(line_no, "vertex count must be positive");
  if (m < 1) parse_fail(line_no, "edge count must be positive");

  for (int e = 0; e < m; ++e) {
    next_line("edge line");
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.size() < 2) {
      parse_fail(line_no, "edge line needs '<k> <v...>' with at least one vertex");
    }
    Edge edge;
    edge.k = parse_int(tokens[0], line_no, "requirement k");
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      edge.vertices.push_back(parse_int(tokens[i], line_no, "vertex id"));
    }
    instance.edges.push_back(std::move(edge));
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      parse_fail(line_no, "trailing content after last edge");
    }
  }

  try {
    return validate(std::move(instance));
  } catch (const error& err) {
    throw error("parse-error", err.what());
  }
}

std::string write_instance(const Instance& instance) {
  std::ostringstream out;
  out << "gmssc v1\n";
  out << instance.n << ' ' << instance.edges.size() << '\n';
  for (const Edge& edge : instance.edges) {
    out << edge.k;
    for (int v : edge.vertices) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("io-error", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_instance(buf.str());
}

void write_instance_file(const Instance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("io-error", "cannot open '" + path + "' for writing");
  out << write_instance(instance);
}

bool operator==(const Edge& a, const Edge& b) {
  return a.k == b.k && a.vertices == b.vertices;
}

bool operator==(const Instance& a, const Instance& b) {
  return a.n == b.n && a.edges == b.edges;
}

}  // namespace gmssc

#pragma once

#include <utility>
#include <vector>

namespace gmssc {

enum class RowSense { le, ge, eq };

struct LpRow {
  std::vector<std::pair<int, double>> coeffs;  // (variable index, coefficient)
  RowSense sense = RowSense::le;
  double rhs = 0.0;
};

// Minimization LP in natural form: min c.x subject to rows, x >= 0.
// Rows are stored sparsely; variables are identified by insertion order.
struct LpModel {
  int num_vars = 0;
  std::vector<double> objective;
  std::vector<LpRow> rows;

  int add_variable(double cost);
  void add_row(std::vector<std::pair<int, double>> coeffs, RowSense sense,
               double rhs);
};

}  // namespace gmssc

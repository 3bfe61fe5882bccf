#include "gmssc/lp_model.hpp"

#include "gmssc/error.hpp"

#include <cmath>
#include <string>

namespace gmssc {

int LpModel::add_variable(double cost) {
  objective.push_back(cost);
  return num_vars++;
}

void LpModel::add_row(std::vector<std::pair<int, double>> coeffs,
                      RowSense sense, double rhs) {
  if (!std::isfinite(rhs)) throw error("bad-row", "rhs must be finite");
  for (const auto& [var, coeff] : coeffs) {
    if (var < 0 || var >= num_vars) {
      throw error("bad-row", "row references undeclared variable " +
                                 std::to_string(var));
    }
    if (!std::isfinite(coeff)) throw error("bad-row", "coefficient must be finite");
  }
  rows.push_back(LpRow{std::move(coeffs), sense, rhs});
}

}  // namespace gmssc

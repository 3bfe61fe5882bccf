#include "gmssc/simplex.hpp"

#include "gmssc/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace gmssc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Dense standard-form tableau: rows of [A | b] plus a reduced-cost row
// [r | -objective]. Column order: model variables, slack/surplus columns,
// artificial columns.
class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols), width_(cols + 1),
        a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols + 1),
           0.0),
        cost_(static_cast<std::size_t>(cols + 1), 0.0),
        basis_(static_cast<std::size_t>(rows), -1) {}

  double* row(int i) { return a_.data() + static_cast<std::size_t>(i) * width_; }
  const double* row(int i) const {
    return a_.data() + static_cast<std::size_t>(i) * width_;
  }
  double& at(int i, int j) { return row(i)[j]; }
  double rhs(int i) const { return row(i)[cols_]; }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int basis(int i) const { return basis_[static_cast<std::size_t>(i)]; }
  void set_basis(int i, int var) { basis_[static_cast<std::size_t>(i)] = var; }

  std::vector<double>& cost() { return cost_; }
  double reduced_cost(int j) const { return cost_[static_cast<std::size_t>(j)]; }

  void pivot(int r, int s) {
    double* pr = row(r);
    double inv = 1.0 / pr[s];
    for (int j = 0; j <= cols_; ++j) pr[j] *= inv;
    pr[s] = 1.0;  // kill roundoff in the pivot column
    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      eliminate(row(i), pr, s);
    }
    eliminate(cost_.data(), pr, s);
    basis_[static_cast<std::size_t>(r)] = s;
  }

  // Moves the last row into slot i and drops the last row.
  void drop_row(int i) {
    if (i != rows_ - 1) {
      std::copy(row(rows_ - 1), row(rows_ - 1) + width_, row(i));
      basis_[static_cast<std::size_t>(i)] = basis_[static_cast<std::size_t>(rows_ - 1)];
    }
    --rows_;
    basis_.pop_back();
  }

 private:
  void eliminate(double* target, const double* pivot_row, int s) {
    double factor = target[s];
    if (factor == 0.0) return;
    for (int j = 0; j <= cols_; ++j) target[j] -= factor * pivot_row[j];
    target[s] = 0.0;
  }

  int rows_;
  int cols_;
  int width_;
  std::vector<double> a_;
  std::vector<double> cost_;
  std::vector<int> basis_;
};

class Solver {
 public:
  Solver(const LpModel& model, const SimplexOptions& options)
      : model_(model), options_(options) {
    build();
  }

  LpSolution run() {
    LpSolution solution;

    if (artificials_ > 0) {
      setup_phase1_costs();
      LpStatus status = iterate(/*col_limit=*/total_cols_);
      if (status != LpStatus::optimal) {
        solution.status = status;  // iteration limit; phase 1 is never unbounded
        solution.iterations = iterations_;
        return solution;
      }
      double infeasibility = -tableau_->cost()[static_cast<std::size_t>(total_cols_)];
      if (infeasibility > 1e-7) {
        solution.status = LpStatus::infeasible;
        solution.iterations = iterations_;
        return solution;
      }
      purge_artificials();
    }

    setup_phase2_costs();
    LpStatus status = iterate(/*col_limit=*/art_begin_);
    solution.status = status;
    solution.iterations = iterations_;
    if (status != LpStatus::optimal) return solution;

    solution.values.assign(static_cast<std::size_t>(model_.num_vars), 0.0);
    for (int i = 0; i < tableau_->rows(); ++i) {
      int var = tableau_->basis(i);
      if (var < model_.num_vars) {
        solution.values[static_cast<std::size_t>(var)] =
            std::max(tableau_->rhs(i), 0.0);
      }
    }
    double objective = 0.0;
    for (int j = 0; j < model_.num_vars; ++j) {
      objective += model_.objective[static_cast<std::size_t>(j)] *
                   solution.values[static_cast<std::size_t>(j)];
    }
    solution.objective = objective;
    return solution;
  }

 private:
  void build() {
    int m = static_cast<int>(model_.rows.size());

    // Column layout: structural, then one slack/surplus per inequality row,
    // then one artificial per row that needs one.
    slack_begin_ = model_.num_vars;
    int slacks = 0;
    for (const LpRow& r : model_.rows) {
      if (r.sense != RowSense::eq) ++slacks;
    }
    art_begin_ = slack_begin_ + slacks;

    // Rows whose slack cannot serve as the initial basic variable get an
    // artificial: ge/eq rows, and le rows with negative rhs (which flip).
    artificials_ = 0;
    for (const LpRow& r : model_.rows) {
      bool flipped = r.rhs < 0.0;
      RowSense sense = r.sense;
      if (flipped && sense != RowSense::eq) {
        sense = sense == RowSense::le ? RowSense::ge : RowSense::le;
      }
      if (sense != RowSense::le) ++artificials_;
    }
    total_cols_ = art_begin_ + artificials_;

    tableau_.emplace(m, total_cols_);
    Tableau& t = *tableau_;

    int slack = slack_begin_;
    int artificial = art_begin_;
    for (int i = 0; i < m; ++i) {
      const LpRow& r = model_.rows[static_cast<std::size_t>(i)];
      double sign = r.rhs < 0.0 ? -1.0 : 1.0;
      RowSense sense = r.sense;
      if (sign < 0.0 && sense != RowSense::eq) {
        sense = sense == RowSense::le ? RowSense::ge : RowSense::le;
      }
      for (const auto& [var, coeff] : r.coeffs) t.at(i, var) += sign * coeff;
      t.at(i, total_cols_) = sign * r.rhs;
      if (r.sense != RowSense::eq) {
        t.at(i, slack) = sense == RowSense::le ? 1.0 : -1.0;
        ++slack;
      }
      if (sense == RowSense::le) {
        t.set_basis(i, slack - 1);
      } else {
        t.at(i, artificial) = 1.0;
        t.set_basis(i, artificial);
        ++artificial;
      }
    }
  }

  void setup_phase1_costs() {
    Tableau& t = *tableau_;
    std::vector<double>& cost = t.cost();
    std::fill(cost.begin(), cost.end(), 0.0);
    for (int j = art_begin_; j < total_cols_; ++j) {
      cost[static_cast<std::size_t>(j)] = 1.0;
    }
    reduce_cost_row();
  }

  void setup_phase2_costs() {
    Tableau& t = *tableau_;
    std::vector<double>& cost = t.cost();
    std::fill(cost.begin(), cost.end(), 0.0);
    for (int j = 0; j < model_.num_vars; ++j) {
      cost[static_cast<std::size_t>(j)] = model_.objective[static_cast<std::size_t>(j)];
    }
    reduce_cost_row();
  }

  // Subtracts basic rows from the cost row so basic columns price to zero.
  void reduce_cost_row() {
    Tableau& t = *tableau_;
    std::vector<double>& cost = t.cost();
    for (int i = 0; i < t.rows(); ++i) {
      double c = cost[static_cast<std::size_t>(t.basis(i))];
      if (c == 0.0) continue;
      const double* row = t.row(i);
      for (int j = 0; j <= t.cols(); ++j) {
        cost[static_cast<std::size_t>(j)] -= c * row[j];
      }
      cost[static_cast<std::size_t>(t.basis(i))] = 0.0;
    }
  }

  LpStatus iterate(int col_limit) {
    Tableau& t = *tableau_;
    const double tol = options_.pivot_tol;
    for (;;) {
      if (iterations_ >= options_.max_iterations) return LpStatus::iteration_limit;

      int enter = -1;
      if (bland_) {
        for (int j = 0; j < col_limit; ++j) {
          if (t.reduced_cost(j) < -tol) { enter = j; break; }
        }
      } else {
        double best = -tol;
        for (int j = 0; j < col_limit; ++j) {
          double rc = t.reduced_cost(j);
          if (rc < best) { best = rc; enter = j; }
        }
      }
      if (enter < 0) return LpStatus::optimal;

      int leave = -1;
      double best_ratio = kInf;
      for (int i = 0; i < t.rows(); ++i) {
        double a = t.row(i)[enter];
        if (a <= tol) continue;
        double ratio = std::max(t.rhs(i), 0.0) / a;
        if (ratio < best_ratio - 1e-12) {
          best_ratio = ratio;
          leave = i;
        } else if (ratio < best_ratio + 1e-12 &&
                   (leave < 0 || t.basis(i) < t.basis(leave))) {
          leave = i;  // Bland-compatible tie break: smallest basic variable
          best_ratio = std::min(best_ratio, ratio);
        }
      }
      if (leave < 0) return LpStatus::unbounded;

      bool degenerate = best_ratio <= tol;
      t.pivot(leave, enter);
      ++iterations_;
      if (degenerate) {
        if (++stall_ >= kStallLimit) bland_ = true;
      } else {
        stall_ = 0;
      }
    }
  }

  // After phase 1, pivot leftover artificial basics out on any structural or
  // slack column; rows admitting no such pivot are redundant and dropped.
  void purge_artificials() {
    Tableau& t = *tableau_;
    const double tol = options_.pivot_tol;
    for (int i = t.rows() - 1; i >= 0; --i) {
      if (t.basis(i) < art_begin_) continue;
      int col = -1;
      double best = tol;
      for (int j = 0; j < art_begin_; ++j) {
        double a = std::fabs(t.row(i)[j]);
        if (a > best) { best = a; col = j; }
      }
      if (col >= 0) {
        t.pivot(i, col);
      } else {
        t.drop_row(i);
      }
    }
  }

  static constexpr int kStallLimit = 64;

  const LpModel& model_;
  SimplexOptions options_;
  std::optional<Tableau> tableau_;
  int slack_begin_ = 0;
  int art_begin_ = 0;
  int artificials_ = 0;
  int total_cols_ = 0;
  long long iterations_ = 0;
  int stall_ = 0;
  bool bland_ = false;
};

}  // namespace

LpSolution simplex_solve(const LpModel& model, const SimplexOptions& options) {
  Solver solver(model, options);
  return solver.run();
}

LpSolution solve_lp(const LpModel& model, double pivot_tol) {
  SimplexOptions options;
  options.pivot_tol = pivot_tol;
  LpSolution solution = simplex_solve(model, options);
  switch (solution.status) {
    case LpStatus::optimal:
      return solution;
    case LpStatus::infeasible:
      throw error("infeasible", "no point satisfies all rows");
    case LpStatus::unbounded:
      throw error("unbounded", "objective decreases without bound");
    case LpStatus::iteration_limit:
      throw error("iteration-limit",
                  "simplex exceeded " +
                      std::to_string(options.max_iterations) + " pivots (" +
                      std::to_string(solution.iterations) + " done)");
  }
  throw error("internal", "unreachable simplex status");
}

}  // namespace gmssc

#include "gmssc/tail_bounds.hpp"

#include "gmssc/error.hpp"
#include "gmssc/format.hpp"
#include "gmssc/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace gmssc {

namespace {

constexpr double kPi = 3.14159265358979323846;

// log of Pr[Poisson(lambda) < k], by log-sum-exp over the k leading terms.
double log_poisson_tail(double lambda, int k) {
  if (lambda == 0.0) return 0.0;
  double log_lambda = std::log(lambda);
  double peak = -std::numeric_limits<double>::infinity();
  std::vector<double> logs(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    logs[static_cast<std::size_t>(i)] = i * log_lambda - std::lgamma(i + 1.0);
    peak = std::max(peak, logs[static_cast<std::size_t>(i)]);
  }
  double sum = 0.0;
  for (double lg : logs) sum += std::exp(lg - peak);
  return peak + std::log(sum) - lambda;
}

// Exact Pr[Binomial(n,p) <= c] with terms assembled in log space.
double binomial_cdf(int n, double p, int c) {
  if (c < 0) return 0.0;
  if (c >= n) return 1.0;
  if (p <= 0.0) return 1.0;
  if (p >= 1.0) return 0.0;
  double log_p = std::log(p);
  double log_q = std::log1p(-p);
  double sum = 0.0;
  for (int i = 0; i <= c; ++i) {
    double lg = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) -
                std::lgamma(n - i + 1.0) + i * log_p + (n - i) * log_q;
    sum += std::exp(lg);
  }
  return std::min(sum, 1.0);
}

}  // namespace

double p_k_anchor(int k) {
  if (k < 1) throw error("bad-k", "need k >= 1, got " + std::to_string(k));
  return (k - 1.0) / k;
}

double p_k_bound(int k, double x) {
  double anchor = p_k_anchor(k);
  if (!(x > 1.0)) return 1.0;
  return std::exp(-std::sqrt(static_cast<double>(k)) * (x - anchor));
}

double binomial_tail(int n, double p, int c) {
  if (n < 1) throw error("domain-error", "need n >= 1, got " + std::to_string(n));
  if (!(p >= 0.0 && p <= 1.0)) {
    throw error("domain-error", "need p in [0,1], got " + std::to_string(p));
  }
  if (c < 0 || c > n) {
    throw error("domain-error", "need c in [0,n], got c = " + std::to_string(c) +
                                    ", n = " + std::to_string(n));
  }
  double mean = n * p;
  if (c <= mean - 1.0) return binomial_cdf(n, p, c);
  if (mean <= static_cast<double>(c)) return 1.0;
  // mean - 1 < c < mean: condition on s successes being forced and take the
  // worst shifted binomial.
  double best = 0.0;
  for (int s = 0; s <= c; ++s) {
    double q = (mean - s) / static_cast<double>(n - s);
    best = std::max(best, binomial_cdf(n - s, q, c - s));
  }
  return std::min(best, 1.0);
}

double poisson_tail(double lambda, int k) {
  if (k < 1) throw error("domain-error", "need k >= 1, got " + std::to_string(k));
  if (!(lambda >= 0.0)) {
    throw error("domain-error", "need lambda >= 0, got " + std::to_string(lambda));
  }
  if (lambda < 700.0) {
    double term = 1.0;
    double sum = 1.0;
    for (int i = 1; i < k; ++i) {
      term *= lambda / i;
      sum += term;
    }
    return std::exp(-lambda) * sum;
  }
  return std::exp(log_poisson_tail(lambda, k));
}

double poisson_binomial_cdf(const std::vector<double>& p, int c) {
  for (double pi : p) {
    if (!(pi >= 0.0 && pi <= 1.0)) {
      throw error("domain-error",
                  "need probabilities in [0,1], got " + std::to_string(pi));
    }
  }
  if (c < 0) return 0.0;
  int n = static_cast<int>(p.size());
  if (c >= n) return 1.0;
  // dp[j] = Pr[exactly j successes so far], truncated above c.
  std::vector<double> dp(static_cast<std::size_t>(c) + 1, 0.0);
  dp[0] = 1.0;
  for (double pi : p) {
    for (int j = c; j >= 1; --j) {
      dp[static_cast<std::size_t>(j)] =
          dp[static_cast<std::size_t>(j)] * (1.0 - pi) +
          dp[static_cast<std::size_t>(j - 1)] * pi;
    }
    dp[0] *= 1.0 - pi;
  }
  double sum = std::accumulate(dp.begin(), dp.end(), 0.0);
  return std::min(sum, 1.0);
}

DominanceReport verify_dominance(int k_max, int n_max, int grid_seeds) {
  if (k_max < 1 || n_max < k_max || grid_seeds < 1) {
    throw error("domain-error", "need 1 <= k_max <= n_max and grid_seeds >= 1");
  }
  DominanceReport report;
  report.worst_margin = std::numeric_limits<double>::infinity();

  std::vector<double> p;
  for (int k = 1; k <= k_max; ++k) {
    for (int n = k; n <= n_max; ++n) {
      for (int s = 0; s < grid_seeds; ++s) {
        SplitMix64 rng(mix_seed((static_cast<std::uint64_t>(k) << 40) ^
                                (static_cast<std::uint64_t>(n) << 20) ^
                                static_cast<std::uint64_t>(s) ^
                                0x67726964ULL));
        p.resize(static_cast<std::size_t>(n));
        double mean = 0.0;
        for (double& pi : p) {
          pi = rng.uniform01();
          mean += pi;
        }

        DominanceRow row;
        row.k = k;
        row.n = n;
        row.seed = static_cast<std::uint64_t>(s);
        row.exact = poisson_binomial_cdf(p, k - 1);
        row.p_k = p_k_bound(k, mean / k);
        row.binomial = binomial_tail(n, mean / n, k - 1);
        row.poisson = poisson_tail(mean, k);

        double margin = std::min({row.p_k - row.exact,
                                  row.binomial - row.exact,
                                  row.p_k - row.poisson});
        // The Poisson step of the chain is only claimed in the regime where
        // the binomial tail is its exact-CDF branch.
        if (k - 1 <= mean - 1.0) {
          margin = std::min(margin, row.poisson - row.binomial);
        }
        row.margin = margin;

        if (margin < -1e-12) {
          throw error("dominance-violated",
                      "k = " + std::to_string(k) + ", n = " + std::to_string(n) +
                          ", seed = " + std::to_string(s) + ": exact " +
                          csv_double(row.exact) + ", binomial " +
                          csv_double(row.binomial) + ", poisson " +
                          csv_double(row.poisson) + ", p_k " +
                          csv_double(row.p_k));
        }
        report.worst_margin = std::min(report.worst_margin, margin);
        report.rows.push_back(row);
        ++report.checks;
      }
    }
  }
  return report;
}

std::string dominance_csv(const DominanceReport& report) {
  std::ostringstream out;
  out << "k,n,seed,exact,p_k,binomial,poisson,margin\n";
  for (const DominanceRow& row : report.rows) {
    out << row.k << ',' << row.n << ',' << row.seed << ','
        << csv_double(row.exact) << ',' << csv_double(row.p_k) << ','
        << csv_double(row.binomial) << ',' << csv_double(row.poisson) << ','
        << csv_double(row.margin) << '\n';
  }
  return out.str();
}

double tail_ratio(int k, double x) {
  double anchor = p_k_anchor(k);
  double lambda = k * x;
  if (!(x > 1.0)) return std::exp(log_poisson_tail(lambda, k));
  double log_bound = -std::sqrt(static_cast<double>(k)) * (x - anchor);
  return std::exp(log_poisson_tail(lambda, k) - log_bound);
}

double tail_ratio_stationary_value(int k, double t) {
  if (k < 2) throw error("bad-k", "need k >= 2, got " + std::to_string(k));
  double rk = std::sqrt(static_cast<double>(k));
  double lg = 0.5 * std::log(static_cast<double>(k)) +
              (k - 1.0) * std::log(k * t) - std::lgamma(static_cast<double>(k)) +
              (rk - k) * t - (k - 1.0) / rk;
  return std::exp(lg);
}

double tail_ratio_stationary_point(int k) {
  if (k < 2) throw error("bad-k", "need k >= 2, got " + std::to_string(k));
  double rk = std::sqrt(static_cast<double>(k));
  return (k - 1.0) / (k - rk);
}

double tail_ratio_stationary_max(int k) {
  if (k < 2) throw error("bad-k", "need k >= 2, got " + std::to_string(k));
  double rk = std::sqrt(static_cast<double>(k));
  double lg = k * std::log(rk) + (k - 1.0) * std::log(rk + 1.0) -
              std::lgamma(static_cast<double>(k)) - (k - 1.0) / rk -
              (k - 1.0);
  return std::exp(lg);
}

double tail_ratio_stirling_bound(int k) {
  if (k < 2) throw error("bad-k", "need k >= 2, got " + std::to_string(k));
  double rk = std::sqrt(static_cast<double>(k));
  return std::exp(0.5 + 1.0 / rk) * std::sqrt(k / (2.0 * kPi * (k - 1.0)));
}

TailRatioAudit verify_exponential_bound(int k) {
  if (k < 2) throw error("bad-k", "need k >= 2, got " + std::to_string(k));
  TailRatioAudit audit;
  audit.k = k;
  audit.at_anchor = tail_ratio(k, p_k_anchor(k));
  audit.stationary_max = tail_ratio_stationary_max(k);
  audit.stirling = tail_ratio_stirling_bound(k);

  const int points = 2048;
  const double lo = p_k_anchor(k);
  const double hi = 50.0;
  double grid_max = 0.0;
  for (int i = 0; i < points; ++i) {
    double x = lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1));
    grid_max = std::max(grid_max, tail_ratio(k, x));
  }
  double t0 = tail_ratio_stationary_point(k);
  if (t0 >= lo && t0 <= hi) grid_max = std::max(grid_max, tail_ratio(k, t0));
  audit.grid_max = grid_max;

  if (audit.grid_max > 1.0 + 1e-12) {
    throw error("claim-violated", "tail ratio reaches " +
                                      csv_double(audit.grid_max) +
                                      " for k = " + std::to_string(k));
  }
  if (k <= 8 && !(audit.stationary_max < 1.0)) {
    throw error("claim-violated",
                "stationary maximum " + csv_double(audit.stationary_max) +
                    " is not below 1 for k = " + std::to_string(k));
  }
  if (k >= 9 && !(audit.stirling < 1.0)) {
    throw error("claim-violated",
                "stirling bound " + csv_double(audit.stirling) +
                    " is not below 1 for k = " + std::to_string(k));
  }
  return audit;
}

}  // namespace gmssc

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gmssc {

// Exponential tail bound for the probability that fewer than k of the
// first-moment mass x*k successes occur:
//   P^k(x) = exp(-sqrt(k) (x - (k-1)/k))  for x > 1, and 1 otherwise.
// Throws "bad-k" for k < 1.
double p_k_bound(int k, double x);

// The anchor (k-1)/k where the exponent of P^k vanishes.
double p_k_anchor(int k);

// Upper bound on Pr[Binomial(n,p) <= c] that dominates every Poisson
// binomial with the same mean:
//   c <= np - 1 : exact binomial CDF
//   np <= c     : 1
//   otherwise   : max over s in 0..c of the shifted binomial CDF
//                 Pr[Binomial(n-s, (np-s)/(n-s)) <= c-s]
// Throws "domain-error" on p outside [0,1] or c outside [0,n].
double binomial_tail(int n, double p, int c);

// exp(-lambda) sum_{i<k} lambda^i / i!, computed with stable incremental
// terms. Throws "domain-error" on lambda < 0 or k < 1.
double poisson_tail(double lambda, int k);

// Exact Pr[sum_i Bernoulli(p_i) <= c] by dynamic programming in O(n c).
// c < 0 gives 0; c >= n gives 1. Throws "domain-error" on p outside [0,1].
double poisson_binomial_cdf(const std::vector<double>& p, int c);

struct DominanceRow {
  int k = 0;
  int n = 0;
  std::uint64_t seed = 0;
  double exact = 0.0;     // poisson_binomial_cdf(p, k-1)
  double p_k = 0.0;       // p_k_bound(k, mean/k)
  double binomial = 0.0;  // binomial_tail(n, mean/n, k-1)
  double poisson = 0.0;   // poisson_tail(mean, k)
  double margin = 0.0;    // smallest slack across the asserted inequalities
};

struct DominanceReport {
  std::vector<DominanceRow> rows;
  double worst_margin = 0.0;
  long long checks = 0;
};

// Seeded grid of Poisson-binomial queries (k <= k_max, n <= n_max,
// grid_seeds probability vectors each). Asserts the dominance chain
//   exact <= binomial <= p_k  and  poisson <= p_k,
// with binomial <= poisson additionally asserted in the regime
// k - 1 <= mean - 1 where the Poisson comparison is claimed. Throws
// "dominance-violated" with a witness row on any failure beyond 1e-12.
DominanceReport verify_dominance(int k_max, int n_max, int grid_seeds);

// CSV: k,n,seed,exact,p_k,binomial,poisson,margin
std::string dominance_csv(const DominanceReport& report);

// Audit quantities for the claim poisson_tail(kx, k) <= P^k(x):
//   tail_ratio            R(x)  = poisson_tail(kx,k) / P^k(x)
//   stationary value      S(t)  = sqrt(k) (kt)^{k-1}/(k-1)!
//                                 * exp((sqrt(k)-k) t - (k-1)/sqrt(k))
//                         (the derivative bound whose maximum controls R')
//   stationary point      t0    = (k-1)/(k - sqrt(k))
//   stationary max        S(t0) in closed form
//   stirling bound        e^{1/2 + 1/sqrt(k)} sqrt(k / (2 pi (k-1)))
//                         (upper bound on S(t0), decreasing in k)
double tail_ratio(int k, double x);
double tail_ratio_stationary_value(int k, double t);
double tail_ratio_stationary_point(int k);
double tail_ratio_stationary_max(int k);
double tail_ratio_stirling_bound(int k);

struct TailRatioAudit {
  int k = 0;
  double at_anchor = 0.0;       // R((k-1)/k)
  double grid_max = 0.0;        // max R over a log grid on [(k-1)/k, 50]
  double stationary_max = 0.0;  // S(t0)
  double stirling = 0.0;
};

// Evaluates the audit for one k >= 2 ("bad-k" otherwise) and throws
// "claim-violated" if R exceeds 1 + 1e-12 anywhere on the grid, if
// S(t0) >= 1 for k <= 8, or if the Stirling bound >= 1 for k >= 9.
TailRatioAudit verify_exponential_bound(int k);

}  // namespace gmssc

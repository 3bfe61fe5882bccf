#pragma once

#include "gmssc/lp.hpp"

#include <optional>
#include <vector>

namespace gmssc {

enum class KernelKind { gmssc_beta, mlc_alpha };

// Lower-triangular transform z = K x spreading schedule mass forward:
//   gmssc_beta: K(t,t') = beta / t             for t' <= t (row sum = beta)
//   mlc_alpha:  K(t,t') = alpha t' / (t(t+1))  for t' <= t (row sum = alpha/2)
// and K(t,t') = 0 for t' > t.
struct KernelSpec {
  KernelKind kind = KernelKind::gmssc_beta;
  double parameter = 2.043;
  int horizon = 1;  // T_k, the kernel output range t = 1..T_k
};

// Default horizons are chosen so every unit of edge mass placed within
// t <= n is guaranteed to accumulate to 1 before T_k.
KernelSpec gmssc_kernel(int n, double beta);  // T_k = ceil(n e^{1/beta}) + n
KernelSpec mlc_kernel(int n, double alpha);   // T_k = 4n

// K(t,t') for t, t' in 1..T_k. Throws "bad-beta" / "bad-alpha" /
// "bad-horizon" on invalid specs (beta > 1, alpha >= 2, T_k >= 1).
double kernel_entry(const KernelSpec& spec, int t, int t_prime);

struct TransformedSchedule {
  KernelSpec spec;
  std::vector<std::vector<double>> z;         // [n][T_k]
  std::vector<std::vector<double>> z_prefix;  // [n][T_k+1]: z_{v,<i+1}
  std::vector<std::vector<double>> z_edge;    // [m][T_k]; empty if no edges
  std::vector<std::vector<double>> z_edge_prefix;
  std::vector<std::optional<int>> cover_time;  // t_e: first t, z_{e,<=t} >= 1

  int vertex_count() const { return static_cast<int>(z.size()); }
  int horizon() const { return spec.horizon; }

  double z_before(int v, int t) const {  // z_{v,<t}, t in 1..T_k+1
    return z_prefix[v][t - 1];
  }
  double y(int v, int t) const {  // Pr[v scheduled before t] after rounding
    double s = z_before(v, t);
    return s < 1.0 ? s : 1.0;
  }
  double z_edge_before(int e, int t) const { return z_edge_prefix[e][t - 1]; }
};

// x holds per-vertex mass series over t = 1..T with T <= T_k (mass beyond T
// is zero). Cumulative sums use compensated summation. Throws
// "horizon-mismatch" when a series is longer than T_k.
TransformedSchedule apply_kernel(const KernelSpec& spec,
                                 const std::vector<std::vector<double>>& x);

// Kernel applied to a solved schedule, including the induced per-edge series
// x_e(t) = u(e,t) - u(e,t+1) and the edge cover times t_e.
TransformedSchedule transform_schedule(const KernelSpec& spec,
                                       const FractionalSchedule& schedule);

// alpha * sum_{t'<=t} ((t-t')/t) x_e(t'): the telescoped closed form of the
// cumulative transformed edge mass z_{e,<t} under the mlc_alpha kernel,
// evaluated directly from the mass series. Must agree with apply_kernel's
// cumulative at every t in 1..T_k+1.
double mlc_prefix_identity(const KernelSpec& spec,
                           const std::vector<double>& x_edge, int t);

}  // namespace gmssc

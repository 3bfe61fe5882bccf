#include "gmssc/kernel.hpp"

#include "gmssc/error.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace gmssc {

namespace {

void validate_spec(const KernelSpec& spec) {
  if (spec.horizon < 1) {
    throw error("bad-horizon",
                "kernel horizon must be >= 1, got " + std::to_string(spec.horizon));
  }
  if (spec.kind == KernelKind::gmssc_beta && !(spec.parameter > 1.0)) {
    throw error("bad-beta", "gmssc kernel needs beta > 1, got " +
                                std::to_string(spec.parameter));
  }
  if (spec.kind == KernelKind::mlc_alpha && !(spec.parameter >= 2.0)) {
    throw error("bad-alpha", "mlc kernel needs alpha >= 2, got " +
                                 std::to_string(spec.parameter));
  }
}

// Compensated (Kahan) running sum; the cumulative z values feed threshold
// searches, so they must be monotone and drift-free over long horizons.
class CompensatedSum {
 public:
  void add(double value) {
    double y = value - compensation_;
    double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

// z series and prefix for one mass series (mass beyond its length is zero).
void transform_series(const KernelSpec& spec, const std::vector<double>& mass,
                      std::vector<double>& z, std::vector<double>& z_prefix) {
  const int T_k = spec.horizon;
  const int T = static_cast<int>(mass.size());
  z.assign(static_cast<std::size_t>(T_k), 0.0);
  z_prefix.assign(static_cast<std::size_t>(T_k) + 1, 0.0);

  double plain = 0.0;    // sum_{t'<=t} mass(t')
  double weighted = 0.0; // sum_{t'<=t} t' mass(t')
  CompensatedSum cumulative;
  for (int t = 1; t <= T_k; ++t) {
    if (t <= T) {
      plain += mass[static_cast<std::size_t>(t - 1)];
      weighted += static_cast<double>(t) * mass[static_cast<std::size_t>(t - 1)];
    }
    double value = spec.kind == KernelKind::gmssc_beta
                       ? spec.parameter * plain / static_cast<double>(t)
                       : spec.parameter * weighted /
                             (static_cast<double>(t) * (t + 1.0));
    z[static_cast<std::size_t>(t - 1)] = value;
    cumulative.add(value);
    z_prefix[static_cast<std::size_t>(t)] = cumulative.value();
  }
}

}  // namespace

KernelSpec gmssc_kernel(int n, double beta) {
  KernelSpec spec;
  spec.kind = KernelKind::gmssc_beta;
  spec.parameter = beta;
  spec.horizon = static_cast<int>(std::ceil(n * std::exp(1.0 / beta))) + n;
  validate_spec(spec);
  return spec;
}

KernelSpec mlc_kernel(int n, double alpha) {
  KernelSpec spec;
  spec.kind = KernelKind::mlc_alpha;
  spec.parameter = alpha;
  spec.horizon = 4 * n;
  validate_spec(spec);
  return spec;
}

double kernel_entry(const KernelSpec& spec, int t, int t_prime) {
  validate_spec(spec);
  if (t < 1 || t > spec.horizon || t_prime < 1 || t_prime > spec.horizon) {
    throw error("bad-horizon", "kernel entry (" + std::to_string(t) + ", " +
                                   std::to_string(t_prime) +
                                   ") outside 1.." + std::to_string(spec.horizon));
  }
  if (t_prime > t) return 0.0;
  if (spec.kind == KernelKind::gmssc_beta) {
    return spec.parameter / static_cast<double>(t);
  }
  return spec.parameter * static_cast<double>(t_prime) /
         (static_cast<double>(t) * (t + 1.0));
}

TransformedSchedule apply_kernel(const KernelSpec& spec,
                                 const std::vector<std::vector<double>>& x) {
  validate_spec(spec);
  TransformedSchedule out;
  out.spec = spec;
  out.z.resize(x.size());
  out.z_prefix.resize(x.size());
  for (std::size_t v = 0; v < x.size(); ++v) {
    if (static_cast<int>(x[v].size()) > spec.horizon) {
      throw error("horizon-mismatch",
                  "mass series of length " + std::to_string(x[v].size()) +
                      " exceeds kernel horizon " + std::to_string(spec.horizon));
    }
    transform_series(spec, x[v], out.z[v], out.z_prefix[v]);
  }
  return out;
}

TransformedSchedule transform_schedule(const KernelSpec& spec,
                                       const FractionalSchedule& schedule) {
  TransformedSchedule out = apply_kernel(spec, schedule.x);

  const int m = static_cast<int>(schedule.u.size());
  out.z_edge.resize(static_cast<std::size_t>(m));
  out.z_edge_prefix.resize(static_cast<std::size_t>(m));
  out.cover_time.assign(static_cast<std::size_t>(m), std::nullopt);
  std::vector<double> mass(static_cast<std::size_t>(schedule.horizon));
  for (int e = 0; e < m; ++e) {
    for (int t = 1; t <= schedule.horizon; ++t) {
      mass[static_cast<std::size_t>(t - 1)] = schedule.x_edge(e, t);
    }
    transform_series(spec, mass, out.z_edge[static_cast<std::size_t>(e)],
                     out.z_edge_prefix[static_cast<std::size_t>(e)]);
    const std::vector<double>& prefix = out.z_edge_prefix[static_cast<std::size_t>(e)];
    for (int t = 1; t <= spec.horizon; ++t) {
      if (prefix[static_cast<std::size_t>(t)] >= 1.0) {  // z_{e,<=t} >= 1
        out.cover_time[static_cast<std::size_t>(e)] = t;
        break;
      }
    }
  }
  return out;
}

double mlc_prefix_identity(const KernelSpec& spec,
                           const std::vector<double>& x_edge, int t) {
  if (spec.kind != KernelKind::mlc_alpha) {
    throw error("bad-alpha", "prefix identity is specific to the mlc kernel");
  }
  validate_spec(spec);
  if (t < 1 || t > spec.horizon + 1) {
    throw error("bad-horizon", "prefix time " + std::to_string(t) +
                                   " outside 1.." + std::to_string(spec.horizon + 1));
  }
  double sum = 0.0;
  int limit = std::min<int>(t, static_cast<int>(x_edge.size()));
  for (int t_prime = 1; t_prime <= limit; ++t_prime) {
    sum += (static_cast<double>(t - t_prime) / static_cast<double>(t)) *
           x_edge[static_cast<std::size_t>(t_prime - 1)];
  }
  return spec.parameter * sum;
}

}  // namespace gmssc

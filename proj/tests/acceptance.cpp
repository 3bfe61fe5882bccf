// Acceptance gate: exercises every shipped guarantee end to end and prints
// exactly one PASS/FAIL line per criterion. Numeric tolerances and runtime
// budgets are pinned here; the process exits nonzero if any criterion fails.

#include "gmssc/analysis.hpp"
#include "gmssc/exact.hpp"
#include "gmssc/instance.hpp"
#include "gmssc/kernel.hpp"
#include "gmssc/lp.hpp"
#include "gmssc/rounding.hpp"
#include "gmssc/tail_bounds.hpp"

#include "test_util.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

namespace {

constexpr double kBeta = 2.043;
constexpr double kAlpha = 2.0;
constexpr double kGuarantee = 4.509;
constexpr int kTrials = 2000;

struct Outcome {
  bool ok = true;
  std::string detail;
};

bool report(int index, const char* label, double limit_seconds,
            const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome.ok = false;
    outcome.detail = std::string("exception: ") + e.what();
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  bool within_budget = elapsed < limit_seconds;
  bool ok = outcome.ok && within_budget;
  std::printf("%s criterion %d: %s; %s (%.2f s, budget %.0f s)\n",
              ok ? "PASS" : "FAIL", index, label, outcome.detail.c_str(),
              elapsed, limit_seconds);
  std::fflush(stdout);
  return ok;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer), pattern, a, b, c);
  return buffer;
}

// Shared corpus: the LP/DP layer is computed under criterion 4, the kernel
// and Monte Carlo layer under criterion 5, and criterion 6 consumes both.
struct PipelineRun {
  gmssc::Instance instance;
  gmssc::FractionalSchedule schedule;
  long long opt = 0;
  gmssc::TransformedSchedule z;
  std::vector<gmssc::EdgeDiagnostics> diagnostics;
  gmssc::CostReport mc;
};

std::vector<gmssc::Instance> corpus_instances() {
  std::vector<gmssc::Instance> instances;
  instances.reserve(100);
  for (int i = 0; i < 100; ++i) {
    gmssc::GeneratorParams params;
    params.n = 4 + i % 5;
    params.m = 3 + i % 4;
    params.s_min = 1;
    params.s_max = std::min(4, params.n);
    params.rule = gmssc::RequirementRule::uniform;
    params.seed = static_cast<std::uint64_t>(i + 1);
    instances.push_back(gmssc::generate(params));
  }
  return instances;
}

Outcome criterion_ratio_constants() {
  Outcome outcome;
  double at_choice = gmssc::gmssc_ratio(kBeta);
  if (!(at_choice >= 4.5080 && at_choice <= 4.5095)) {
    return {false, fmt("gmssc_ratio(2.043) = %.10g outside [4.5080, 4.5095]",
                       at_choice)};
  }
  gmssc::RatioCurve sweep = gmssc::minimize_ratio(gmssc::Problem::gmssc, 1.5, 3.0, 1e-4);
  if (std::round(sweep.minimum * 1000.0) != 4509.0) {
    return {false, fmt("sweep minimum %.10g does not round to 4.509", sweep.minimum)};
  }
  if (!(sweep.argmin >= 2.03 && sweep.argmin <= 2.06)) {
    return {false, fmt("sweep argmin %.6g outside [2.03, 2.06]", sweep.argmin)};
  }
  if (gmssc::mlc_ratio(2.0) != 2.0) {
    return {false, "mlc_ratio(2) is not exactly 2"};
  }
  gmssc::RatioCurve mlc = gmssc::minimize_ratio(gmssc::Problem::mlc, 2.0, 4.0, 1e-3);
  if (mlc.argmin != 2.0 || mlc.minimum != 2.0) {
    return {false, fmt("mlc sweep minimum %.6g at %.6g, expected 2 at 2",
                       mlc.minimum, mlc.argmin)};
  }
  outcome.detail = fmt("gmssc_ratio(2.043) = %.6f, sweep min %.6f at %.4f",
                       at_choice, sweep.minimum, sweep.argmin) +
                   ", mlc min 2 at 2";
  return outcome;
}

Outcome criterion_dominance() {
  gmssc::DominanceReport report = gmssc::verify_dominance(8, 12, 150);
  if (report.checks < 10000) {
    return {false, fmt("only %.0f queries, need 10000",
                       static_cast<double>(report.checks))};
  }
  long long violations = 0;
  for (const gmssc::DominanceRow& row : report.rows) {
    if (row.exact > row.binomial + 1e-12) ++violations;
    if (row.exact > row.p_k + 1e-12) ++violations;
  }
  if (violations != 0) {
    return {false, fmt("%.0f dominance violations beyond 1e-12",
                       static_cast<double>(violations))};
  }
  return {true, fmt("%.0f queries, zero violations, worst margin %.3g",
                    static_cast<double>(report.checks), report.worst_margin)};
}

Outcome criterion_exponential_claim() {
  double worst_grid = 0.0;
  for (int k = 2; k <= 16; ++k) {
    gmssc::TailRatioAudit audit = gmssc::verify_exponential_bound(k);
    if (audit.at_anchor > 1.0) {
      return {false, fmt("R at the anchor is %.6g > 1 for k = %.0f",
                         audit.at_anchor, static_cast<double>(k))};
    }
    if (audit.grid_max > 1.0 + 1e-12) {
      return {false, fmt("grid max %.6g > 1 + 1e-12 for k = %.0f",
                         audit.grid_max, static_cast<double>(k))};
    }
    if (k <= 8 && !(audit.stationary_max < 1.0)) {
      return {false, fmt("S(t0) = %.6g >= 1 for k = %.0f", audit.stationary_max,
                         static_cast<double>(k))};
    }
    worst_grid = std::max(worst_grid, audit.grid_max);
  }
  for (int k = 9; k <= 64; ++k) {
    double stirling = gmssc::tail_ratio_stirling_bound(k);
    if (!(stirling < 1.0)) {
      return {false, fmt("stirling bound %.6g >= 1 for k = %.0f", stirling,
                         static_cast<double>(k))};
    }
  }
  return {true, fmt("k = 2..16 grid max %.6f, stirling < 1 through k = 64",
                    worst_grid)};
}

Outcome criterion_lp_soundness(std::vector<PipelineRun>& corpus) {
  std::vector<gmssc::Instance> instances = corpus_instances();
  corpus.clear();
  corpus.resize(instances.size());

  double worst_gap = -1e300;
  double worst_violation = -1e300;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    PipelineRun& run = corpus[i];
    run.instance = std::move(instances[i]);
    run.schedule = gmssc::solve_gmssc_lp(run.instance);
    run.opt = gmssc::exact_opt(run.instance).cost;

    double gap = run.schedule.objective - static_cast<double>(run.opt);
    worst_gap = std::max(worst_gap, gap);
    if (gap > 1e-6) {
      return {false, fmt("LP objective exceeds OPT by %.3g on instance %.0f",
                         gap, static_cast<double>(i))};
    }

    std::vector<double> x_prefix(static_cast<std::size_t>(run.instance.n));
    for (int t = 1; t <= run.schedule.horizon + 1; ++t) {
      for (int v = 0; v < run.instance.n; ++v) {
        x_prefix[static_cast<std::size_t>(v)] = run.schedule.x_before(v, t);
      }
      for (std::size_t e = 0; e < run.instance.edges.size(); ++e) {
        testutil::SubsetScanResult scan = testutil::scan_all_subsets(
            run.instance.edges[e], x_prefix,
            run.schedule.u_at(static_cast<int>(e), t));
        for (double violation : scan.worst_violation_by_size) {
          worst_violation = std::max(worst_violation, violation);
          if (violation > 1e-6) {
            return {false,
                    fmt("covering inequality violated by %.3g on instance %.0f",
                        violation, static_cast<double>(i))};
          }
        }
      }
    }
  }
  return {true, fmt("100 instances: worst obj-opt gap %.3g, worst exhaustive "
                    "separation slack %.3g",
                    worst_gap, worst_violation)};
}

Outcome criterion_edge_envelope(std::vector<PipelineRun>& corpus) {
  if (corpus.empty()) return {false, "corpus unavailable (criterion 4 failed)"};
  double tightest = 0.0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    PipelineRun& run = corpus[i];
    gmssc::KernelSpec spec = gmssc::gmssc_kernel(run.instance.n, kBeta);
    run.z = gmssc::transform_schedule(spec, run.schedule);
    run.diagnostics = gmssc::edge_diagnostics(run.instance, run.schedule, run.z);
    gmssc::CzBoundReport bound = gmssc::check_cz_bound(run.diagnostics, kBeta);
    tightest = std::max(tightest, bound.tightest_ratio);

    run.mc = gmssc::estimate_cost(run.z, run.instance, kTrials,
                                  gmssc::trial_seed(424242, static_cast<int>(i)));
    for (std::size_t e = 0; e < run.diagnostics.size(); ++e) {
      double allowed = kBeta * run.diagnostics[e].c_z +
                       3.0 * run.mc.edge_std_error[e];
      if (run.mc.edge_mean[e] > allowed) {
        return {false,
                fmt("edge mean cover %.4f exceeds beta c_z envelope %.4f "
                    "(instance %.0f)",
                    run.mc.edge_mean[e], allowed, static_cast<double>(i))};
      }
    }
  }
  return {true, fmt("100 instances x 2000 trials: c_z bound holds, tightest "
                    "ratio %.3f; all edge means within beta c_z + 3 stderr",
                    tightest)};
}

Outcome criterion_end_to_end(const std::vector<PipelineRun>& corpus) {
  if (corpus.empty() || corpus.front().mc.trials == 0) {
    return {false, "corpus unavailable (earlier criterion failed)"};
  }
  double worst_vs_lp = 0.0;
  double worst_vs_opt = 0.0;
  for (const PipelineRun& run : corpus) {
    double lp = run.schedule.objective;
    double vs_lp = run.mc.mean / lp;
    double vs_opt = run.mc.mean / static_cast<double>(run.opt);
    worst_vs_lp = std::max(worst_vs_lp, vs_lp);
    worst_vs_opt = std::max(worst_vs_opt, vs_opt);
    if (vs_lp > kGuarantee + 3.0 * run.mc.std_error / lp) {
      return {false, fmt("mean/lp ratio %.4f beyond guarantee", vs_lp)};
    }
    if (vs_opt > kGuarantee + 3.0 * run.mc.std_error / static_cast<double>(run.opt)) {
      return {false, fmt("mean/opt ratio %.4f beyond guarantee", vs_opt)};
    }
  }

  double worst_mlc = 0.0;
  for (int i = 0; i < 30; ++i) {
    gmssc::GeneratorParams params;
    params.n = 4 + i % 4;
    params.m = 3 + i % 3;
    params.s_min = 1;
    params.s_max = 3;
    params.rule = gmssc::RequirementRule::full_size;
    params.seed = static_cast<std::uint64_t>(1000 + i);
    gmssc::Instance instance = gmssc::generate(params);

    gmssc::FractionalSchedule schedule = gmssc::solve_gmssc_lp(instance);
    gmssc::TransformedSchedule z = gmssc::transform_schedule(
        gmssc::mlc_kernel(instance.n, kAlpha), schedule);
    gmssc::CostReport mc =
        gmssc::estimate_cost(z, instance, kTrials, gmssc::trial_seed(515151, i));
    double vs_lp = mc.mean / schedule.objective;
    worst_mlc = std::max(worst_mlc, vs_lp);
    if (vs_lp > gmssc::mlc_ratio(kAlpha) + 3.0 * mc.std_error / schedule.objective) {
      return {false, fmt("mlc mean/lp ratio %.4f beyond 2 (instance %.0f)",
                         vs_lp, static_cast<double>(i))};
    }
  }
  return {true, fmt("worst mean/lp %.4f, worst mean/opt %.4f (bound 4.509), "
                    "worst mlc mean/lp %.4f (bound 2)",
                    worst_vs_lp, worst_vs_opt, worst_mlc)};
}

Outcome criterion_jump_claim() {
  const double offsets[] = {0.0, 0.25, 0.5, 1.0, 2.0};
  int checked = 0;
  double worst_slack = 1e300;
  for (int i = 2; i <= 5; ++i) {
    for (double a : offsets) {
      for (double b : offsets) {
        if (b < a) continue;
        for (double delta : offsets) {
          gmssc::SwitchIntegrals result =
              gmssc::check_jump_claim(i, a, b, delta, kBeta);
          ++checked;
          worst_slack = std::min(worst_slack, result.rhs - result.lhs);
          if (!result.ok) {
            return {false,
                    fmt("lhs %.9f > rhs %.9f + 1e-7 at i=%.0f", result.lhs,
                        result.rhs, static_cast<double>(i))};
          }
        }
      }
    }
  }
  return {true, fmt("%.0f grid points, smallest rhs-lhs slack %.3g",
                    static_cast<double>(checked), worst_slack)};
}

Outcome criterion_dp_oracle() {
  for (int i = 0; i < 20; ++i) {
    gmssc::GeneratorParams params;
    params.n = 4 + i % 5;
    params.m = 3 + i % 4;
    params.s_min = 1;
    params.s_max = std::min(4, params.n);
    params.rule = gmssc::RequirementRule::uniform;
    params.seed = static_cast<std::uint64_t>(9000 + i);
    gmssc::Instance instance = gmssc::generate(params);
    long long dp = gmssc::exact_opt(instance).cost;
    long long brute = testutil::brute_force_opt(instance);
    if (dp != brute) {
      return {false, fmt("DP %.0f != brute force %.0f on instance %.0f",
                         static_cast<double>(dp), static_cast<double>(brute),
                         static_cast<double>(i))};
    }
  }
  return {true, "20 instances: DP equals exhaustive enumeration exactly"};
}

}  // namespace

int main() {
  std::vector<PipelineRun> corpus;
  bool ok = true;
  ok &= report(1, "ratio constants and sweep minima", 1.0,
               criterion_ratio_constants);
  ok &= report(2, "tail-bound dominance grid", 30.0, criterion_dominance);
  ok &= report(3, "exponential tail claim, k = 2..64", 10.0,
               criterion_exponential_claim);
  ok &= report(4, "LP lower bound and exhaustive separation", 300.0,
               [&] { return criterion_lp_soundness(corpus); });
  ok &= report(5, "per-edge transformed-cost envelope", 600.0,
               [&] { return criterion_edge_envelope(corpus); });
  ok &= report(6, "end-to-end approximation ratios", 600.0,
               [&] { return criterion_end_to_end(corpus); });
  ok &= report(7, "jump-claim quadrature grid", 60.0, criterion_jump_claim);
  ok &= report(8, "exact DP against brute force", 60.0, criterion_dp_oracle);
  return ok ? 0 : 1;
}

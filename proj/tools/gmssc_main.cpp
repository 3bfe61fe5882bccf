// Command line front end for the generalized min-sum set cover toolkit:
// instance generation, the cut-strengthened LP relaxation, threshold
// rounding, exact and greedy baselines, per-edge diagnostics, batch
// experiments, and the analytic bound checks.

#include "gmssc/analysis.hpp"
#include "gmssc/error.hpp"
#include "gmssc/exact.hpp"
#include "gmssc/format.hpp"
#include "gmssc/instance.hpp"
#include "gmssc/kernel.hpp"
#include "gmssc/lp.hpp"
#include "gmssc/rounding.hpp"
#include "gmssc/rng.hpp"
#include "gmssc/tail_bounds.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw gmssc::error("io-error", "cannot open '" + out_path + "' for writing");
  }
  out << text;
}

std::string permutation_line(const std::vector<int>& order) {
  std::ostringstream out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) out << ' ';
    out << order[i];
  }
  out << '\n';
  return out.str();
}

gmssc::RequirementRule parse_rule(const std::string& name) {
  if (name == "uniform") return gmssc::RequirementRule::uniform;
  if (name == "all-ones") return gmssc::RequirementRule::all_ones;
  if (name == "full-size") return gmssc::RequirementRule::full_size;
  throw gmssc::error("bad-rule", "unknown requirement rule '" + name + "'");
}

struct CommonArgs {
  std::string instance_path;
  std::string out_path;
  double tol = 1e-7;
  double beta = 2.043;
  double alpha = 2.0;
  std::string problem = "gmssc";
  int trials = 1000;
  std::uint64_t seed = 0;
};

gmssc::KernelSpec kernel_for(const CommonArgs& args, int n) {
  if (args.problem == "mlc") return gmssc::mlc_kernel(n, args.alpha);
  return gmssc::gmssc_kernel(n, args.beta);
}

int run(int argc, char** argv) {
  CLI::App app{"generalized min-sum set cover toolkit"};
  app.require_subcommand(1);

  CommonArgs args;

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  int gen_n = 6, gen_m = 4, gen_smin = 1, gen_smax = 3;
  std::string gen_rule = "uniform";
  gen->add_option("--n", gen_n, "vertex count");
  gen->add_option("--m", gen_m, "edge count");
  gen->add_option("--smin", gen_smin, "minimum edge size");
  gen->add_option("--smax", gen_smax, "maximum edge size");
  gen->add_option("--rule", gen_rule, "requirement rule: uniform|all-ones|full-size");
  gen->add_option("--seed", args.seed, "generator seed");
  gen->add_option("--out", args.out_path, "output path (default stdout)");

  // lp
  auto* lp = app.add_subcommand("lp", "solve the cut-strengthened relaxation");
  lp->add_option("--instance", args.instance_path, "instance file")->required();
  lp->add_option("--tol", args.tol, "separation tolerance");
  lp->add_option("--out", args.out_path, "output path (default stdout)");

  // round
  auto* round = app.add_subcommand("round", "solve, transform and round; per-trial costs");
  round->add_option("--instance", args.instance_path, "instance file")->required();
  round->add_option("--problem", args.problem, "gmssc|mlc (kernel choice)");
  round->add_option("--beta", args.beta, "gmssc kernel parameter");
  round->add_option("--alpha", args.alpha, "mlc kernel parameter");
  round->add_option("--trials", args.trials, "number of rounding trials");
  round->add_option("--seed", args.seed, "master seed");
  round->add_option("--tol", args.tol, "separation tolerance");
  round->add_option("--out", args.out_path, "output path (default stdout)");

  // exact
  auto* exact = app.add_subcommand("exact", "exact optimum (n <= 20)");
  exact->add_option("--instance", args.instance_path, "instance file")->required();
  exact->add_option("--out", args.out_path, "write an optimal permutation here");

  // greedy
  auto* greedy = app.add_subcommand("greedy", "adaptive greedy (k_e = 1 only)");
  greedy->add_option("--instance", args.instance_path, "instance file")->required();
  greedy->add_option("--out", args.out_path, "write the greedy permutation here");

  // diagnose
  auto* diagnose = app.add_subcommand("diagnose", "per-edge kernel certificates");
  diagnose->add_option("--instance", args.instance_path, "instance file")->required();
  diagnose->add_option("--beta", args.beta, "gmssc kernel parameter");
  diagnose->add_option("--tol", args.tol, "separation tolerance");
  diagnose->add_option("--out", args.out_path, "output path (default stdout)");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "batch pipeline over seeded instances");
  int exp_n = 8, exp_m = 6, exp_seeds = 50, exp_smin = 1, exp_smax = 0;
  experiment->add_option("--n", exp_n, "vertex count per instance");
  experiment->add_option("--m", exp_m, "edge count per instance");
  experiment->add_option("--seeds", exp_seeds, "number of seeded instances");
  experiment->add_option("--smin", exp_smin, "minimum edge size");
  experiment->add_option("--smax", exp_smax, "maximum edge size (default min(4, n))");
  experiment->add_option("--problem", args.problem, "gmssc|mlc");
  experiment->add_option("--beta", args.beta, "gmssc kernel parameter");
  experiment->add_option("--alpha", args.alpha, "mlc kernel parameter");
  experiment->add_option("--trials", args.trials, "rounding trials per instance");
  experiment->add_option("--seed", args.seed, "master seed for rounding streams");
  experiment->add_option("--tol", args.tol, "separation tolerance");
  experiment->add_option("--out", args.out_path, "output path (default stdout)");

  // verify-bounds
  auto* verify = app.add_subcommand("verify-bounds", "tail bound dominance grid");
  int vb_kmax = 8, vb_nmax = 12, vb_seeds = 150;
  verify->add_option("--kmax", vb_kmax, "largest requirement k");
  verify->add_option("--nmax", vb_nmax, "largest vector length n");
  verify->add_option("--seeds", vb_seeds, "probability vectors per (k, n)");
  verify->add_option("--out", args.out_path, "output path (default stdout)");

  // ratio
  auto* ratio = app.add_subcommand("ratio", "approximation ratio of the pipeline");
  bool sweep = false;
  double sweep_lo = 1.5, sweep_hi = 3.0, sweep_step = 1e-4;
  ratio->add_option("--problem", args.problem, "gmssc|mlc");
  ratio->add_option("--beta", args.beta, "gmssc kernel parameter");
  ratio->add_option("--alpha", args.alpha, "mlc kernel parameter");
  ratio->add_flag("--sweep", sweep, "sweep the parameter range instead");
  ratio->add_option("--lo", sweep_lo, "sweep range start");
  ratio->add_option("--hi", sweep_hi, "sweep range end");
  ratio->add_option("--step", sweep_step, "sweep step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << app.help() << '\n' << "error: " << e.what() << '\n';
    return 1;
  }

  if (gen->parsed()) {
    gmssc::GeneratorParams params;
    params.n = gen_n;
    params.m = gen_m;
    params.s_min = gen_smin;
    params.s_max = gen_smax;
    params.rule = parse_rule(gen_rule);
    params.seed = args.seed;
    emit(gmssc::write_instance(gmssc::generate(params)), args.out_path);
    return 0;
  }

  if (lp->parsed()) {
    gmssc::Instance instance = gmssc::read_instance_file(args.instance_path);
    gmssc::FractionalSchedule schedule = gmssc::solve_gmssc_lp(instance, args.tol);
    emit(gmssc::write_lp_solution(schedule), args.out_path);
    return 0;
  }

  if (round->parsed()) {
    gmssc::Instance instance = gmssc::read_instance_file(args.instance_path);
    gmssc::FractionalSchedule schedule = gmssc::solve_gmssc_lp(instance, args.tol);
    gmssc::TransformedSchedule z =
        gmssc::transform_schedule(kernel_for(args, instance.n), schedule);
    std::ostringstream out;
    out << "trial,seed,total_cost\n";
    for (int r = 0; r < args.trials; ++r) {
      std::uint64_t seed = gmssc::trial_seed(args.seed, r);
      gmssc::RoundingTrial trial = gmssc::alpha_point_round(z, seed);
      gmssc::CostReport report = gmssc::cover_times(instance, trial.order);
      out << r << ',' << seed << ',' << report.total << '\n';
    }
    emit(out.str(), args.out_path);
    return 0;
  }

  if (exact->parsed()) {
    gmssc::Instance instance = gmssc::read_instance_file(args.instance_path);
    gmssc::ExactResult result = gmssc::exact_opt(instance);
    std::cout << result.cost << '\n';
    if (!args.out_path.empty()) emit(permutation_line(result.order), args.out_path);
    return 0;
  }

  if (greedy->parsed()) {
    gmssc::Instance instance = gmssc::read_instance_file(args.instance_path);
    std::vector<int> order = gmssc::greedy_mssc(instance);
    std::cout << gmssc::cover_times(instance, order).total << '\n';
    if (!args.out_path.empty()) emit(permutation_line(order), args.out_path);
    return 0;
  }

  if (diagnose->parsed()) {
    gmssc::Instance instance = gmssc::read_instance_file(args.instance_path);
    gmssc::FractionalSchedule schedule = gmssc::solve_gmssc_lp(instance, args.tol);
    gmssc::TransformedSchedule z = gmssc::transform_schedule(
        gmssc::gmssc_kernel(instance.n, args.beta), schedule);
    std::vector<gmssc::EdgeDiagnostics> diags =
        gmssc::edge_diagnostics(instance, schedule, z);
    emit(gmssc::diagnostics_csv(diags, args.beta), args.out_path);
    return 0;
  }

  if (experiment->parsed()) {
    if (exp_smax == 0) exp_smax = std::min(4, exp_n);
    bool mlc = args.problem == "mlc";
    double guarantee =
        mlc ? gmssc::mlc_ratio(args.alpha) : gmssc::gmssc_ratio(args.beta);
    std::ostringstream out;
    out << "lp_obj,opt,rounded_mean,stderr,ratio_vs_lp,ratio_vs_opt\n";
    bool escalate = false;
    std::string witness;
    for (int s = 1; s <= exp_seeds; ++s) {
      gmssc::GeneratorParams params;
      params.n = exp_n;
      params.m = exp_m;
      params.s_min = exp_smin;
      params.s_max = exp_smax;
      params.rule = mlc ? gmssc::RequirementRule::full_size
                        : gmssc::RequirementRule::uniform;
      params.seed = static_cast<std::uint64_t>(s);
      gmssc::Instance instance = gmssc::generate(params);

      gmssc::FractionalSchedule schedule =
          gmssc::solve_gmssc_lp(instance, args.tol);
      gmssc::TransformedSchedule z =
          gmssc::transform_schedule(kernel_for(args, instance.n), schedule);
      gmssc::CostReport mc = gmssc::estimate_cost(
          z, instance, args.trials, gmssc::trial_seed(args.seed, s));
      long long opt = gmssc::exact_opt(instance).cost;

      double ratio_vs_lp = mc.mean / schedule.objective;
      double ratio_vs_opt = mc.mean / static_cast<double>(opt);
      out << gmssc::csv_double(schedule.objective) << ',' << opt << ','
          << gmssc::csv_double(mc.mean) << ',' << gmssc::csv_double(mc.std_error)
          << ',' << gmssc::csv_double(ratio_vs_lp) << ','
          << gmssc::csv_double(ratio_vs_opt) << '\n';

      if (ratio_vs_lp > guarantee + 3.0 * mc.std_error / schedule.objective &&
          !escalate) {
        escalate = true;
        witness = "instance seed " + std::to_string(s) + ": ratio_vs_lp " +
                  gmssc::csv_double(ratio_vs_lp) + " exceeds guarantee " +
                  gmssc::csv_double(guarantee);
      }
    }
    emit(out.str(), args.out_path);
    if (escalate) {
      std::cerr << "error: guarantee-violated: " << witness << '\n';
      return 1;
    }
    return 0;
  }

  if (verify->parsed()) {
    gmssc::DominanceReport report =
        gmssc::verify_dominance(vb_kmax, vb_nmax, vb_seeds);
    emit(gmssc::dominance_csv(report), args.out_path);
    return 0;
  }

  if (ratio->parsed()) {
    bool mlc = args.problem == "mlc";
    std::ostringstream out;
    if (sweep) {
      gmssc::RatioCurve curve = gmssc::minimize_ratio(
          mlc ? gmssc::Problem::mlc : gmssc::Problem::gmssc, sweep_lo, sweep_hi,
          sweep_step);
      out << "argmin " << gmssc::csv_double(curve.argmin) << '\n';
      out << "minimum " << gmssc::csv_double(curve.minimum) << '\n';
    } else {
      double value =
          mlc ? gmssc::mlc_ratio(args.alpha) : gmssc::gmssc_ratio(args.beta);
      out << gmssc::csv_double(value) << '\n';
    }
    std::cout << out.str();
    return 0;
  }

  std::cerr << app.help() << '\n';
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const gmssc::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
}

// Experiment runner for the projection-filter library.  Each subcommand loads
// a config file, applies command-line overrides, runs the experiment and
// writes its artifacts into the output directory.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "apf/config.hpp"
#include "apf/experiments.hpp"

namespace {

struct CommonArgs {
  std::string config;
  std::string out;
  long seed = -1;
  long particles = -1;
  long level = -1;
  long nodes = -1;
};

void add_common(CLI::App* cmd, CommonArgs& args, const std::string& default_cfg,
                const std::string& default_out) {
  args.config = default_cfg;
  args.out = default_out;
  cmd->add_option("--config", args.config, "config file path");
  cmd->add_option("--out", args.out, "output directory");
  cmd->add_option("--seed", args.seed, "override the config seed");
  cmd->add_option("--particles", args.particles, "override the particle count");
  cmd->add_option("--level", args.level, "override the sparse-grid level");
  cmd->add_option("--nodes", args.nodes, "override the 1-D node count");
}

apf::ConfigFile load_with_overrides(const CommonArgs& args) {
  apf::ConfigFile cfg = apf::ConfigFile::load(args.config);
  if (args.seed >= 0) cfg.set("seed", std::to_string(args.seed));
  if (args.particles > 0) cfg.set("particles", std::to_string(args.particles));
  if (args.level >= 0) cfg.set("level", std::to_string(args.level));
  if (args.nodes > 0) cfg.set("nodes", std::to_string(args.nodes));
  return cfg;
}

void report(const apf::ExperimentOutcome& outcome) {
  std::cout << "artifacts: " << outcome.dir << "\n";
  for (const auto& v : outcome.variants) {
    std::cout << "  " << v.name << ": ";
    if (v.diverged)
      std::cout << "diverged at step " << v.failed_step << " (" << v.error << ")";
    else
      std::cout << "completed";
    if (!v.hellinger.empty() && !v.diverged)
      std::cout << ", final Hellinger " << v.hellinger.back();
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"automatic projection filter experiments"};
  app.require_subcommand(1);

  CommonArgs cubic_args, vdp_args, sir_args, linear_args;
  auto* cubic = app.add_subcommand("run-cubic", "cubic sensor vs finite differences");
  add_common(cubic, cubic_args, "configs/cubic_sensor.cfg", "runs/cubic");
  auto* vdp = app.add_subcommand("run-vdp", "Van-der-Pol vs particle filter");
  add_common(vdp, vdp_args, "configs/vdp.cfg", "runs/vdp");
  auto* sir = app.add_subcommand("run-sir", "stochastic SIR vs particle filter");
  add_common(sir, sir_args, "configs/sir.cfg", "runs/sir");
  auto* linear = app.add_subcommand("run-linear-check", "linear model vs Kalman-Bucy");
  add_common(linear, linear_args, "configs/linear_check.cfg", "runs/linear");

  auto* info = app.add_subcommand("grid-info", "print sparse-grid node counts");
  std::string info_family = "gauss-patterson";
  int info_dim = 2, info_level = 4;
  double info_prune = 0.0;
  info->add_option("--family", info_family,
                   "gauss-patterson | gauss-hermite | gauss-chebyshev");
  info->add_option("--dim", info_dim, "dimension");
  info->add_option("--level", info_level, "sparse-grid level");
  info->add_option("--prune", info_prune, "weight pruning threshold");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cubic->parsed())
      report(apf::run_cubic_sensor(load_with_overrides(cubic_args), cubic_args.out));
    if (vdp->parsed()) report(apf::run_vdp(load_with_overrides(vdp_args), vdp_args.out));
    if (sir->parsed()) report(apf::run_sir(load_with_overrides(sir_args), sir_args.out));
    if (linear->parsed()) {
      auto outcome = apf::run_linear_check(load_with_overrides(linear_args), linear_args.out);
      report(outcome);
      std::printf("  mean |mean error| vs Kalman-Bucy: %.3e\n", outcome.mean_abs_mean_error);
      std::printf("  mean var rel error vs Kalman-Bucy: %.3e\n", outcome.mean_var_rel_error);
      std::printf("  particle-filter mean RMSE: %.3e\n", outcome.pf_mean_rmse);
    }
    if (info->parsed()) {
      apf::RuleFamily fam;
      if (info_family == "gauss-patterson")
        fam = apf::RuleFamily::GaussPatterson;
      else if (info_family == "gauss-hermite")
        fam = apf::RuleFamily::GaussHermite;
      else if (info_family == "gauss-chebyshev")
        fam = apf::RuleFamily::GaussChebyshev;
      else
        throw std::invalid_argument("unknown family: " + info_family);
      auto grid = apf::smolyak(info_dim, info_level, fam);
      std::printf("%s d=%d level=%d: %d nodes", info_family.c_str(), info_dim, info_level,
                  grid.size());
      if (info_prune > 0.0) {
        auto pruned = apf::prune(grid, info_prune);
        std::printf(" (%d after pruning at %g)", pruned.size(), info_prune);
      }
      std::printf("; weight sum %.12g\n", grid.weights.sum());
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}

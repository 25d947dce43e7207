#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "citetrack/app.hpp"
#include "citetrack/version.hpp"

namespace {

// Exit codes: 0 success, 2 validation error, 3 infeasibility, 4 I/O error.
int run(int argc, char** argv) {
  CLI::App app{"update-rate allocation and staleness simulation for tracked "
               "counting processes"};
  app.set_version_flag("--version", citetrack::version_string);
  app.require_subcommand(1);

  citetrack::command_options opt;

  CLI::App* allocate =
      app.add_subcommand("allocate", "closed-form optimal rate allocation");
  allocate->add_option("--config", opt.config_path, "config file (JSON)")
      ->required();
  allocate->add_option("--out", opt.out_dir, "output directory");

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte Carlo staleness validation of the allocation");
  simulate->add_option("--config", opt.config_path, "config file (JSON)")
      ->required();
  simulate->add_option("--out", opt.out_dir, "output directory");
  std::uint64_t seed_flag = 0;
  std::int64_t trials_flag = 0;
  double horizon_flag = 0.0;
  CLI::Option* seed_opt =
      simulate->add_option("--seed", seed_flag, "base RNG seed");
  CLI::Option* trials_opt =
      simulate->add_option("--trials", trials_flag, "number of trials");
  CLI::Option* horizon_opt =
      simulate->add_option("--horizon", horizon_flag, "per-trial horizon");

  CLI::App* experiment =
      app.add_subcommand("experiment", "run a canned experiment");
  std::string experiment_name;
  experiment->add_option("name", experiment_name, "fig4 | fig5 | fig6")
      ->required();
  std::string experiment_out = ".";
  experiment->add_option("--out", experiment_out, "output directory");
  citetrack::experiment_overrides ov;
  double a_flag = 0.0, r_flag = 0.0, c_flag = 0.0;
  double c_min_flag = 0.0, c_max_flag = 0.0;
  std::int64_t n_flag = 0, c_points_flag = 0;
  CLI::Option* a_opt = experiment->add_option("--a", a_flag, "profile scale");
  CLI::Option* r_opt = experiment->add_option("--r", r_flag, "profile ratio");
  CLI::Option* n_opt =
      experiment->add_option("--n", n_flag, "number of researchers");
  CLI::Option* c_opt = experiment->add_option("--c", c_flag, "capacity");
  CLI::Option* c_min_opt =
      experiment->add_option("--c-min", c_min_flag, "capacity grid start");
  CLI::Option* c_max_opt =
      experiment->add_option("--c-max", c_max_flag, "capacity grid end");
  CLI::Option* c_points_opt =
      experiment->add_option("--c-points", c_points_flag, "capacity grid size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (seed_opt->count()) opt.seed = seed_flag;
  if (trials_opt->count()) opt.trials = trials_flag;
  if (horizon_opt->count()) opt.horizon = horizon_flag;
  if (a_opt->count()) ov.a = a_flag;
  if (r_opt->count()) ov.r = r_flag;
  if (n_opt->count()) ov.n = n_flag;
  if (c_opt->count()) ov.c = c_flag;
  if (c_min_opt->count()) ov.c_min = c_min_flag;
  if (c_max_opt->count()) ov.c_max = c_max_flag;
  if (c_points_opt->count()) ov.c_points = c_points_flag;

  if (allocate->parsed()) {
    citetrack::cmd_allocate(opt);
  } else if (simulate->parsed()) {
    citetrack::cmd_simulate(opt);
  } else {
    citetrack::cmd_experiment(experiment_name, ov, experiment_out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const citetrack::infeasibility_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const citetrack::io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "citetrack/allocator.hpp"
#include "citetrack/config.hpp"
#include "citetrack/csv.hpp"
#include "citetrack/errors.hpp"
#include "citetrack/format.hpp"
#include "citetrack/harness.hpp"
#include "citetrack/manifest.hpp"
#include "citetrack/svg.hpp"

namespace citetrack {

struct command_options {
  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> trials;
  std::optional<double> horizon;
};

struct experiment_overrides {
  std::optional<double> a;
  std::optional<double> r;
  std::optional<std::int64_t> n;
  std::optional<double> c;
  std::optional<double> c_min;
  std::optional<double> c_max;
  std::optional<std::int64_t> c_points;
};

namespace detail {

inline std::filesystem::path ensure_out_dir(const std::string& out_dir) {
  std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw io_error("cannot create output directory " + dir.string() +
                         ": " + ec.message());
  return dir;
}

inline nlohmann::json profiles_json(
    const std::vector<researcher_profile>& profiles) {
  nlohmann::json arr = nlohmann::json::array();
  for (const researcher_profile& r : profiles)
    arr.push_back({{"lambda", r.lambda}, {"mu", r.mu}});
  return arr;
}

}  // namespace detail

// Closed-form allocation for a config file. Writes allocation.csv plus a
// manifest and prints the total staleness.
inline void cmd_allocate(const command_options& opt) {
  const cli_config cfg = load_config(opt.config_path);
  const allocation_result res =
      allocate_closed_form({cfg.researchers, cfg.capacity});

  experiment_table table({"i", "lambda", "mu", "rho", "delta"});
  for (std::size_t i = 0; i < cfg.researchers.size(); ++i)
    table.add_row({static_cast<double>(i + 1), cfg.researchers[i].lambda,
                   cfg.researchers[i].mu, res.rho[i],
                   res.delta_i[i] ? *res.delta_i[i]
                                  : std::numeric_limits<double>::infinity()});

  const std::filesystem::path dir = detail::ensure_out_dir(opt.out_dir);
  write_text_file(dir / "allocation.csv", to_csv(table));

  nlohmann::json params{{"researchers", detail::profiles_json(cfg.researchers)},
                        {"capacity", cfg.capacity}};
  nlohmann::json manifest =
      make_manifest("allocate", params, {"allocation.csv"});
  manifest["seed"] = nullptr;
  write_manifest(dir, manifest);

  std::cout << "delta_total=" << format_double(res.delta_total) << "\n";
}

// Monte Carlo validation run. Flags override config fields; unset values get
// the desk-scale defaults (16 trials, horizon spanning 1e5 expected updates
// of the slowest process).
inline void cmd_simulate(const command_options& opt) {
  const cli_config cfg = load_config(opt.config_path);

  sim_config sim;
  sim.profiles = cfg.researchers;
  sim.capacity = cfg.capacity;
  sim.threads = 0;

  const std::string model = cfg.model.value_or("poisson");
  if (model == "poisson") {
    sim.model = updater_kind::poisson;
  } else if (model == "deterministic") {
    sim.model = updater_kind::deterministic;
  } else {
    sim.model = updater_kind::common_thinned;
    if (!cfg.common_rate)
      throw validation_error(
          "config: field 'common_rate' is required when model is "
          "common_thinned");
    sim.common_rate = *cfg.common_rate;
  }

  sim.base_seed = opt.seed ? *opt.seed : cfg.seed.value_or(0);
  sim.trials = opt.trials ? *opt.trials : cfg.trials.value_or(16);
  if (opt.horizon) {
    sim.horizon = *opt.horizon;
  } else if (cfg.horizon) {
    sim.horizon = *cfg.horizon;
  } else {
    const allocation_result alloc =
        allocate_closed_form({cfg.researchers, cfg.capacity});
    double rho_min = std::numeric_limits<double>::infinity();
    for (double rho : alloc.rho)
      if (rho > 0.0) rho_min = std::min(rho_min, rho);
    sim.horizon = 1e5 / rho_min;
  }

  const trial_stats stats = run_monte_carlo(sim);

  experiment_table table(
      {"i", "analytic_delta", "empirical_delta", "stderr", "rel_dev"});
  for (std::size_t i = 0; i < stats.analytic_delta.size(); ++i)
    table.add_row({static_cast<double>(i + 1), stats.analytic_delta[i],
                   stats.empirical_delta[i], stats.standard_error[i],
                   stats.relative_deviation[i]});

  const std::filesystem::path dir = detail::ensure_out_dir(opt.out_dir);
  write_text_file(dir / "simulation.csv", to_csv(table));

  nlohmann::json params{{"researchers", detail::profiles_json(sim.profiles)},
                        {"capacity", sim.capacity},
                        {"model", model},
                        {"horizon", sim.horizon},
                        {"trials", sim.trials},
                        {"seed", sim.base_seed}};
  if (sim.model == updater_kind::common_thinned)
    params["common_rate"] = sim.common_rate;
  nlohmann::json manifest =
      make_manifest("simulate", params, {"simulation.csv"});
  manifest["seed"] = sim.base_seed;
  write_manifest(dir, manifest);

  std::cout << "analytic_total=" << format_double(stats.analytic_total)
            << "\n";
  std::cout << "empirical_total=" << format_double(stats.empirical_total)
            << "\n";
  const double worst = stats.relative_deviation.empty()
                           ? 0.0
                           : *std::max_element(
                                 stats.relative_deviation.begin(),
                                 stats.relative_deviation.end());
  std::cout << "max_rel_dev=" << format_double(worst) << "\n";
}

// One of the three canned experiments; writes <name>.csv, <name>.svg, and a
// manifest into the output directory.
inline void cmd_experiment(const std::string& name,
                           const experiment_overrides& ov,
                           const std::string& out_dir) {
  experiment_table table({"placeholder"});
  nlohmann::json params;
  std::string svg;

  if (name == "fig4" || name == "fig5") {
    const bool four = name == "fig4";
    const double a = ov.a.value_or(10.0);
    const double r = ov.r.value_or(0.75);
    const std::size_t n = static_cast<std::size_t>(
        ov.n.value_or(four ? 20 : 10));
    const double c = ov.c.value_or(10.0);
    table = four ? experiment_fig4(a, r, n, c) : experiment_fig5(a, r, n, c);
    params = {{"a", a}, {"r", r}, {"n", n}, {"c", c}};

    std::vector<svg_series> series;
    for (const std::string& col : table.columns())
      if (col != "i" && col != "lambda")
        series.push_back({col, table.column(col), false});
    svg = line_chart(four ? "Optimal rates and staleness per researcher"
                          : "Uniform vs lambda-proportional importance",
                     "researcher index i", "updates/time and staleness",
                     table.column("i"), series);
  } else if (name == "fig6") {
    const double a = ov.a.value_or(1.0);
    const std::size_t n = static_cast<std::size_t>(ov.n.value_or(10));
    const double c_min = ov.c_min.value_or(1.0);
    const double c_max = ov.c_max.value_or(20.0);
    const std::size_t c_points =
        static_cast<std::size_t>(ov.c_points.value_or(20));
    if (!(c_min > 0.0) || !(c_max >= c_min) || c_points == 0)
      throw validation_error("experiment: invalid capacity grid");
    table = experiment_fig6(a, n, {0.5, 0.75, 1.0},
                            detail::linspace(c_min, c_max, c_points));
    params = {{"a", a},
              {"n", n},
              {"r_values", {0.5, 0.75, 1.0}},
              {"c_min", c_min},
              {"c_max", c_max},
              {"c_points", c_points}};

    std::vector<svg_series> series;
    for (const std::string& col : table.columns())
      if (col != "c")
        series.push_back({col, table.column(col), col == "delta_lambda_prop"});
    svg = line_chart("Total staleness vs capacity", "capacity c",
                     "total staleness", table.column("c"), series);
  } else {
    throw validation_error("unknown experiment: " + name);
  }

  const std::filesystem::path dir = detail::ensure_out_dir(out_dir);
  write_text_file(dir / (name + ".csv"), to_csv(table));
  write_text_file(dir / (name + ".svg"), svg);

  nlohmann::json manifest =
      make_manifest("experiment " + name, params, {name + ".csv", name + ".svg"});
  manifest["seed"] = nullptr;
  write_manifest(dir, manifest);

  std::cout << "wrote " << (dir / (name + ".csv")).string() << " ("
            << table.rows().size() << " rows)\n";
  std::cout << "wrote " << (dir / (name + ".svg")).string() << "\n";
}

}  // namespace citetrack

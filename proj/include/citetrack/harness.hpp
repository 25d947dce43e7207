#pragma once

#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "citetrack/allocator.hpp"
#include "citetrack/errors.hpp"
#include "citetrack/events.hpp"
#include "citetrack/format.hpp"
#include "citetrack/staleness.hpp"
#include "citetrack/table.hpp"
#include "citetrack/updaters.hpp"

namespace citetrack {

enum class updater_kind { poisson, deterministic, common_thinned };

struct sim_config {
  std::vector<researcher_profile> profiles;
  double capacity = 0.0;
  updater_kind model = updater_kind::poisson;
  double common_rate = 0.0;  // common_thinned only
  double horizon = 0.0;      // per-trial horizon
  std::int64_t trials = 1;
  std::uint64_t base_seed = 0;
  unsigned threads = 1;  // 0 = hardware concurrency; results are invariant
};

// Monte Carlo estimates of per-process staleness against the analytic
// predictions. Means and standard errors are taken across trials.
struct trial_stats {
  std::vector<double> rho;
  std::vector<double> analytic_delta;
  std::vector<double> empirical_delta;
  std::vector<double> standard_error;
  std::vector<double> relative_deviation;
  double analytic_total = 0.0;   // mu-weighted
  double empirical_total = 0.0;  // mu-weighted
  std::int64_t trials = 0;
};

namespace detail {

// Disjoint stream-index planes keep arrival, update, and thinning draws
// independent of each other for every (trial, process) pair.
inline constexpr std::uint64_t arrival_plane = 0x1000000000000000ULL;
inline constexpr std::uint64_t update_plane = 0x2000000000000000ULL;

}  // namespace detail

// Allocate rates for the configured roster, simulate every process for each
// trial, and average the exact per-trial staleness. Per-trial substreams make
// the result identical for identical configs regardless of thread count or
// execution order.
inline trial_stats run_monte_carlo(const sim_config& config) {
  if (config.trials < 1)
    throw validation_error("simulate: trials must be at least 1");
  if (!(config.horizon > 0.0) || !std::isfinite(config.horizon))
    throw validation_error("simulate: horizon must be positive and finite");
  for (std::size_t i = 0; i < config.profiles.size(); ++i)
    if (!(config.profiles[i].mu > 0.0))
      throw validation_error(
          "simulate: researchers[" + std::to_string(i) +
          "].mu must be positive (a zero-rate process has unbounded "
          "staleness)");

  const allocation_result alloc =
      allocate_closed_form({config.profiles, config.capacity});
  const std::size_t n = config.profiles.size();
  const std::int64_t trials = config.trials;
  const double horizon = config.horizon;

  thinning_plan plan;
  if (config.model == updater_kind::common_thinned)
    plan = thinning_probabilities(alloc.rho, config.common_rate);

  std::vector<double> per_trial(static_cast<std::size_t>(trials) * n);

  auto run_trials = [&](std::int64_t t_begin, std::int64_t t_end) {
    for (std::int64_t t = t_begin; t < t_end; ++t) {
      const std::uint64_t base_index = static_cast<std::uint64_t>(t) * n;
      std::vector<update_schedule> thinned;
      if (config.model == updater_kind::common_thinned)
        thinned = common_thinned_schedules(
            plan, horizon,
            {config.base_seed,
             detail::update_plane + static_cast<std::uint64_t>(t)});
      for (std::size_t i = 0; i < n; ++i) {
        const event_sequence arrivals =
            gen_poisson(config.profiles[i].lambda, horizon,
                        {config.base_seed,
                         detail::arrival_plane + base_index + i});
        double delta = 0.0;
        switch (config.model) {
          case updater_kind::poisson:
            delta = staleness_area(
                        arrivals,
                        poisson_schedule(alloc.rho[i], horizon,
                                         {config.base_seed,
                                          detail::update_plane + base_index +
                                              i}),
                        horizon)
                        .time_average;
            break;
          case updater_kind::deterministic:
            delta = staleness_area(arrivals,
                                   deterministic_schedule(alloc.rho[i],
                                                          horizon),
                                   horizon)
                        .time_average;
            break;
          case updater_kind::common_thinned:
            delta = staleness_area(arrivals, thinned[i], horizon).time_average;
            break;
        }
        per_trial[static_cast<std::size_t>(t) * n + i] = delta;
      }
    }
  };

  unsigned workers = config.threads;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::int64_t>(workers, trials));
  if (workers <= 1) {
    run_trials(0, trials);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::int64_t chunk = (trials + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::int64_t begin = static_cast<std::int64_t>(w) * chunk;
      const std::int64_t end = std::min<std::int64_t>(begin + chunk, trials);
      if (begin >= end) break;
      pool.emplace_back(run_trials, begin, end);
    }
    for (std::thread& th : pool) th.join();
  }

  trial_stats stats;
  stats.trials = trials;
  stats.rho = alloc.rho;
  stats.analytic_delta.reserve(n);
  stats.empirical_delta.reserve(n);
  stats.standard_error.reserve(n);
  stats.relative_deviation.reserve(n);

  for (std::size_t i = 0; i < n; ++i) {
    double mean = 0.0;
    for (std::int64_t t = 0; t < trials; ++t)
      mean += per_trial[static_cast<std::size_t>(t) * n + i];
    mean /= static_cast<double>(trials);

    double stderr_ = 0.0;
    if (trials > 1) {
      double ss = 0.0;
      for (std::int64_t t = 0; t < trials; ++t) {
        const double d =
            per_trial[static_cast<std::size_t>(t) * n + i] - mean;
        ss += d * d;
      }
      stderr_ = std::sqrt(ss / static_cast<double>(trials - 1) /
                          static_cast<double>(trials));
    }

    double analytic;
    switch (config.model) {
      case updater_kind::poisson:
        analytic = analytic_delta(config.profiles[i].lambda, alloc.rho[i],
                                  poisson_updater{});
        break;
      case updater_kind::deterministic:
        analytic = analytic_delta(config.profiles[i].lambda, alloc.rho[i],
                                  deterministic_updater{});
        break;
      default:
        analytic = analytic_delta(
            config.profiles[i].lambda, alloc.rho[i],
            common_thinned{config.common_rate, plan.probabilities[i]});
        break;
    }

    stats.analytic_delta.push_back(analytic);
    stats.empirical_delta.push_back(mean);
    stats.standard_error.push_back(stderr_);
    stats.relative_deviation.push_back(std::abs(mean - analytic) / analytic);
    stats.analytic_total += config.profiles[i].mu * analytic;
    stats.empirical_total += config.profiles[i].mu * mean;
  }
  return stats;
}

// Optimal rates and staleness per researcher for a geometric rate profile
// with unit importance coefficients.
inline experiment_table experiment_fig4(double a = 10.0, double r = 0.75,
                                        std::size_t n = 20, double c = 10.0) {
  const std::vector<double> lambdas = geometric_profile(a, r, n);
  allocation_problem problem;
  problem.capacity = c;
  problem.profiles.reserve(n);
  for (double l : lambdas) problem.profiles.push_back({l, 1.0});
  const allocation_result res = allocate_closed_form(problem);

  experiment_table table({"i", "lambda", "rho", "delta"});
  for (std::size_t i = 0; i < n; ++i)
    table.add_row({static_cast<double>(i + 1), lambdas[i], res.rho[i],
                   *res.delta_i[i]});
  return table;
}

// Uniform (scaled 1/n) versus lambda-proportional importance coefficients on
// the same geometric profile.
inline experiment_table experiment_fig5(double a = 10.0, double r = 0.75,
                                        std::size_t n = 10, double c = 10.0) {
  const std::vector<double> lambdas = geometric_profile(a, r, n);
  const std::vector<double> mu_uniform = uniform_importance(n);
  const std::vector<double> mu_prop = lambda_proportional_importance(lambdas);

  allocation_problem uniform_problem{{}, c};
  allocation_problem prop_problem{{}, c};
  for (std::size_t i = 0; i < n; ++i) {
    uniform_problem.profiles.push_back({lambdas[i], mu_uniform[i]});
    prop_problem.profiles.push_back({lambdas[i], mu_prop[i]});
  }
  const allocation_result uniform_res = allocate_closed_form(uniform_problem);
  const allocation_result prop_res = allocate_closed_form(prop_problem);

  experiment_table table({"i", "lambda", "rho_uniform", "delta_uniform",
                          "rho_lambda_prop", "delta_lambda_prop"});
  for (std::size_t i = 0; i < n; ++i)
    table.add_row({static_cast<double>(i + 1), lambdas[i], uniform_res.rho[i],
                   *uniform_res.delta_i[i], prop_res.rho[i],
                   *prop_res.delta_i[i]});
  return table;
}

namespace detail {

inline std::vector<double> linspace(double lo, double hi, std::size_t points) {
  std::vector<double> out;
  out.reserve(points);
  if (points == 1) {
    out.push_back(lo);
    return out;
  }
  for (std::size_t k = 0; k < points; ++k)
    out.push_back(lo + (hi - lo) * static_cast<double>(k) /
                           static_cast<double>(points - 1));
  return out;
}

}  // namespace detail

// Total staleness versus capacity for normalized geometric profiles at
// several polarization ratios r, under importance 1/n, plus the
// lambda-proportional reference (which is flat in r).
inline experiment_table experiment_fig6(
    double a = 1.0, std::size_t n = 10,
    std::vector<double> r_values = {0.5, 0.75, 1.0},
    std::vector<double> c_grid = detail::linspace(1.0, 20.0, 20)) {
  if (r_values.empty())
    throw validation_error("experiment_fig6: at least one r value required");
  if (c_grid.empty())
    throw validation_error("experiment_fig6: at least one c value required");

  std::vector<std::string> columns{"c"};
  for (double r : r_values) columns.push_back("delta_r" + format_double(r));
  columns.push_back("delta_lambda_prop");
  experiment_table table(std::move(columns));

  const std::vector<double> mu_uniform = uniform_importance(n);
  const std::vector<double> ref_lambdas =
      normalized_geometric_profile(a, r_values.front(), n);
  const std::vector<double> ref_mu =
      lambda_proportional_importance(ref_lambdas);

  for (double c : c_grid) {
    std::vector<double> row{c};
    for (double r : r_values) {
      const std::vector<double> lambdas =
          normalized_geometric_profile(a, r, n);
      allocation_problem problem{{}, c};
      for (std::size_t i = 0; i < n; ++i)
        problem.profiles.push_back({lambdas[i], mu_uniform[i]});
      row.push_back(allocate_closed_form(problem).delta_total);
    }
    allocation_problem ref_problem{{}, c};
    for (std::size_t i = 0; i < n; ++i)
      ref_problem.profiles.push_back({ref_lambdas[i], ref_mu[i]});
    row.push_back(allocate_closed_form(ref_problem).delta_total);
    table.add_row(std::move(row));
  }
  return table;
}

}  // namespace citetrack

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "citetrack/harness.hpp"

using namespace citetrack;

namespace {

sim_config single_process_config(updater_kind model) {
  sim_config cfg;
  cfg.profiles = {{2.0, 1.0}};
  cfg.capacity = 4.0;
  cfg.model = model;
  cfg.horizon = 250000.0;  // 1e6 expected update intervals at rho = 4
  cfg.trials = 1;
  cfg.base_seed = 42;
  cfg.threads = 1;
  return cfg;
}

}  // namespace

TEST_CASE("Monte Carlo matches the Poisson-updater law", "[harness]") {
  const trial_stats stats = run_monte_carlo(single_process_config(
      updater_kind::poisson));
  REQUIRE(stats.analytic_delta[0] == 0.5);
  REQUIRE(stats.relative_deviation[0] <= 0.01);
}

TEST_CASE("Monte Carlo matches the deterministic-updater law", "[harness]") {
  const trial_stats stats = run_monte_carlo(single_process_config(
      updater_kind::deterministic));
  REQUIRE(stats.analytic_delta[0] == 0.25);
  REQUIRE(stats.relative_deviation[0] <= 0.01);
}

TEST_CASE("Monte Carlo matches the thinning reduction", "[harness]") {
  sim_config cfg = single_process_config(updater_kind::common_thinned);
  cfg.common_rate = 8.0;  // keep probability 0.5, effective rate 4
  const trial_stats stats = run_monte_carlo(cfg);
  REQUIRE(stats.analytic_delta[0] == 0.5);
  REQUIRE(stats.relative_deviation[0] <= 0.02);
}

TEST_CASE("empirical deltas sit within three standard errors", "[harness]") {
  sim_config cfg;
  cfg.profiles = {{3.0, 0.5}, {1.0, 0.25}, {0.2, 0.25}};
  cfg.capacity = 6.0;
  cfg.model = updater_kind::poisson;
  cfg.horizon = 5000.0;
  cfg.trials = 16;
  cfg.base_seed = 2024;
  cfg.threads = 0;
  const trial_stats stats = run_monte_carlo(cfg);
  for (std::size_t i = 0; i < stats.analytic_delta.size(); ++i) {
    REQUIRE(stats.standard_error[i] > 0.0);
    REQUIRE(std::abs(stats.empirical_delta[i] - stats.analytic_delta[i]) <=
            3.0 * stats.standard_error[i]);
  }
}

TEST_CASE("results are bit-exact across reruns and thread counts",
          "[harness]") {
  sim_config cfg;
  cfg.profiles = {{2.0, 0.5}, {0.5, 0.5}};
  cfg.capacity = 3.0;
  cfg.model = updater_kind::poisson;
  cfg.horizon = 2000.0;
  cfg.trials = 8;
  cfg.base_seed = 7;
  cfg.threads = 1;

  const trial_stats serial = run_monte_carlo(cfg);
  const trial_stats repeat = run_monte_carlo(cfg);
  REQUIRE(serial.empirical_delta == repeat.empirical_delta);
  REQUIRE(serial.standard_error == repeat.standard_error);

  for (unsigned threads : {2u, 3u, 8u}) {
    cfg.threads = threads;
    const trial_stats parallel = run_monte_carlo(cfg);
    REQUIRE(parallel.empirical_delta == serial.empirical_delta);
    REQUIRE(parallel.standard_error == serial.standard_error);
  }

  cfg.threads = 1;
  cfg.trials = 16;
  const trial_stats doubled = run_monte_carlo(cfg);
  REQUIRE(doubled.empirical_delta != serial.empirical_delta);
}

TEST_CASE("thinned trials share one common clock per trial", "[harness]") {
  sim_config cfg;
  cfg.profiles = {{1.0, 0.5}, {2.0, 0.5}};
  cfg.capacity = 3.0;
  cfg.model = updater_kind::common_thinned;
  cfg.common_rate = 5.0;
  cfg.horizon = 10000.0;
  cfg.trials = 4;
  cfg.base_seed = 99;
  cfg.threads = 2;
  const trial_stats stats = run_monte_carlo(cfg);
  for (std::size_t i = 0; i < 2; ++i)
    REQUIRE(std::abs(stats.empirical_delta[i] - stats.analytic_delta[i]) <=
            4.0 * stats.standard_error[i] + 0.05 * stats.analytic_delta[i]);
}

TEST_CASE("simulation validates its configuration", "[harness]") {
  sim_config cfg;
  cfg.profiles = {{2.0, 1.0}};
  cfg.capacity = 4.0;
  cfg.horizon = 100.0;

  sim_config bad = cfg;
  bad.trials = 0;
  REQUIRE_THROWS_AS(run_monte_carlo(bad), validation_error);

  bad = cfg;
  bad.horizon = 0.0;
  REQUIRE_THROWS_AS(run_monte_carlo(bad), validation_error);

  bad = cfg;
  bad.profiles = {{2.0, 0.0}};
  REQUIRE_THROWS_AS(run_monte_carlo(bad), validation_error);

  bad = cfg;
  bad.model = updater_kind::common_thinned;
  bad.common_rate = 2.0;  // below the allocated rate of 4
  REQUIRE_THROWS_AS(run_monte_carlo(bad), infeasibility_error);
}

TEST_CASE("capacity sweep table reproduces the closed-form shapes",
          "[harness]") {
  const experiment_table table = experiment_fig4();
  REQUIRE(table.rows().size() == 20);

  const std::vector<double> rho = table.column("rho");
  const std::vector<double> delta = table.column("delta");
  for (std::size_t i = 1; i < 20; ++i) {
    REQUIRE(rho[i] < rho[i - 1]);
    REQUIRE(delta[i] < delta[i - 1]);
  }
  REQUIRE(rho.front() / rho.back() ==
          Catch::Approx(std::pow(0.75, -9.5)).epsilon(1e-9));
  double rho_sum = 0.0;
  for (double r : rho) rho_sum += r;
  REQUIRE(std::abs(rho_sum - 10.0) <= 1e-12 * 10.0);

  // regeneration is bit-exact
  const experiment_table again = experiment_fig4();
  REQUIRE(again.rows() == table.rows());
}

TEST_CASE("importance-scheme comparison table", "[harness]") {
  const experiment_table table = experiment_fig5();
  REQUIRE(table.rows().size() == 10);

  const std::vector<double> rho_u = table.column("rho_uniform");
  const std::vector<double> rho_p = table.column("rho_lambda_prop");
  const std::vector<double> delta_p = table.column("delta_lambda_prop");

  for (std::size_t i = 1; i < 10; ++i)
    REQUIRE(delta_p[i] == Catch::Approx(delta_p[0]).epsilon(1e-12));
  REQUIRE(rho_p[0] > rho_u[0]);  // top researcher favored

  double sum_u = 0.0, sum_p = 0.0;
  for (std::size_t i = 0; i < 10; ++i) {
    sum_u += rho_u[i];
    sum_p += rho_p[i];
  }
  REQUIRE(std::abs(sum_u - 10.0) <= 1e-12 * 10.0);
  REQUIRE(std::abs(sum_p - 10.0) <= 1e-12 * 10.0);
}

TEST_CASE("polarization sweep table", "[harness]") {
  const experiment_table table = experiment_fig6();
  REQUIRE(table.rows().size() == 20);

  const std::vector<double> c = table.column("c");
  const std::vector<double> d50 = table.column("delta_r0.5");
  const std::vector<double> d75 = table.column("delta_r0.75");
  const std::vector<double> d100 = table.column("delta_r1");
  const std::vector<double> dprop = table.column("delta_lambda_prop");

  for (std::size_t i = 0; i < 20; ++i) {
    REQUIRE(d50[i] < d75[i]);
    REQUIRE(d75[i] < d100[i]);
    REQUIRE(d100[i] * c[i] == Catch::Approx(1.0).epsilon(1e-12));
    REQUIRE(dprop[i] == Catch::Approx(d100[i]).epsilon(1e-12));
  }
}

// Minimal library tour: allocate a budget across a small roster, then check
// the analytic staleness against a short Monte Carlo run.
#include <cstdio>

#include "citetrack/allocator.hpp"
#include "citetrack/harness.hpp"

int main() {
  using namespace citetrack;

  allocation_problem problem;
  problem.profiles = {{8.0, 1.0}, {2.0, 1.0}, {0.5, 1.0}};
  problem.capacity = 5.0;

  const allocation_result res = allocate_closed_form(problem);
  std::printf("%-4s %-8s %-10s %-10s\n", "i", "lambda", "rho", "delta");
  for (std::size_t i = 0; i < res.rho.size(); ++i)
    std::printf("%-4zu %-8g %-10.6f %-10.6f\n", i + 1,
                problem.profiles[i].lambda, res.rho[i], *res.delta_i[i]);
  std::printf("total staleness: %.6f\n\n", res.delta_total);

  sim_config sim;
  sim.profiles = problem.profiles;
  sim.capacity = problem.capacity;
  sim.model = updater_kind::poisson;
  sim.horizon = 2000.0;
  sim.trials = 8;
  sim.base_seed = 7;
  sim.threads = 0;

  const trial_stats stats = run_monte_carlo(sim);
  std::printf("%-4s %-12s %-12s %-10s\n", "i", "analytic", "empirical",
              "rel_dev");
  for (std::size_t i = 0; i < stats.analytic_delta.size(); ++i)
    std::printf("%-4zu %-12.6f %-12.6f %-10.4f\n", i + 1,
                stats.analytic_delta[i], stats.empirical_delta[i],
                stats.relative_deviation[i]);
  return 0;
}

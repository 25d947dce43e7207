#pragma once

// Test-only brute-force minimizer of sum_i mu_i*lambda_i/rho_i over the
// budget simplex, restricted to the grid rho_i = k_i * (c/steps) with every
// k_i >= 1. Exhaustive for n in {2, 3}; deliberately independent of the
// library's allocation routines.

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace testing_support {

struct grid_point {
  std::vector<double> rho;
  double objective = std::numeric_limits<double>::infinity();
};

inline double allocation_objective(const std::vector<double>& lambdas,
                                   const std::vector<double>& mus,
                                   const std::vector<double>& rho) {
  double obj = 0.0;
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    obj += mus[i] * lambdas[i] / rho[i];
  return obj;
}

inline grid_point grid_search_allocation(const std::vector<double>& lambdas,
                                         const std::vector<double>& mus,
                                         double c, int steps = 1000) {
  const std::size_t n = lambdas.size();
  if (n != 2 && n != 3)
    throw std::logic_error("grid_search_allocation supports n in {2, 3}");
  const double h = c / steps;
  grid_point best;

  if (n == 2) {
    for (int k1 = 1; k1 <= steps - 1; ++k1) {
      const double rho1 = k1 * h;
      const double rho2 = (steps - k1) * h;
      const double obj = mus[0] * lambdas[0] / rho1 + mus[1] * lambdas[1] / rho2;
      if (obj < best.objective) {
        best.objective = obj;
        best.rho = {rho1, rho2};
      }
    }
  } else {
    for (int k1 = 1; k1 <= steps - 2; ++k1) {
      const double rho1 = k1 * h;
      const double part1 = mus[0] * lambdas[0] / rho1;
      for (int k2 = 1; k2 <= steps - 1 - k1; ++k2) {
        const double rho2 = k2 * h;
        const double rho3 = (steps - k1 - k2) * h;
        const double obj =
            part1 + mus[1] * lambdas[1] / rho2 + mus[2] * lambdas[2] / rho3;
        if (obj < best.objective) {
          best.objective = obj;
          best.rho = {rho1, rho2, rho3};
        }
      }
    }
  }
  return best;
}

// Objective of the closed-form point snapped onto the same grid; an upper
// bound any exhaustive grid search must reach.
inline double snapped_objective(const std::vector<double>& lambdas,
                                const std::vector<double>& mus,
                                const std::vector<double>& rho_opt, double c,
                                int steps = 1000) {
  const std::size_t n = rho_opt.size();
  const double h = c / steps;
  std::vector<int> k(n, 1);
  int used = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    k[i] = std::max(1, static_cast<int>(rho_opt[i] / h + 0.5));
    used += k[i];
  }
  k[n - 1] = steps - used;
  while (k[n - 1] < 1) {
    std::size_t largest = 0;
    for (std::size_t i = 1; i + 1 < n; ++i)
      if (k[i] > k[largest]) largest = i;
    --k[largest];
    ++k[n - 1];
  }
  std::vector<double> rho(n);
  for (std::size_t i = 0; i < n; ++i) rho[i] = k[i] * h;
  return allocation_objective(lambdas, mus, rho);
}

}  // namespace testing_support

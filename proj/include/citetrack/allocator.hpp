#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "citetrack/errors.hpp"

namespace citetrack {

// One tracked process: mean arrival rate and importance weight.
struct researcher_profile {
  double lambda = 0.0;  // mean citation rate, > 0
  double mu = 0.0;      // importance coefficient, >= 0
};

struct allocation_problem {
  std::vector<researcher_profile> profiles;
  double capacity = 0.0;  // total update-rate budget, > 0
};

// Optimal rates and the quantities that certify them. delta_i is empty for
// untracked processes (mu = 0): their staleness diverges but contributes
// nothing to the objective, and the optimal policy assigns them rate 0.
struct allocation_result {
  std::vector<double> rho;
  double beta = 0.0;  // budget multiplier
  std::vector<std::optional<double>> delta_i;
  double delta_total = 0.0;
};

namespace detail {

inline void check_problem(const allocation_problem& p) {
  if (p.profiles.empty())
    throw validation_error("allocation: at least one researcher is required");
  if (!(p.capacity > 0.0) || !std::isfinite(p.capacity))
    throw validation_error("allocation: capacity must be positive and finite");
  bool any_tracked = false;
  for (std::size_t i = 0; i < p.profiles.size(); ++i) {
    const researcher_profile& r = p.profiles[i];
    const std::string where = "researchers[" + std::to_string(i) + "]";
    if (!(r.lambda > 0.0) || !std::isfinite(r.lambda))
      throw validation_error(where + ".lambda must be positive and finite");
    if (!(r.mu >= 0.0) || !std::isfinite(r.mu))
      throw validation_error(where + ".mu must be non-negative and finite");
    if (r.mu * r.lambda > 0.0) any_tracked = true;
  }
  if (!any_tracked)
    throw validation_error(
        "allocation: degenerate problem, every mu*lambda product is zero");
}

inline std::vector<double> sqrt_weights(
    const std::vector<researcher_profile>& profiles) {
  std::vector<double> s;
  s.reserve(profiles.size());
  for (const researcher_profile& r : profiles)
    s.push_back(std::sqrt(r.mu * r.lambda));
  return s;
}

}  // namespace detail

// Closed-form optimum of minimizing sum_i mu_i*lambda_i/rho_i subject to
// sum rho_i <= c: rates proportional to sqrt(mu_i*lambda_i), budget spent
// in full.
inline allocation_result allocate_closed_form(
    const allocation_problem& problem) {
  detail::check_problem(problem);
  const std::vector<double> s = detail::sqrt_weights(problem.profiles);
  double s_sum = 0.0;
  for (double v : s) s_sum += v;

  const double c = problem.capacity;
  allocation_result result;
  result.rho.reserve(s.size());
  result.delta_i.reserve(s.size());
  result.beta = (s_sum * s_sum) / (c * c);
  result.delta_total = s_sum * s_sum / c;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] > 0.0) {
      result.rho.push_back(c * s[i] / s_sum);
      result.delta_i.push_back(std::sqrt(problem.profiles[i].lambda) * s_sum /
                               (c * std::sqrt(problem.profiles[i].mu)));
    } else {
      result.rho.push_back(0.0);
      result.delta_i.push_back(std::nullopt);
    }
  }
  return result;
}

// Independent numeric route to the same optimum: bisection on the budget
// multiplier beta, with rho_i(beta) = sqrt(mu_i*lambda_i/beta) from the
// stationarity condition and sum_i rho_i(beta) = c as the root equation.
// The rate sum is strictly decreasing in beta, so the bracket below always
// straddles the root. Serves as a cross-check, not the default path.
inline allocation_result allocate_numeric(const allocation_problem& problem,
                                          double tolerance = 1e-12) {
  if (!(tolerance > 0.0) || !std::isfinite(tolerance))
    throw validation_error("allocation: tolerance must be positive and finite");
  detail::check_problem(problem);

  const std::vector<researcher_profile>& profiles = problem.profiles;
  const double c = problem.capacity;
  const double n = static_cast<double>(profiles.size());

  double s_sum = 0.0;
  double s_max = 0.0;
  for (const researcher_profile& r : profiles) {
    const double s = std::sqrt(r.mu * r.lambda);
    s_sum += s;
    s_max = std::max(s_max, s);
  }

  auto rate_sum = [&](double beta) {
    double sum = 0.0;
    for (const researcher_profile& r : profiles)
      if (r.mu * r.lambda > 0.0) sum += std::sqrt(r.mu * r.lambda / beta);
    return sum;
  };

  double lo = (s_max / c) * (s_max / c) / (n * n);  // rate_sum(lo) >= c
  double hi = (s_sum / c) * (s_sum / c) * (n * n);  // rate_sum(hi) <= c
  int iterations = 0;
  while (hi - lo > 0.5 * tolerance * lo) {
    if (++iterations > 200)
      throw numeric_error("allocation: bisection failed to converge");
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // hit double resolution
    if (rate_sum(mid) >= c)
      lo = mid;
    else
      hi = mid;
  }
  const double beta = 0.5 * (lo + hi);

  allocation_result result;
  result.beta = beta;
  result.rho.reserve(profiles.size());
  result.delta_i.reserve(profiles.size());
  double total = 0.0;
  for (const researcher_profile& r : profiles) {
    if (r.mu * r.lambda > 0.0) {
      const double rho = std::sqrt(r.mu * r.lambda / beta);
      result.rho.push_back(rho);
      result.delta_i.push_back(r.lambda / rho);
      total += r.mu * r.lambda / rho;
    } else {
      result.rho.push_back(0.0);
      result.delta_i.push_back(std::nullopt);
    }
  }
  result.delta_total = total;
  return result;
}

// Importance coefficients 1/n, the fair-comparison scaling.
inline std::vector<double> uniform_importance(std::size_t n) {
  if (n == 0)
    throw validation_error("uniform_importance: n must be at least 1");
  return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

// Importance proportional to the rates: mu_i = lambda_i / sum(lambda). Under
// these coefficients the optimal rates become linear in lambda and every
// tracked process ends up with the same staleness.
inline std::vector<double> lambda_proportional_importance(
    const std::vector<double>& lambdas) {
  if (lambdas.empty())
    throw validation_error(
        "lambda_proportional_importance: input must be non-empty");
  double sum = 0.0;
  for (double l : lambdas) {
    if (!(l > 0.0) || !std::isfinite(l))
      throw validation_error(
          "lambda_proportional_importance: lambdas must be positive and "
          "finite");
    sum += l;
  }
  std::vector<double> mu;
  mu.reserve(lambdas.size());
  for (double l : lambdas) mu.push_back(l / sum);
  return mu;
}

// Geometric rate profile lambda_i = a * r^i for i = 1..n.
inline std::vector<double> geometric_profile(double a, double r,
                                             std::size_t n) {
  if (!(a > 0.0) || !std::isfinite(a))
    throw validation_error("geometric_profile: a must be positive and finite");
  if (!(r > 0.0) || !(r <= 1.0))
    throw validation_error("geometric_profile: r must lie in (0, 1]");
  if (n == 0)
    throw validation_error("geometric_profile: n must be at least 1");
  std::vector<double> lambdas;
  lambdas.reserve(n);
  for (std::size_t i = 1; i <= n; ++i)
    lambdas.push_back(a * std::pow(r, static_cast<double>(i)));
  return lambdas;
}

// Geometric profile rescaled so the rates sum to a, which pins the total
// arrival mass while r controls how evenly it spreads.
inline std::vector<double> normalized_geometric_profile(double a, double r,
                                                        std::size_t n) {
  std::vector<double> lambdas = geometric_profile(a, r, n);
  double sum = 0.0;
  for (double l : lambdas) sum += l;
  for (double& l : lambdas) l = a * (l / sum);
  return lambdas;
}

}  // namespace citetrack

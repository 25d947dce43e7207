#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "citetrack/errors.hpp"
#include "citetrack/events.hpp"
#include "citetrack/format.hpp"
#include "citetrack/rng.hpp"

namespace citetrack {

// Sorted sampling instants for one process on [0, horizon]. The metric
// assumes an implicit update at t = 0 (estimate starts synchronized);
// 0 itself is never stored.
class update_schedule {
 public:
  update_schedule(std::vector<double> times, double horizon)
      : times_(std::move(times)), horizon_(horizon) {
    detail::check_times(times_, horizon_, "update_schedule");
  }

  const std::vector<double>& times() const noexcept { return times_; }
  double horizon() const noexcept { return horizon_; }
  std::size_t size() const noexcept { return times_.size(); }

 private:
  std::vector<double> times_;
  double horizon_;
};

// One shared Poisson clock plus per-process keep probabilities.
struct thinning_plan {
  double common_rate = 0.0;
  std::vector<double> probabilities;
};

// Updates with exponential inter-update times of rate `rate`.
inline update_schedule poisson_schedule(double rate, double horizon,
                                        stream_seed seed) {
  if (!(rate > 0.0) || !std::isfinite(rate))
    throw validation_error(
        "poisson_schedule: rate must be positive and finite");
  if (!std::isfinite(horizon) || horizon < 0.0)
    throw validation_error(
        "poisson_schedule: horizon must be finite and non-negative");
  counter_rng rng(seed);
  return update_schedule(detail::poisson_times(rate, horizon, rng), horizon);
}

// Equally spaced updates at d, 2d, 3d, ... with d = 1/rate. An instant whose
// exact value is the horizon is kept (tolerance 1e-12 * horizon for the
// rounding in k*d) and clamped onto the horizon.
inline update_schedule deterministic_schedule(double rate, double horizon) {
  if (!(rate > 0.0) || !std::isfinite(rate))
    throw validation_error(
        "deterministic_schedule: rate must be positive and finite");
  if (!std::isfinite(horizon) || horizon < 0.0)
    throw validation_error(
        "deterministic_schedule: horizon must be finite and non-negative");
  const double d = 1.0 / rate;
  const double cutoff = horizon * (1.0 + 1e-12);
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(
      std::min(rate * horizon + 2.0, 4194304.0)));
  for (std::int64_t k = 1;; ++k) {
    const double t = static_cast<double>(k) * d;
    if (t > cutoff) break;
    times.push_back(std::min(t, horizon));
    if (times.back() == horizon) break;
  }
  return update_schedule(std::move(times), horizon);
}

// Keep probabilities p_i = target_rate_i / common_rate. Infeasible when any
// target exceeds the common rate; the error reports the smallest common rate
// that would work.
inline thinning_plan thinning_probabilities(
    const std::vector<double>& target_rates, double common_rate) {
  if (!(common_rate > 0.0) || !std::isfinite(common_rate))
    throw validation_error(
        "thinning_probabilities: common rate must be positive and finite");
  double max_rate = 0.0;
  for (double r : target_rates) {
    if (!(r >= 0.0) || !std::isfinite(r))
      throw validation_error(
          "thinning_probabilities: target rates must be non-negative and "
          "finite");
    max_rate = std::max(max_rate, r);
  }
  if (max_rate > common_rate)
    throw infeasibility_error(
        "thinning_probabilities: common rate " + format_double(common_rate) +
            " cannot reach every target; minimum feasible common rate is " +
            format_double(max_rate),
        max_rate);
  thinning_plan plan;
  plan.common_rate = common_rate;
  plan.probabilities.reserve(target_rates.size());
  for (double r : target_rates) plan.probabilities.push_back(r / common_rate);
  return plan;
}

// Draw one common Poisson schedule and thin it per process. Keep decisions
// use a dedicated substream per process, so process i's schedule does not
// change when processes are added or removed. Each result is marginally
// Poisson with rate common_rate * p_i.
inline std::vector<update_schedule> common_thinned_schedules(
    const thinning_plan& plan, double horizon, stream_seed seed) {
  if (!(plan.common_rate > 0.0) || !std::isfinite(plan.common_rate))
    throw validation_error(
        "common_thinned_schedules: common rate must be positive and finite");
  for (double p : plan.probabilities)
    if (!(p >= 0.0) || !(p <= 1.0))
      throw validation_error(
          "common_thinned_schedules: probabilities must lie in [0, 1]");
  if (!std::isfinite(horizon) || horizon < 0.0)
    throw validation_error(
        "common_thinned_schedules: horizon must be finite and non-negative");

  counter_rng common_rng(substream(seed, 0));
  const std::vector<double> common =
      detail::poisson_times(plan.common_rate, horizon, common_rng);

  std::vector<update_schedule> schedules;
  schedules.reserve(plan.probabilities.size());
  for (std::size_t i = 0; i < plan.probabilities.size(); ++i) {
    counter_rng keep_rng(substream(seed, i + 1));
    const double p = plan.probabilities[i];
    std::vector<double> kept;
    kept.reserve(static_cast<std::size_t>(common.size() * p) + 8);
    for (double t : common)
      if (keep_rng.next_unit() < p) kept.push_back(t);
    schedules.emplace_back(std::move(kept), horizon);
  }
  return schedules;
}

}  // namespace citetrack

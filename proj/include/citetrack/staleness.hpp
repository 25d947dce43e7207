#pragma once

#include <cmath>
#include <cstdint>
#include <variant>
#include <vector>

#include "citetrack/errors.hpp"
#include "citetrack/events.hpp"
#include "citetrack/updaters.hpp"

namespace citetrack {

// Exact per-interval integrals of N(t) - Nhat(t) and their time average.
struct staleness_result {
  // One entry per update interval, including the final partial interval
  // [t_m, horizon]; size is always updates.size() + 1.
  std::vector<double> interval_areas;
  double total_area = 0.0;    // left-to-right sum of interval_areas
  double horizon = 0.0;
  double time_average = 0.0;  // total_area / horizon
};

// Integrate N(t) - Nhat(t) over [0, horizon] exactly by sweeping the merged
// arrival/update instants; no time discretization is involved. Nhat holds the
// count captured at the latest update (implicitly 0 at t = 0). An update and
// an arrival at the identical timestamp are ordered update-first: the update
// captures the state before the simultaneous arrival.
inline staleness_result staleness_area(const event_sequence& arrivals,
                                       const update_schedule& updates,
                                       double horizon) {
  if (!(arrivals.horizon() == horizon) || !(updates.horizon() == horizon))
    throw validation_error(
        "staleness_area: arrivals, updates, and horizon must agree");

  const std::vector<double>& at = arrivals.times();
  const std::vector<double>& ut = updates.times();

  staleness_result out;
  out.horizon = horizon;
  out.interval_areas.reserve(ut.size() + 1);

  std::size_t ai = 0;
  std::int64_t arrived = 0;  // N at the cursor
  std::int64_t sampled = 0;  // Nhat on the current interval
  double cursor = 0.0;

  auto sweep_to = [&](double stop) {
    long double acc = 0.0L;  // widest format; one fixed summation order
    while (ai < at.size() && at[ai] < stop) {
      acc += static_cast<long double>(arrived - sampled) * (at[ai] - cursor);
      cursor = at[ai];
      ++arrived;
      ++ai;
    }
    acc += static_cast<long double>(arrived - sampled) * (stop - cursor);
    cursor = stop;
    return static_cast<double>(acc);
  };

  for (double u : ut) {
    out.interval_areas.push_back(sweep_to(u));
    sampled = arrived;  // arrivals at exactly u land in the next interval
  }
  out.interval_areas.push_back(sweep_to(horizon));

  double total = 0.0;
  for (double a : out.interval_areas) total += a;
  out.total_area = total;
  out.time_average = horizon > 0.0 ? total / horizon : 0.0;
  return out;
}

// Updater taxonomy for the analytic long-run staleness formulas.
struct poisson_updater {};
struct deterministic_updater {};
struct common_thinned {
  double common_rate = 0.0;
  double keep_probability = 0.0;
};
using updater_model =
    std::variant<poisson_updater, deterministic_updater, common_thinned>;

// Long-run average staleness of one process: lambda/rho for a Poisson
// updater, lambda/(2 rho) for a deterministic one, and lambda over the
// effective thinned rate for the common synchronized updater. A zero
// effective update rate diverges and raises infinite_staleness_error.
inline double analytic_delta(double rate, double update_rate,
                             const updater_model& model) {
  if (!(rate > 0.0) || !std::isfinite(rate))
    throw validation_error("analytic_delta: rate must be positive and finite");

  struct visitor {
    double lambda;
    double rho;

    double require_rate(double r) const {
      if (!std::isfinite(r) || r < 0.0)
        throw validation_error(
            "analytic_delta: update rate must be finite and non-negative");
      if (r == 0.0)
        throw infinite_staleness_error(
            "analytic_delta: zero effective update rate, staleness diverges");
      return r;
    }

    double operator()(const poisson_updater&) const {
      return lambda / require_rate(rho);
    }
    double operator()(const deterministic_updater&) const {
      return lambda / (2.0 * require_rate(rho));
    }
    double operator()(const common_thinned& m) const {
      if (!(m.keep_probability >= 0.0) || !(m.keep_probability <= 1.0))
        throw validation_error(
            "analytic_delta: keep probability must lie in [0, 1]");
      if (!(m.common_rate > 0.0) || !std::isfinite(m.common_rate))
        throw validation_error(
            "analytic_delta: common rate must be positive and finite");
      return lambda / require_rate(m.common_rate * m.keep_probability);
    }
  };
  return std::visit(visitor{rate, update_rate}, model);
}

// Mean staleness area of an interval of length d holding k arrivals: k*d/2.
// Serves as an independent oracle for the sweep above.
inline double expected_interval_area(std::int64_t count, double length) {
  if (count < 0)
    throw validation_error(
        "expected_interval_area: count must be non-negative");
  if (!(length >= 0.0) || !std::isfinite(length))
    throw validation_error(
        "expected_interval_area: length must be non-negative and finite");
  return static_cast<double>(count) * length / 2.0;
}

}  // namespace citetrack

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "citetrack/errors.hpp"
#include "citetrack/rng.hpp"

namespace citetrack {

namespace detail {

// Shared invariant for arrival and update instants: strictly increasing,
// strictly positive (the count at time 0 is zero), bounded by the horizon.
inline void check_times(const std::vector<double>& times, double horizon,
                        const char* what) {
  if (!std::isfinite(horizon) || horizon < 0.0)
    throw validation_error(std::string(what) +
                           ": horizon must be finite and non-negative");
  double prev = 0.0;
  for (double t : times) {
    if (!std::isfinite(t))
      throw validation_error(std::string(what) + ": times must be finite");
    if (t <= prev)
      throw validation_error(
          std::string(what) +
          ": times must be strictly increasing and strictly positive");
    if (t > horizon)
      throw validation_error(std::string(what) +
                             ": times must not exceed the horizon");
    prev = t;
  }
}

// Poisson sample path on [0, horizon), open at the horizon. Gaps below one
// ulp of the running clock would duplicate the previous instant (a
// measure-zero event); those are bumped forward by a single ulp.
inline std::vector<double> poisson_times(double rate, double horizon,
                                         counter_rng& rng) {
  std::vector<double> times;
  const double expected = rate * horizon;
  times.reserve(static_cast<std::size_t>(
      std::min(expected * 1.05 + 16.0, 4194304.0)));
  double t = 0.0;
  for (;;) {
    double next = t + rng.next_exponential(rate);
    if (next <= t) next = std::nextafter(t, horizon + 1.0);
    if (next >= horizon) break;
    times.push_back(next);
    t = next;
  }
  return times;
}

}  // namespace detail

// Sorted arrival instants of one counting-process sample path on [0, horizon].
// count_at(t) is the realized process value N(t); N(0) is always 0.
class event_sequence {
 public:
  event_sequence(std::vector<double> times, double horizon)
      : times_(std::move(times)), horizon_(horizon) {
    detail::check_times(times_, horizon_, "event_sequence");
  }

  const std::vector<double>& times() const noexcept { return times_; }
  double horizon() const noexcept { return horizon_; }
  std::size_t size() const noexcept { return times_.size(); }

  std::int64_t count_at(double t) const noexcept {
    return std::upper_bound(times_.begin(), times_.end(), t) - times_.begin();
  }

 private:
  std::vector<double> times_;
  double horizon_;
};

// Draw one Poisson counting-process path with i.i.d. exponential gaps of
// mean 1/rate. Regenerating with the same seed is bit-exact.
inline event_sequence gen_poisson(double rate, double horizon,
                                  stream_seed seed) {
  if (!(rate > 0.0) || !std::isfinite(rate))
    throw validation_error("gen_poisson: rate must be positive and finite");
  if (!std::isfinite(horizon) || horizon < 0.0)
    throw validation_error(
        "gen_poisson: horizon must be finite and non-negative");
  counter_rng rng(seed);
  return event_sequence(detail::poisson_times(rate, horizon, rng), horizon);
}

}  // namespace citetrack

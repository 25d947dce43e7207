#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

#include "citetrack/events.hpp"

using namespace citetrack;

TEST_CASE("zero horizon yields an empty sequence", "[events]") {
  const event_sequence seq = gen_poisson(5.0, 0.0, {1, 0});
  REQUIRE(seq.size() == 0);
  REQUIRE(seq.horizon() == 0.0);
}

TEST_CASE("event count concentrates around rate * horizon", "[events]") {
  const double rate = 2.0, horizon = 100000.0;
  const event_sequence seq = gen_poisson(rate, horizon, {7, 0});
  const double expected = rate * horizon;
  REQUIRE(std::abs(static_cast<double>(seq.size()) - expected) <=
          3.0 * std::sqrt(expected));
}

TEST_CASE("same seed regenerates bit-exactly", "[events]") {
  const event_sequence a = gen_poisson(1.0, 10.0, {123, 4});
  const event_sequence b = gen_poisson(1.0, 10.0, {123, 4});
  REQUIRE(a.times() == b.times());
}

TEST_CASE("generation validates its inputs", "[events]") {
  REQUIRE_THROWS_AS(gen_poisson(0.0, 1.0, {0, 0}), validation_error);
  REQUIRE_THROWS_AS(gen_poisson(-2.0, 1.0, {0, 0}), validation_error);
  REQUIRE_THROWS_AS(gen_poisson(std::nan(""), 1.0, {0, 0}), validation_error);
  REQUIRE_THROWS_AS(gen_poisson(1.0, -1.0, {0, 0}), validation_error);
  REQUIRE_THROWS_AS(
      gen_poisson(1.0, std::numeric_limits<double>::infinity(), {0, 0}),
      validation_error);
}

TEST_CASE("construction rejects malformed sequences", "[events]") {
  REQUIRE_THROWS_AS(event_sequence({1.0, 1.0}, 2.0), validation_error);
  REQUIRE_THROWS_AS(event_sequence({2.0, 1.0}, 3.0), validation_error);
  REQUIRE_THROWS_AS(event_sequence({1.0, 5.0}, 4.0), validation_error);
  REQUIRE_THROWS_AS(event_sequence({0.0, 1.0}, 2.0), validation_error);
  REQUIRE_THROWS_AS(event_sequence({-1.0}, 2.0), validation_error);
  REQUIRE_NOTHROW(event_sequence({1.0, 2.0}, 2.0));
  REQUIRE_NOTHROW(event_sequence({}, 0.0));
}

TEST_CASE("count_at walks the step function", "[events]") {
  const event_sequence seq({1.0, 2.0, 3.5}, 5.0);
  REQUIRE(seq.count_at(0.0) == 0);
  REQUIRE(seq.count_at(0.999) == 0);
  REQUIRE(seq.count_at(1.0) == 1);
  REQUIRE(seq.count_at(2.7) == 2);
  REQUIRE(seq.count_at(5.0) == 3);
}

TEST_CASE("inter-event gaps have the exponential mean", "[events]") {
  const double rate = 4.0, horizon = 30000.0;  // ~120k gaps
  const event_sequence seq = gen_poisson(rate, horizon, {2024, 1});
  REQUIRE(seq.size() > 100000);
  const double mean_gap = seq.times().back() / static_cast<double>(seq.size());
  REQUIRE(std::abs(mean_gap - 1.0 / rate) < 0.01 / rate);
}

TEST_CASE("disjoint-interval counts match Poisson mean and variance",
          "[events]") {
  const double rate = 2.0, len = 50.0;
  const int intervals = 40000;
  const double horizon = len * intervals;
  const event_sequence seq = gen_poisson(rate, horizon, {2024, 2});

  std::vector<std::int64_t> counts(intervals, 0);
  for (double t : seq.times()) {
    auto bucket = static_cast<std::size_t>(t / len);
    if (bucket >= counts.size()) bucket = counts.size() - 1;
    ++counts[bucket];
  }
  double mean = 0.0;
  for (std::int64_t k : counts) mean += static_cast<double>(k);
  mean /= intervals;
  double var = 0.0;
  for (std::int64_t k : counts) {
    const double d = static_cast<double>(k) - mean;
    var += d * d;
  }
  var /= intervals - 1;

  const double target = rate * len;  // Poisson: mean = variance
  REQUIRE(std::abs(mean - target) < 0.02 * target);
  REQUIRE(std::abs(var - target) < 0.02 * target);
}

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace citetrack {

// 64-bit finalizer with full avalanche (the SplitMix64 mixing function).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Names one reproducible random stream. Identical pairs yield identical
// sequences; distinct stream indices yield statistically independent streams.
struct stream_seed {
  std::uint64_t base_seed = 0;
  std::uint64_t stream_index = 0;
};

// Derive a child stream from a parent seed and a label. The parent pair is
// folded into a fresh base so child streams never alias top-level ones.
constexpr stream_seed substream(stream_seed s, std::uint64_t label) noexcept {
  return {mix64(s.base_seed ^ mix64(s.stream_index ^ 0x5851F42D4C957F2DULL)),
          label};
}

// Counter-based generator: output j of a stream is a keyed hash of j.
// Two distinct streams can never be shifted copies of one another, which
// matters when consecutive stream indices feed interacting sample paths.
class counter_rng {
 public:
  explicit counter_rng(stream_seed s) noexcept
      : key_(mix64(s.base_seed ^ 0x8BADF00D5DEFACEDULL) ^
             mix64(s.stream_index + 0x9E3779B97F4A7C15ULL)),
        tweak_(mix64(key_ ^ 0xD1B54A32D192ED03ULL)) {}

  std::uint64_t next_u64() noexcept {
    std::uint64_t z = mix64(counter_++ * 0x9E3779B97F4A7C15ULL + key_);
    return mix64(z ^ tweak_);
  }

  // Uniform double on the 2^-53 grid of [0, 1); an exact 0 is remapped to
  // the smallest positive double so -log(u) stays finite.
  double next_unit() noexcept {
    double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return u > 0.0 ? u : std::numeric_limits<double>::denorm_min();
  }

  // Exponential variate via inverse CDF.
  double next_exponential(double rate) noexcept {
    return -std::log(next_unit()) / rate;
  }

 private:
  std::uint64_t key_;
  std::uint64_t tweak_;
  std::uint64_t counter_ = 0;
};

}  // namespace citetrack

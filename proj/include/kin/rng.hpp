#pragma once

#include <cstdint>
#include <cmath>
#include <limits>

#include "kin/vec3.hpp"

namespace kin {

// Counter-based stream: output i of stream s is a pure function of
// (seed, s, i), so worker streams derived from one master seed are
// reproducible and non-overlapping. Satisfies UniformRandomBitGenerator.
class Rng {
public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(mix(seed) ^ (stream * 0x9E3779B97F4A7C15ull + 0x2545F4914F6CDD1Dull))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return mix(key_ + (++counter_) * 0x9E3779B97F4A7C15ull); }

  // Derive an independent stream; used for per-worker RNGs.
  Rng spawn(std::uint64_t stream) const { return Rng(key_, stream + 1); }

  // Uniform on the open interval (0,1).
  double uniform() { return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Box-Muller; second variate cached so consumption is deterministic.
  double normal() {
    if (have_cache_) {
      have_cache_ = false;
      return cache_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double t = 6.283185307179586476925286766559 * uniform();
    cache_ = r * std::sin(t);
    have_cache_ = true;
    return r * std::cos(t);
  }

  // Uniform on the unit sphere S^2.
  Vec3 isotropic_unit() {
    const double z = 1.0 - 2.0 * uniform();
    const double phi = 6.283185307179586476925286766559 * uniform();
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {s * std::cos(phi), s * std::sin(phi), z};
  }

  std::uint64_t index_below(std::uint64_t n) {
    // Multiplicative range reduction; bias is < n / 2^64, negligible here.
    return static_cast<std::uint64_t>((static_cast<__uint128_t>((*this)()) * n) >> 64);
  }

private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double cache_ = 0.0;
  bool have_cache_ = false;
};

} // namespace kin

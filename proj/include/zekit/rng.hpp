#pragma once

// Counter-based random numbers: every draw is a pure function of
// (seed, stream, counter), so results do not depend on thread scheduling or
// on the standard library's distribution implementations.

#include <cmath>
#include <cstdint>
#include <numbers>

#include "zekit/matcore.hpp"

namespace zekit {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) : key_(splitmix64(seed) ^ splitmix64(~stream * 0xD1B54A32D192ED03ULL)) {}

  std::uint64_t next_u64() { return splitmix64(key_ + 0x632BE59BD9B4E019ULL * counter_++); }

  /// Uniform in (0, 1).
  double uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (one draw per call; the sine half is discarded).
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Complex Gaussian with E|z|^2 = 1.
  cplx complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
  }

  CVector random_vector(std::size_t dim) {
    CVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = complex_normal();
    return v;
  }

  CVector random_unit_vector(std::size_t dim) { return random_vector(dim).normalized(); }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace zekit

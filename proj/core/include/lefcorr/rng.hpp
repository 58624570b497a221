#pragma once

#include <cstdint>
#include <random>

#include "lefcorr/scalar.hpp"

namespace lefcorr {

/// Per-trial random stream for sweeps.
///
/// Trial t of a sweep with seed s draws from std::mt19937_64 seeded with
///     mix(s ^ mix(t + 0x9E3779B97F4A7C15)),
/// where mix is the SplitMix64 finalizer. Bounded integers come from
/// rejection sampling on raw 64-bit outputs (never std:: distributions,
/// whose output is implementation-defined), so any implementation that
/// follows these two rules reproduces the same parameter sequence.
class TrialRng {
 public:
  static TrialRng substream(std::uint64_t seed, std::uint64_t trial);

  std::uint64_t next() { return engine_(); }

  /// Uniform on [lo, hi] (inclusive).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Uniform on [0, 1) with 53 random bits.
  double uniform_real();

  /// p/q with q uniform on [1, max_den] and p uniform on [0, q).
  Rational unit_fraction(std::int64_t max_den);

 private:
  explicit TrialRng(std::uint64_t state) : engine_(state) {}

  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

}  // namespace lefcorr

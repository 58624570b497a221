#include "lefcorr/rng.hpp"

#include "lefcorr/errors.hpp"

namespace lefcorr {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

TrialRng TrialRng::substream(std::uint64_t seed, std::uint64_t trial) {
  return TrialRng(mix64(seed ^ mix64(trial + 0x9E3779B97F4A7C15ULL)));
}

std::int64_t TrialRng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InvalidArgument("empty integer range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  // Largest multiple of span that fits; values at or above it are redrawn.
  const std::uint64_t limit = std::uint64_t(0) - (std::uint64_t(0) - span) % span;
  std::uint64_t draw = next();
  while (limit != 0 && draw >= limit) draw = next();
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw % span);
}

double TrialRng::uniform_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Rational TrialRng::unit_fraction(std::int64_t max_den) {
  const std::int64_t q = uniform_int(1, max_den);
  const std::int64_t p = uniform_int(0, q - 1);
  Rational value(static_cast<long>(p), static_cast<unsigned long>(q));
  value.canonicalize();
  return value;
}

}  // namespace lefcorr

#pragma once

#include <cstdint>
#include <random>

#include "emu/measure.hpp"

namespace emu {

/// Seeded generator used by every sampling routine. std::mt19937_64 has a
/// fully specified output sequence, and values are mapped to ranges by plain
/// modulo reduction (not std::uniform_int_distribution, whose algorithm is
/// implementation-defined), so samples are identical across platforms.
using Rng = std::mt19937_64;

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

/// Lottery with a common denominator drawn from [1, max_den]; each of the
/// `den` unit masses lands on a uniformly chosen outcome.
inline Lottery random_lottery(const SpacePtr& space, std::int64_t max_den, Rng& rng) {
  const auto den = uniform_int(rng, 1, max_den);
  Vec v(space->size());
  for (std::int64_t k = 0; k < den; ++k) {
    v[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(space->size()) - 1))] += 1;
  }
  for (auto& x : v) x /= den;
  return Lottery::from_dense(space, v);
}

/// Lottery giving every outcome positive mass.
inline Lottery random_interior_lottery(const SpacePtr& space, std::int64_t extra, Rng& rng) {
  const auto n = static_cast<std::int64_t>(space->size());
  const auto den = n + uniform_int(rng, 0, extra);
  Vec v(space->size(), Rational(1));
  for (std::int64_t k = n; k < den; ++k) {
    v[static_cast<std::size_t>(uniform_int(rng, 0, n - 1))] += 1;
  }
  for (auto& x : v) x /= den;
  return Lottery::from_dense(space, v);
}

}  // namespace emu

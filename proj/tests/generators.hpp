#pragma once

#include <vector>

#include "emu/emu.hpp"

namespace gen {

inline emu::Vec int_vec(std::size_t dim, std::int64_t lo, std::int64_t hi, emu::Rng& rng) {
  emu::Vec v(dim);
  for (auto& x : v) x = emu::uniform_int(rng, lo, hi);
  return v;
}

inline std::vector<emu::Vec> int_vectors(std::size_t count, std::size_t dim, std::int64_t lo,
                                         std::int64_t hi, emu::Rng& rng) {
  std::vector<emu::Vec> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(int_vec(dim, lo, hi, rng));
  return out;
}

inline emu::SpacePtr space(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return emu::OutcomeSpace::create(labels);
}

/// Zero-sum rational vector with entries of denominator at most `max_den`.
inline emu::Vec zero_sum(std::size_t dim, emu::Rng& rng) {
  emu::Vec v(dim);
  emu::Rational total = 0;
  for (std::size_t i = 0; i + 1 < dim; ++i) {
    v[i] = emu::frac(emu::uniform_int(rng, -6, 6),
                     static_cast<unsigned long>(emu::uniform_int(rng, 1, 6)));
    total += v[i];
  }
  v[dim - 1] = -total;
  return v;
}

inline emu::PreferenceDataset dataset(const emu::SpacePtr& space, std::size_t statements,
                                      emu::Rng& rng) {
  emu::PreferenceDataset d{space, {}};
  for (std::size_t k = 0; k < statements; ++k) {
    d.statements.push_back({emu::random_lottery(space, 6, rng), emu::random_lottery(space, 6, rng)});
  }
  return d;
}

}  // namespace gen

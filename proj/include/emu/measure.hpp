#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "emu/outcome_space.hpp"
#include "emu/rational.hpp"

namespace emu {

/// Finitely supported signed rational measure on an outcome space. Zero
/// entries are never stored, so the stored keys are exactly the support.
class Measure {
 public:
  using Entries = std::map<std::size_t, Rational>;

  explicit Measure(SpacePtr space) : space_(std::move(space)) {}

  Measure(SpacePtr space, const Entries& entries) : space_(std::move(space)) {
    for (const auto& [i, v] : entries) {
      if (i >= space_->size()) {
        throw Error(ErrorKind::dimension_mismatch, "measure index out of range");
      }
      if (sgn(v) != 0) entries_.emplace(i, v);
    }
  }

  static Measure from_dense(SpacePtr space, const Vec& values) {
    if (values.size() != space->size()) {
      throw Error(ErrorKind::dimension_mismatch,
                  "dense vector length does not match outcome count");
    }
    Entries e;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (sgn(values[i]) != 0) e.emplace(i, values[i]);
    }
    return Measure(std::move(space), e);
  }

  static Measure from_labels(SpacePtr space,
                             const std::vector<std::pair<std::string, Rational>>& items) {
    Entries e;
    for (const auto& [label, v] : items) e[space->index_of(label)] += v;
    return Measure(std::move(space), e);
  }

  const SpacePtr& space() const noexcept { return space_; }
  const Entries& entries() const noexcept { return entries_; }

  Rational at(std::size_t i) const {
    auto it = entries_.find(i);
    return it == entries_.end() ? Rational(0) : it->second;
  }

  std::set<std::size_t> support() const {
    std::set<std::size_t> s;
    for (const auto& kv : entries_) s.insert(kv.first);
    return s;
  }

  Rational total() const {
    Rational s = 0;
    for (const auto& kv : entries_) s += kv.second;
    return s;
  }

  bool is_zero() const noexcept { return entries_.empty(); }

  Vec dense() const {
    Vec v(space_->size());
    for (const auto& [i, x] : entries_) v[i] = x;
    return v;
  }

  friend Measure operator+(const Measure& x, const Measure& y) {
    require_same_space(x.space_, y.space_);
    Entries e = x.entries_;
    for (const auto& [i, v] : y.entries_) e[i] += v;
    return Measure(x.space_, e);
  }

  friend Measure operator-(const Measure& x, const Measure& y) {
    require_same_space(x.space_, y.space_);
    Entries e = x.entries_;
    for (const auto& [i, v] : y.entries_) e[i] -= v;
    return Measure(x.space_, e);
  }

  friend Measure operator*(const Rational& a, const Measure& x) {
    Entries e;
    if (sgn(a) != 0) {
      for (const auto& [i, v] : x.entries_) e.emplace(i, a * v);
    }
    return Measure(x.space_, e);
  }

  friend bool operator==(const Measure& x, const Measure& y) {
    return same_space(x.space_, y.space_) && x.entries_ == y.entries_;
  }

 private:
  SpacePtr space_;
  Entries entries_;
};

/// A simple lottery: nonnegative entries summing to exactly 1.
class Lottery {
 public:
  explicit Lottery(Measure m) : m_(std::move(m)) {
    for (const auto& [i, v] : m_.entries()) {
      if (sgn(v) < 0) {
        throw Error(ErrorKind::invalid_lottery,
                    "negative mass on outcome '" + m_.space()->label(i) + "'");
      }
    }
    if (m_.total() != 1) {
      throw Error(ErrorKind::invalid_lottery,
                  "lottery masses sum to " + to_string(m_.total()) + ", not 1");
    }
  }

  static Lottery point_mass(const SpacePtr& space, std::size_t i) {
    return Lottery(Measure(space, {{i, Rational(1)}}));
  }

  static Lottery point_mass(const SpacePtr& space, std::string_view label) {
    return point_mass(space, space->index_of(label));
  }

  static Lottery from_dense(const SpacePtr& space, const Vec& values) {
    return Lottery(Measure::from_dense(space, values));
  }

  const Measure& measure() const noexcept { return m_; }
  const SpacePtr& space() const noexcept { return m_.space(); }
  operator const Measure&() const noexcept { return m_; }

  friend bool operator==(const Lottery& a, const Lottery& b) { return a.m_ == b.m_; }

 private:
  Measure m_;
};

/// A utility function on every outcome of a finite space.
class Utility {
 public:
  Utility(SpacePtr space, Vec values) : space_(std::move(space)), values_(std::move(values)) {
    if (values_.size() != space_->size()) {
      throw Error(ErrorKind::dimension_mismatch,
                  "utility length does not match outcome count");
    }
  }

  /// The all-ones utility e.
  static Utility constant(const SpacePtr& space, const Rational& c = 1) {
    return Utility(space, Vec(space->size(), c));
  }

  /// Indicator e_z.
  static Utility indicator(const SpacePtr& space, std::size_t z) {
    Vec v(space->size());
    v.at(z) = 1;
    return Utility(space, std::move(v));
  }

  const SpacePtr& space() const noexcept { return space_; }
  const Vec& values() const noexcept { return values_; }
  const Rational& operator[](std::size_t i) const { return values_[i]; }

  friend Utility operator+(const Utility& u, const Utility& v) {
    require_same_space(u.space_, v.space_);
    Vec w = u.values_;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += v.values_[i];
    return Utility(u.space_, std::move(w));
  }

  friend Utility operator*(const Rational& a, const Utility& u) {
    Vec w = u.values_;
    for (auto& x : w) x *= a;
    return Utility(u.space_, std::move(w));
  }

  friend bool operator==(const Utility& u, const Utility& v) {
    return same_space(u.space_, v.space_) && u.values_ == v.values_;
  }

 private:
  SpacePtr space_;
  Vec values_;
};

/// x = alpha * (plus - minus) with plus and minus disjointly supported.
struct Decomposition {
  Rational alpha;
  Lottery plus;
  Lottery minus;
};

/// The pairing <x, u> = sum_z u(z) x(z).
inline Rational expectation(const Measure& x, const Utility& u) {
  require_same_space(x.space(), u.space());
  Rational s = 0;
  for (const auto& [i, v] : x.entries()) s += v * u[i];
  return s;
}

/// Sum of absolute values of the entries.
inline Rational norm(const Measure& x) {
  Rational s = 0;
  for (const auto& kv : x.entries()) s += abs(kv.second);
  return s;
}

inline Measure positive_part(const Measure& x) {
  Measure::Entries e;
  for (const auto& [i, v] : x.entries()) {
    if (sgn(v) > 0) e.emplace(i, v);
  }
  return Measure(x.space(), e);
}

inline Measure negative_part(const Measure& x) {
  Measure::Entries e;
  for (const auto& [i, v] : x.entries()) {
    if (sgn(v) < 0) e.emplace(i, -v);
  }
  return Measure(x.space(), e);
}

/// Writes a zero-sum x as alpha (p - q) with p, q orthogonal lotteries.
/// The zero vector maps to (0, e_{z1}, e_{z2}) for the first two outcomes.
inline Decomposition decompose(const Measure& x) {
  if (sgn(x.total()) != 0) {
    throw Error(ErrorKind::not_in_sigma,
                "entries sum to " + to_string(x.total()) + ", not 0");
  }
  const auto& space = x.space();
  if (x.is_zero()) {
    if (space->size() < 2) {
      throw Error(ErrorKind::degenerate_space,
                  "zero decomposition needs at least two outcomes");
    }
    return {Rational(0), Lottery::point_mass(space, std::size_t{0}),
            Lottery::point_mass(space, std::size_t{1})};
  }
  const Measure pos = positive_part(x);
  const Rational alpha = pos.total();
  const Rational inv = 1 / alpha;
  return {alpha, Lottery(inv * pos), Lottery(inv * negative_part(x))};
}

/// Zeroes every coordinate outside `keep`.
inline Utility restrict(const Utility& u, const std::set<std::string>& keep) {
  const auto& space = u.space();
  std::vector<bool> mask(space->size(), false);
  for (const auto& label : keep) mask[space->index_of(label)] = true;
  Vec v = u.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!mask[i]) v[i] = 0;
  }
  return Utility(space, std::move(v));
}

/// alpha p + (1 - alpha) q.
inline Lottery mix(const Rational& alpha, const Lottery& p, const Lottery& q) {
  if (sgn(alpha) < 0 || alpha > 1) {
    throw Error(ErrorKind::range, "mixture weight " + to_string(alpha) + " outside [0,1]");
  }
  require_same_space(p.space(), q.space());
  return Lottery(alpha * p.measure() + (1 - alpha) * q.measure());
}

}  // namespace emu

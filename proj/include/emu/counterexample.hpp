#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "emu/cone.hpp"
#include "emu/measure.hpp"
#include "emu/simplex.hpp"

namespace emu::lab {

inline constexpr std::size_t kMaxTruncation = 12;

/// Finite truncation of the non-closed cone construction. Outcomes are laid
/// out as
///   a, b1, ..., bn, h(a), h(b1), ..., h(bn)
/// so Z1 = {a, b1..bn} occupies [0, n] and its image under h occupies
/// [n+1, 2n+1].
struct TruncatedConstruction {
  std::size_t n = 0;
  SpacePtr space;
  /// e~({a}) = e_a - e_{h(a)}.
  Vec anchor;
  /// anchor + e~(B) for every nonempty B in {b1..bn}; entry k corresponds to
  /// the subset with bitmask k + 1 (bit i-1 selects b_i).
  std::vector<Vec> generators;

  std::size_t z1_index(std::size_t i) const { return i; }
  std::size_t image_index(std::size_t i) const { return n + 1 + i; }
};

/// e~(B) = |B|^-2 * sum_{b in B} (e_b - e_{h(b)}), with B given as Z1
/// positions (0 = a, i = b_i).
inline Vec tilde_e(const TruncatedConstruction& t, const std::vector<std::size_t>& subset) {
  Vec v(t.space->size());
  const Rational w(1, static_cast<unsigned long>(subset.size() * subset.size()));
  for (auto i : subset) {
    v[t.z1_index(i)] += w;
    v[t.image_index(i)] -= w;
  }
  return v;
}

inline TruncatedConstruction build_truncation(std::size_t n) {
  if (n < 1 || n > kMaxTruncation) {
    throw Error(ErrorKind::range, "truncation size must lie in [1, " +
                                      std::to_string(kMaxTruncation) + "], got " +
                                      std::to_string(n));
  }
  std::vector<std::string> labels{"a"};
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("b" + std::to_string(i));
  labels.emplace_back("h(a)");
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("h(b" + std::to_string(i) + ")");

  TruncatedConstruction t;
  t.n = n;
  t.space = OutcomeSpace::create(std::move(labels));
  t.anchor = tilde_e(t, {0});
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 1; i <= n; ++i) {
      if (mask & (1u << (i - 1))) subset.push_back(i);
    }
    Vec g = tilde_e(t, subset);
    for (std::size_t k = 0; k < g.size(); ++k) g[k] += t.anchor[k];
    t.generators.push_back(std::move(g));
  }
  return t;
}

inline PolyhedralCone truncation_cone(const TruncatedConstruction& t) {
  return cone_from_generators(t.space->size(), t.generators);
}

/// Membership of the anchor in the truncated cone. Finite truncations are
/// polyhedral, so this is always OUT with a separating functional.
inline MembershipCertificate anchor_membership(const TruncatedConstruction& t) {
  return membership(truncation_cone(t), t.anchor);
}

/// Checks a certificate from anchor_membership against the raw generators.
inline bool verify_anchor_certificate(const TruncatedConstruction& t,
                                      const MembershipCertificate& cert) {
  if (cert.verdict == Verdict::in) {
    return verify_certificate(truncation_cone(t), t.anchor, cert);
  }
  if (cert.separator.size() != t.anchor.size()) return false;
  for (const auto& g : t.generators) {
    if (sgn(dot(cert.separator, g)) < 0) return false;
  }
  return sgn(dot(cert.separator, t.anchor)) < 0;
}

/// Optimal value of
///   min M  s.t.  f(anchor) = -1,  f(g) >= 0 for all generators g,
///                f(anchor + e~({b})) <= M for every b in the truncation,
/// together with an optimal functional f and the optimal multipliers of the
/// dual program, which certify optimality by matching objective values.
struct SeparationResult {
  Rational cost;
  Vec functional;
  /// Multipliers on the generator constraints.
  Vec generator_weights;
  /// Multipliers on the singleton rows, summing to one.
  Vec singleton_weights;
  /// Multiplier on the normalization f(anchor) = -1; cost = -anchor_weight.
  Rational anchor_weight;
};

inline Vec singleton_generator(const TruncatedConstruction& t, std::size_t i) {
  return t.generators[(std::size_t{1} << (i - 1)) - 1];
}

/// Solves the dual program (rows = dimension + 1) with the exact simplex:
///   min mu  s.t.  sum_j y_j g_j - sum_b z_b s_b + mu * anchor = 0,
///                 sum_b z_b = 1,  y, z >= 0,
/// and reads f off the simplex multipliers.
inline SeparationResult separate(const TruncatedConstruction& t) {
  const std::size_t dim = t.space->size();
  const std::size_t ng = t.generators.size();
  const std::size_t nb = t.n;
  const std::size_t cols = ng + nb + 2;
  linalg::Matrix a(dim + 1, Vec(cols));
  for (std::size_t j = 0; j < ng; ++j) {
    for (std::size_t i = 0; i < dim; ++i) a[i][j] = t.generators[j][i];
  }
  for (std::size_t b = 1; b <= nb; ++b) {
    const Vec s = singleton_generator(t, b);
    for (std::size_t i = 0; i < dim; ++i) a[i][ng + b - 1] = -s[i];
    a[dim][ng + b - 1] = 1;
  }
  for (std::size_t i = 0; i < dim; ++i) {
    a[i][ng + nb] = t.anchor[i];
    a[i][ng + nb + 1] = -t.anchor[i];
  }
  Vec rhs(dim + 1);
  rhs[dim] = 1;
  Vec cost(cols);
  cost[ng + nb] = 1;
  cost[ng + nb + 1] = -1;

  const auto res = lp::solve(a, rhs, cost);
  if (res.status != lp::Status::optimal) {
    throw Error(ErrorKind::schema, "separation program did not reach an optimum");
  }
  SeparationResult out;
  out.cost = -res.objective;
  out.functional.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) out.functional[i] = -res.dual[i];
  out.generator_weights.assign(res.x.begin(), res.x.begin() + static_cast<std::ptrdiff_t>(ng));
  out.singleton_weights.assign(res.x.begin() + static_cast<std::ptrdiff_t>(ng),
                               res.x.begin() + static_cast<std::ptrdiff_t>(ng + nb));
  out.anchor_weight = res.x[ng + nb] - res.x[ng + nb + 1];
  return out;
}

inline Rational separation_cost(const TruncatedConstruction& t) { return separate(t).cost; }

/// Recomputes primal feasibility, dual feasibility and equal objectives.
inline bool verify_separation(const TruncatedConstruction& t, const SeparationResult& r) {
  const std::size_t dim = t.space->size();
  if (r.functional.size() != dim || r.generator_weights.size() != t.generators.size() ||
      r.singleton_weights.size() != t.n) {
    return false;
  }
  if (dot(r.functional, t.anchor) != -1) return false;
  for (const auto& g : t.generators) {
    if (sgn(dot(r.functional, g)) < 0) return false;
  }
  for (std::size_t b = 1; b <= t.n; ++b) {
    if (dot(r.functional, singleton_generator(t, b)) > r.cost) return false;
  }
  Vec combo(dim);
  Rational mass = 0;
  for (std::size_t j = 0; j < t.generators.size(); ++j) {
    if (sgn(r.generator_weights[j]) < 0) return false;
    for (std::size_t i = 0; i < dim; ++i) combo[i] += r.generator_weights[j] * t.generators[j][i];
  }
  for (std::size_t b = 1; b <= t.n; ++b) {
    const Rational& z = r.singleton_weights[b - 1];
    if (sgn(z) < 0) return false;
    mass += z;
    const Vec s = singleton_generator(t, b);
    for (std::size_t i = 0; i < dim; ++i) combo[i] -= z * s[i];
  }
  for (std::size_t i = 0; i < dim; ++i) combo[i] += r.anchor_weight * t.anchor[i];
  return mass == 1 && is_zero(combo) && r.cost == -r.anchor_weight;
}

/// k0/b + b (1/b^2 - 1/b) = (k0 + 1)/b - 1.
inline Rational inequality_chain(std::int64_t k0, std::int64_t b_size) {
  if (k0 < 1) throw Error(ErrorKind::range, "k0 must be a positive integer");
  if (b_size < 1) throw Error(ErrorKind::range, "|B| must be a positive integer");
  const Rational b(b_size);
  return Rational(k0) / b + b * (1 / (b * b) - 1 / b);
}

}  // namespace emu::lab

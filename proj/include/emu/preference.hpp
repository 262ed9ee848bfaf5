#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "emu/cone.hpp"
#include "emu/measure.hpp"
#include "emu/random.hpp"

namespace emu {

/// One revealed statement "p is weakly preferred to q".
struct Statement {
  Lottery p;
  Lottery q;
};

struct PreferenceDataset {
  SpacePtr space;
  std::vector<Statement> statements;
};

/// Pairs (a, b) meaning outcome a is at least as good as outcome b.
struct MonotoneStructure {
  std::vector<std::pair<std::string, std::string>> relation;
};

struct Representation {
  SpacePtr space;
  std::string pin;
  /// Pinned at `pin`, primitive, sorted lexicographically; never empty.
  std::vector<Utility> utilities;
  PolyhedralCone cone;
  PolyhedralCone dual;
};

enum class Classification { entailed_only, reverse_only, indifferent, incomparable };

inline const char* classification_name(Classification c) {
  switch (c) {
    case Classification::entailed_only: return "ENTAILED_ONLY";
    case Classification::reverse_only: return "REVERSE_ONLY";
    case Classification::indifferent: return "INDIFFERENT";
    case Classification::incomparable: return "INCOMPARABLE";
  }
  return "?";
}

inline Classification classify(bool forward, bool backward) {
  if (forward && backward) return Classification::indifferent;
  if (forward) return Classification::entailed_only;
  if (backward) return Classification::reverse_only;
  return Classification::incomparable;
}

struct QueryVerdict {
  Classification classification;
  /// Membership of p - q in the cone.
  MembershipCertificate forward;
  /// Membership of q - p in the cone.
  MembershipCertificate backward;
};

/// Conic hull of the differences p - q over all statements.
inline PolyhedralCone build_cone(const PreferenceDataset& d) {
  std::vector<Vec> diffs;
  diffs.reserve(d.statements.size());
  for (const auto& s : d.statements) {
    require_same_space(d.space, s.p.space());
    require_same_space(d.space, s.q.space());
    diffs.push_back((s.p.measure() - s.q.measure()).dense());
  }
  return cone_from_generators(d.space->size(), diffs);
}

/// Extreme rays of the dual cone, reduced modulo constants at `pin`.
inline Representation extract_representation(const PreferenceDataset& d, std::string_view pin) {
  const auto& space = d.space;
  const std::size_t z = space->index_of(pin);
  PolyhedralCone cone = minimized(build_cone(d));
  PolyhedralCone dual = dual_cone(cone);

  auto pinned = [&](const IntVec& v) {
    Vec out = to_rational(v);
    const Rational shift = out[z];
    for (auto& x : out) x -= shift;
    return out;
  };

  linalg::Matrix lin;
  for (const auto& l : dual.lineality()) {
    Vec v = pinned(l);
    if (!is_zero(v)) lin.push_back(std::move(v));
  }
  std::vector<IntVec> lin_basis = detail::canonical_basis(lin, space->size());

  std::vector<IntVec> rays;
  for (const auto& g : dual.generators()) rays.push_back(primitive(pinned(g)));
  sort_unique(rays);
  for (std::size_t k = 0; k < rays.size();) {
    std::vector<IntVec> others;
    for (std::size_t j = 0; j < rays.size(); ++j) {
      if (j != k) others.push_back(rays[j]);
    }
    if (detail::in_conic_hull(to_rational(rays[k]), others, lin_basis)) {
      rays.erase(rays.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      ++k;
    }
  }

  std::vector<IntVec> all = rays;
  for (const auto& l : lin_basis) {
    all.push_back(l);
    all.push_back(negate(l));
  }
  sort_unique(all);

  std::vector<Utility> utilities;
  for (const auto& v : all) utilities.emplace_back(space, to_rational(v));
  if (utilities.empty()) utilities.push_back(Utility::constant(space, 0));

  return {space, std::string(pin), std::move(utilities), std::move(cone), std::move(dual)};
}

/// Classifies (p, q) by cone membership of p - q and q - p.
inline QueryVerdict query(const Representation& r, const Lottery& p, const Lottery& q) {
  require_same_space(r.space, p.space());
  require_same_space(r.space, q.space());
  const Vec x = (p.measure() - q.measure()).dense();
  Vec neg = x;
  for (auto& v : neg) v = -v;
  QueryVerdict out{Classification::incomparable, membership(r.cone, x), membership(r.cone, neg)};
  out.classification = classify(out.forward.verdict == Verdict::in,
                                out.backward.verdict == Verdict::in);
  return out;
}

/// Same classification computed by comparing expectations under every
/// extracted utility.
inline Classification classify_by_utilities(const Representation& r, const Lottery& p,
                                            const Lottery& q) {
  bool forward = true;
  bool backward = true;
  for (const auto& u : r.utilities) {
    const int s = cmp(expectation(p, u), expectation(q, u));
    if (s < 0) forward = false;
    if (s > 0) backward = false;
  }
  return classify(forward, backward);
}

/// Whether two utility sets have the same closed cone modulo constants.
inline bool check_uniqueness(const std::vector<Utility>& u_set, const std::vector<Utility>& v_set) {
  if (u_set.empty() || v_set.empty()) {
    throw Error(ErrorKind::empty_set, "utility set must be nonempty");
  }
  require_same_space(u_set.front().space(), v_set.front().space());
  return cone_equal(canonical_rep(u_set), canonical_rep(v_set));
}

inline void validate(const MonotoneStructure& m, const SpacePtr& space) {
  for (const auto& [a, b] : m.relation) {
    space->index_of(a);
    space->index_of(b);
  }
}

/// Adds e_a >= e_b for each a >= b in the structure.
inline PreferenceDataset monotone_extend(const PreferenceDataset& d, const MonotoneStructure& m) {
  validate(m, d.space);
  PreferenceDataset out = d;
  for (const auto& [a, b] : m.relation) {
    out.statements.push_back({Lottery::point_mass(d.space, a), Lottery::point_mass(d.space, b)});
  }
  return out;
}

/// First pair (a, b) of the structure with u(a) < u(b), if any.
inline std::optional<std::pair<std::string, std::string>> first_violation(
    const Utility& u, const MonotoneStructure& m) {
  validate(m, u.space());
  for (const auto& [a, b] : m.relation) {
    if (u[u.space()->index_of(a)] < u[u.space()->index_of(b)]) return std::make_pair(a, b);
  }
  return std::nullopt;
}

inline bool check_increasing(const Utility& u, const MonotoneStructure& m) {
  return !first_violation(u, m).has_value();
}

/// Self-test of the mixture axiom against the cone-induced relation.
///
/// Each sample draws an interior p and moves it against a random element of
/// the cone to get an entailed pair (p, q); then, for a random r and alpha in
/// (0,1), the mixed pair must be entailed too. A second, unconstrained pair
/// checks the converse direction: entailment of (p', q') and of its mixture
/// must agree.
inline bool check_independence_closure(const PreferenceDataset& d, std::size_t samples,
                                       std::uint64_t seed) {
  const PolyhedralCone cone = build_cone(d);
  const auto& space = d.space;
  Rng rng(seed);
  auto entailed = [&](const Lottery& p, const Lottery& q) {
    return contains(cone, (p.measure() - q.measure()).dense());
  };
  auto random_alpha = [&] { return frac(uniform_int(rng, 1, 7), 8); };

  for (std::size_t s = 0; s < samples; ++s) {
    const Lottery p = random_interior_lottery(space, 6, rng);
    Vec direction(space->size());
    for (const auto& g : cone.generators()) {
      const auto k = uniform_int(rng, 0, 3);
      for (std::size_t i = 0; i < direction.size(); ++i) direction[i] += k * Rational(g[i]);
    }
    for (const auto& l : cone.lineality()) {
      const auto k = uniform_int(rng, -2, 2);
      for (std::size_t i = 0; i < direction.size(); ++i) direction[i] += k * Rational(l[i]);
    }
    std::optional<Rational> t_max;
    for (std::size_t i = 0; i < direction.size(); ++i) {
      if (sgn(direction[i]) > 0) {
        Rational t = p.measure().at(i) / direction[i];
        if (!t_max || t < *t_max) t_max = t;
      }
    }
    Vec qv = p.measure().dense();
    if (t_max) {
      const Rational t = *t_max * frac(uniform_int(rng, 1, 4), 4);
      for (std::size_t i = 0; i < qv.size(); ++i) qv[i] -= t * direction[i];
    }
    const Lottery q = Lottery::from_dense(space, qv);
    const Lottery r = random_lottery(space, 6, rng);
    const Rational alpha = random_alpha();
    if (!entailed(p, q)) return false;
    if (!entailed(mix(alpha, p, r), mix(alpha, q, r))) return false;

    const Lottery p2 = random_lottery(space, 6, rng);
    const Lottery q2 = random_lottery(space, 6, rng);
    const Lottery r2 = random_lottery(space, 6, rng);
    const Rational beta = random_alpha();
    if (entailed(p2, q2) != entailed(mix(beta, p2, r2), mix(beta, q2, r2))) return false;
  }
  return true;
}

}  // namespace emu

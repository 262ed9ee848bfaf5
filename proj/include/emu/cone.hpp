#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "emu/double_description.hpp"
#include "emu/linalg.hpp"
#include "emu/measure.hpp"
#include "emu/rational.hpp"
#include "emu/simplex.hpp"

namespace emu {

/// A polyhedral convex cone stored as lineality space plus pointed part.
///
/// `lineality()` is a canonical basis (primitive rows of an RREF) of the
/// largest subspace inside the cone. `generators()` are primitive integer
/// rays orthogonal to that subspace, sorted lexicographically. When present,
/// `inequalities()` lists primitive normals `a` with <a, x> >= 0 describing
/// the same cone; equalities appear as a pair (a, -a).
class PolyhedralCone {
 public:
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<IntVec>& generators() const noexcept { return generators_; }
  const std::vector<IntVec>& lineality() const noexcept { return lineality_; }
  const std::optional<std::vector<IntVec>>& inequalities() const noexcept {
    return inequalities_;
  }

  bool is_pointed() const noexcept { return lineality_.empty(); }
  bool is_zero() const noexcept { return generators_.empty() && lineality_.empty(); }

 private:
  PolyhedralCone() = default;

  std::size_t dim_ = 0;
  std::vector<IntVec> generators_;
  std::vector<IntVec> lineality_;
  std::optional<std::vector<IntVec>> inequalities_;

  friend PolyhedralCone make_cone(std::size_t, std::vector<IntVec>, std::vector<IntVec>,
                                  std::optional<std::vector<IntVec>>);
};

enum class Verdict { in, out };

inline const char* verdict_name(Verdict v) { return v == Verdict::in ? "IN" : "OUT"; }

/// Witness for a membership answer.
///
/// IN: x = sum combination[k].second * generators()[combination[k].first]
///         + sum lineality_coefficients[j] * lineality()[j].
/// OUT: <g, separator> >= 0 on every generator, <l, separator> = 0 on the
///      lineality basis, and <x, separator> < 0.
struct MembershipCertificate {
  Verdict verdict = Verdict::out;
  std::vector<std::pair<std::size_t, Rational>> combination;
  Vec lineality_coefficients;
  IntVec separator;
};

namespace detail {

inline linalg::Matrix ortho_of(const std::vector<IntVec>& rows) {
  return linalg::orthogonal_basis(linalg::to_matrix(rows));
}

inline std::vector<IntVec> canonical_basis(const linalg::Matrix& vectors, std::size_t dim) {
  std::vector<IntVec> out;
  for (const auto& row : linalg::row_basis(vectors, dim)) out.push_back(primitive(row));
  return out;
}

inline void check_dim(const IntVec& v, std::size_t dim) {
  if (v.size() != dim) {
    throw Error(ErrorKind::dimension_mismatch, "vector dimension " + std::to_string(v.size()) +
                                                   " does not match cone dimension " +
                                                   std::to_string(dim));
  }
}

// Columns: gens..., +l_0, -l_0, +l_1, -l_1, ...
inline linalg::Matrix conic_system(std::size_t dim, const std::vector<IntVec>& gens,
                                   const std::vector<IntVec>& lin) {
  linalg::Matrix a(dim, Vec(gens.size() + 2 * lin.size()));
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t i = 0; i < dim; ++i) a[i][j] = gens[j][i];
  }
  for (std::size_t j = 0; j < lin.size(); ++j) {
    for (std::size_t i = 0; i < dim; ++i) {
      a[i][gens.size() + 2 * j] = lin[j][i];
      a[i][gens.size() + 2 * j + 1] = -lin[j][i];
    }
  }
  return a;
}

inline bool in_conic_hull(const Vec& x, const std::vector<IntVec>& gens,
                          const std::vector<IntVec>& lin) {
  if (gens.empty() && lin.empty()) return is_zero(x);
  return lp::solve(conic_system(x.size(), gens, lin), x).status == lp::Status::optimal;
}

// Indices (into `gens`) of generators whose negation also lies in the cone.
inline std::vector<bool> lineality_members(std::size_t dim, const std::vector<IntVec>& gens) {
  std::vector<bool> in_lin(gens.size(), false);
  std::vector<IntVec> lin_basis;
  for (;;) {
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (!in_lin[k]) rest.push_back(k);
    }
    if (rest.empty()) break;
    // sum lambda_k g_k + sum mu_j l_j = 0, sum lambda = 1, lambda >= 0.
    std::vector<IntVec> sub;
    for (auto k : rest) sub.push_back(gens[k]);
    linalg::Matrix a = conic_system(dim, sub, lin_basis);
    Vec norm_row(a.empty() ? sub.size() + 2 * lin_basis.size() : a[0].size());
    for (std::size_t k = 0; k < sub.size(); ++k) norm_row[k] = 1;
    a.push_back(norm_row);
    Vec b(dim + 1);
    b[dim] = 1;
    const auto res = lp::solve(a, b);
    if (res.status != lp::Status::optimal) break;
    for (std::size_t k = 0; k < sub.size(); ++k) {
      if (sgn(res.x[k]) > 0) in_lin[rest[k]] = true;
    }
    linalg::Matrix members;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (in_lin[k]) members.push_back(to_rational(gens[k]));
    }
    lin_basis = canonical_basis(members, dim);
  }
  return in_lin;
}

}  // namespace detail

/// Builds a cone from an already normalized lineality basis and pointed
/// generators. Internal; prefer the named constructors below.
inline PolyhedralCone make_cone(std::size_t dim, std::vector<IntVec> generators,
                                std::vector<IntVec> lineality,
                                std::optional<std::vector<IntVec>> inequalities) {
  PolyhedralCone c;
  c.dim_ = dim;
  // Project the pointed part off the lineality space and canonicalize.
  const auto ortho = detail::ortho_of(lineality);
  std::vector<IntVec> gens;
  for (auto& g : generators) {
    detail::check_dim(g, dim);
    IntVec p = ortho.empty() ? primitive(std::move(g))
                             : primitive(linalg::project_out(to_rational(g), ortho));
    if (!is_zero(p)) gens.push_back(std::move(p));
  }
  sort_unique(gens);
  c.generators_ = std::move(gens);
  c.lineality_ = std::move(lineality);
  if (inequalities) {
    for (auto& row : *inequalities) {
      detail::check_dim(row, dim);
      row = primitive(std::move(row));
    }
    std::erase_if(*inequalities, [](const IntVec& r) { return is_zero(r); });
    sort_unique(*inequalities);
  }
  c.inequalities_ = std::move(inequalities);
  return c;
}

/// Conic hull of finitely many vectors. An empty list gives the zero cone.
inline PolyhedralCone cone_from_generators(std::size_t dim, const std::vector<Vec>& vectors) {
  std::vector<IntVec> gens;
  for (const auto& v : vectors) {
    if (v.size() != dim) {
      throw Error(ErrorKind::dimension_mismatch, "generator dimension " +
                                                     std::to_string(v.size()) + " != " +
                                                     std::to_string(dim));
    }
    IntVec p = primitive(v);
    if (!is_zero(p)) gens.push_back(std::move(p));
  }
  sort_unique(gens);
  const auto in_lin = detail::lineality_members(dim, gens);
  linalg::Matrix lin_members;
  std::vector<IntVec> pointed;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (in_lin[k]) {
      lin_members.push_back(to_rational(gens[k]));
    } else {
      pointed.push_back(gens[k]);
    }
  }
  return make_cone(dim, std::move(pointed), detail::canonical_basis(lin_members, dim),
                   std::nullopt);
}

inline PolyhedralCone cone_from_generators(std::size_t dim, const std::vector<IntVec>& vectors) {
  std::vector<Vec> v;
  v.reserve(vectors.size());
  for (const auto& g : vectors) v.push_back(to_rational(g));
  return cone_from_generators(dim, v);
}

/// Dual cone {y : <x, y> >= 0 for all x in c}, by double description. The
/// result carries both representations: its inequalities are the generators
/// of `c` plus both orientations of c's lineality basis.
inline PolyhedralCone dual_cone(const PolyhedralCone& c) {
  const std::size_t n = c.dim();
  // y must annihilate the lineality of c: y = sum_t z_t basis[t].
  linalg::Matrix basis;
  if (c.lineality().empty()) {
    for (std::size_t t = 0; t < n; ++t) {
      Vec e(n);
      e[t] = 1;
      basis.push_back(std::move(e));
    }
  } else {
    basis = linalg::nullspace(linalg::to_matrix(c.lineality()), n);
  }
  const std::size_t k = basis.size();
  auto lift = [&](const Vec& z) {
    Vec y(n);
    for (std::size_t t = 0; t < k; ++t) {
      if (sgn(z[t]) == 0) continue;
      for (std::size_t i = 0; i < n; ++i) y[i] += z[t] * basis[t][i];
    }
    return y;
  };

  // Constraints on z: <g, B^T z> >= 0.
  linalg::Matrix a;
  for (const auto& g : c.generators()) {
    Vec row(k);
    for (std::size_t t = 0; t < k; ++t) row[t] = dot(g, basis[t]);
    a.push_back(std::move(row));
  }

  linalg::Matrix lin_z;
  if (a.empty()) {
    for (std::size_t t = 0; t < k; ++t) {
      Vec e(k);
      e[t] = 1;
      lin_z.push_back(std::move(e));
    }
  } else {
    lin_z = linalg::nullspace(a, k);
  }
  linalg::Matrix lin_y;
  for (const auto& z : lin_z) lin_y.push_back(lift(z));

  // Pointed part on the row space of a: z = Q^T w.
  std::vector<IntVec> rays;
  if (!a.empty()) {
    const linalg::Matrix q = linalg::row_basis(a, k);
    const std::size_t r = q.size();
    std::vector<IntVec> reduced;
    for (const auto& row : a) {
      Vec w(r);
      for (std::size_t s = 0; s < r; ++s) w[s] = dot(row, q[s]);
      reduced.push_back(primitive(w));
    }
    for (const auto& w : dd::extreme_rays(reduced, r)) {
      Vec z(k);
      for (std::size_t s = 0; s < r; ++s) {
        if (sgn(w[s]) == 0) continue;
        for (std::size_t t = 0; t < k; ++t) z[t] += Rational(w[s]) * q[s][t];
      }
      rays.push_back(primitive(lift(z)));
    }
  }

  std::vector<IntVec> rows = c.generators();
  for (const auto& l : c.lineality()) {
    rows.push_back(l);
    rows.push_back(negate(l));
  }
  return make_cone(n, std::move(rays), detail::canonical_basis(lin_y, n), std::move(rows));
}

/// {x : <row, x> >= 0 for every row}.
inline PolyhedralCone cone_from_inequalities(std::size_t dim, const std::vector<IntVec>& rows) {
  return dual_cone(cone_from_generators(dim, rows));
}

/// Same cone with an inequality description attached.
inline PolyhedralCone with_inequalities(const PolyhedralCone& c) {
  if (c.inequalities()) return c;
  const PolyhedralCone d = dual_cone(c);
  std::vector<IntVec> rows = d.generators();
  for (const auto& l : d.lineality()) {
    rows.push_back(l);
    rows.push_back(negate(l));
  }
  return make_cone(c.dim(), c.generators(), c.lineality(), std::move(rows));
}

/// Exact membership test with a certificate either way.
inline MembershipCertificate membership(const PolyhedralCone& c, const Vec& x) {
  if (x.size() != c.dim()) {
    throw Error(ErrorKind::dimension_mismatch, "query dimension does not match cone");
  }
  MembershipCertificate cert;
  const auto& gens = c.generators();
  const auto& lin = c.lineality();
  if (is_zero(x)) {
    cert.verdict = Verdict::in;
    cert.lineality_coefficients.assign(lin.size(), Rational(0));
    return cert;
  }
  if (gens.empty() && lin.empty()) {
    // Zero cone: any vector with <x, y> < 0 separates; take y = -x.
    cert.separator = negate(primitive(x));
    return cert;
  }
  const auto res = lp::solve(detail::conic_system(c.dim(), gens, lin), x);
  if (res.status == lp::Status::optimal) {
    cert.verdict = Verdict::in;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (sgn(res.x[k]) != 0) cert.combination.emplace_back(k, res.x[k]);
    }
    for (std::size_t j = 0; j < lin.size(); ++j) {
      cert.lineality_coefficients.push_back(res.x[gens.size() + 2 * j] -
                                            res.x[gens.size() + 2 * j + 1]);
    }
    return cert;
  }
  if (c.inequalities()) {
    for (const auto& row : *c.inequalities()) {
      if (sgn(dot(row, x)) < 0) {
        cert.separator = row;
        return cert;
      }
    }
    throw Error(ErrorKind::schema, "inequality description disagrees with generators");
  }
  // Farkas vector, projected onto span(generators, lineality, x). Pairings
  // with all of those are unchanged by the projection.
  linalg::Matrix span = linalg::to_matrix(gens);
  for (const auto& l : lin) span.push_back(to_rational(l));
  span.push_back(x);
  cert.separator = primitive(linalg::project_onto(res.farkas, linalg::orthogonal_basis(span)));
  return cert;
}

inline bool contains(const PolyhedralCone& c, const Vec& x) {
  if (x.size() != c.dim()) {
    throw Error(ErrorKind::dimension_mismatch, "query dimension does not match cone");
  }
  return detail::in_conic_hull(x, c.generators(), c.lineality());
}

inline bool contains(const PolyhedralCone& c, const IntVec& x) {
  return contains(c, to_rational(x));
}

/// Re-checks a certificate with plain arithmetic, without the LP.
inline bool verify_certificate(const PolyhedralCone& c, const Vec& x,
                               const MembershipCertificate& cert) {
  if (x.size() != c.dim()) return false;
  if (cert.verdict == Verdict::in) {
    Vec sum(c.dim());
    for (const auto& [k, lambda] : cert.combination) {
      if (k >= c.generators().size() || sgn(lambda) < 0) return false;
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += lambda * c.generators()[k][i];
    }
    if (cert.lineality_coefficients.size() != c.lineality().size()) return false;
    for (std::size_t j = 0; j < c.lineality().size(); ++j) {
      for (std::size_t i = 0; i < sum.size(); ++i) {
        sum[i] += cert.lineality_coefficients[j] * c.lineality()[j][i];
      }
    }
    return sum == x;
  }
  if (cert.separator.size() != c.dim()) return false;
  for (const auto& g : c.generators()) {
    if (sgn(dot(g, cert.separator)) < 0) return false;
  }
  for (const auto& l : c.lineality()) {
    if (sgn(dot(l, cert.separator)) != 0) return false;
  }
  return sgn(dot(cert.separator, x)) < 0;
}

/// Set equality of two cones via mutual containment of generators.
inline bool cone_equal(const PolyhedralCone& a, const PolyhedralCone& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::dimension_mismatch, "cones of different dimension");
  }
  auto covers = [](const PolyhedralCone& outer, const PolyhedralCone& inner) {
    for (const auto& g : inner.generators()) {
      if (!contains(outer, g)) return false;
    }
    for (const auto& l : inner.lineality()) {
      if (!contains(outer, l) || !contains(outer, negate(l))) return false;
    }
    return true;
  };
  return covers(b, a) && covers(a, b);
}

/// Drops pointed generators that are conic combinations of the others.
inline PolyhedralCone minimized(const PolyhedralCone& c) {
  std::vector<IntVec> kept = c.generators();
  for (std::size_t k = 0; k < kept.size();) {
    std::vector<IntVec> others;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != k) others.push_back(kept[j]);
    }
    if (detail::in_conic_hull(to_rational(kept[k]), others, c.lineality())) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      ++k;
    }
  }
  return make_cone(c.dim(), std::move(kept), c.lineality(), c.inequalities());
}

/// Cone generated by the utilities together with +e and -e; finite
/// dimension makes it closed already.
inline PolyhedralCone canonical_rep(const std::vector<Utility>& utilities) {
  if (utilities.empty()) {
    throw Error(ErrorKind::empty_set, "utility set must be nonempty");
  }
  const auto& space = utilities.front().space();
  std::vector<Vec> vectors;
  for (const auto& u : utilities) {
    require_same_space(space, u.space());
    vectors.push_back(u.values());
  }
  vectors.emplace_back(space->size(), Rational(1));
  vectors.emplace_back(space->size(), Rational(-1));
  return cone_from_generators(space->size(), vectors);
}

/// u - u(pin) e: the representative of u modulo constants vanishing at pin.
inline Utility quotient_by_constants(const Utility& u, std::string_view pin) {
  const std::size_t z = u.space()->index_of(pin);
  const Rational shift = u[z];
  Vec v = u.values();
  for (auto& x : v) x -= shift;
  return Utility(u.space(), std::move(v));
}

}  // namespace emu

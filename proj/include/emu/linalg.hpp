#pragma once

#include <optional>
#include <vector>

#include "emu/rational.hpp"

namespace emu::linalg {

using Matrix = std::vector<Vec>;  // row-major

inline Matrix to_matrix(const std::vector<IntVec>& rows) {
  Matrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(to_rational(r));
  return m;
}

/// Reduced row echelon form in place. Returns pivot columns in row order;
/// rows beyond the rank end up zero.
inline std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && sgn(m[sel][col]) == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    const Rational inv = 1 / m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || sgn(m[i][col]) == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) {
        if (sgn(m[row][j]) != 0) m[i][j] -= f * m[row][j];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(Matrix m, std::size_t cols) {
  return rref(m, cols).size();
}

inline std::size_t rank(const std::vector<IntVec>& rows, std::size_t cols) {
  return rank(to_matrix(rows), cols);
}

/// Basis of {x : m x = 0}, one vector per free column.
inline Matrix nullspace(Matrix m, std::size_t cols) {
  const auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Canonical basis of the row space: nonzero rows of the RREF.
inline Matrix row_basis(Matrix m, std::size_t cols) {
  const auto pivots = rref(m, cols);
  m.resize(pivots.size());
  return m;
}

/// Solves a x = b for some x when consistent (free variables set to zero).
inline std::optional<Vec> solve(const Matrix& a, const Vec& b,
                                std::size_t cols) {
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const auto pivots = rref(aug, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vec x(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

/// Orthogonal basis (unnormalized Gram-Schmidt) of span(vectors).
inline Matrix orthogonal_basis(const Matrix& vectors) {
  Matrix out;
  for (const auto& v : vectors) {
    Vec w = v;
    for (const auto& q : out) {
      const Rational c = dot(w, q) / dot(q, q);
      if (sgn(c) == 0) continue;
      for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * q[i];
    }
    if (!is_zero(w)) out.push_back(std::move(w));
  }
  return out;
}

/// Removes from v its component in the space spanned by the orthogonal
/// basis `ortho`.
inline Vec project_out(Vec v, const Matrix& ortho) {
  for (const auto& q : ortho) {
    const Rational c = dot(v, q) / dot(q, q);
    if (sgn(c) == 0) continue;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * q[i];
  }
  return v;
}

/// Orthogonal projection of v onto span of the orthogonal basis `ortho`.
inline Vec project_onto(const Vec& v, const Matrix& ortho) {
  Vec out(v.size());
  for (const auto& q : ortho) {
    const Rational c = dot(v, q) / dot(q, q);
    if (sgn(c) == 0) continue;
    for (std::size_t i = 0; i < v.size(); ++i) out[i] += c * q[i];
  }
  return out;
}

}  // namespace emu::linalg

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "emu/linalg.hpp"
#include "emu/rational.hpp"

namespace emu::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
  Status status = Status::infeasible;
  /// Primal solution (optimal only).
  Vec x;
  /// Dual multipliers y with c - A^T y >= 0 (optimal only).
  Vec dual;
  Rational objective;
  /// Infeasibility certificate (infeasible only): s^T A >= 0 and s^T b < 0.
  Vec farkas;
};

/// Exact two-phase primal simplex on min c^T x s.t. A x = b, x >= 0, using
/// Bland's rule for both the entering and the leaving variable. An empty `c`
/// requests a pure feasibility check.
class Simplex {
 public:
  Simplex(const linalg::Matrix& a, const Vec& b, Vec c = {})
      : rows_(a.size()), cols_(rows_ ? a[0].size() : c.size()), cost_(std::move(c)) {
    if (!cost_.empty() && cost_.size() != cols_) {
      throw Error(ErrorKind::dimension_mismatch, "cost length differs from column count");
    }
    width_ = cols_ + rows_ + 1;
    sign_.assign(rows_, 1);
    tab_.assign(rows_, Vec(width_));
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (a[i].size() != cols_) {
        throw Error(ErrorKind::dimension_mismatch, "ragged constraint matrix");
      }
      if (sgn(b[i]) < 0) sign_[i] = -1;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(a[i][j]) != 0) tab_[i][j] = sign_[i] * a[i][j];
      }
      tab_[i][cols_ + i] = 1;
      tab_[i][width_ - 1] = sign_[i] * b[i];
      basis_[i] = cols_ + i;
    }
  }

  Result run() {
    Result res;
    // Phase 1: minimise the sum of artificials.
    Vec phase1(cols_ + rows_);
    for (std::size_t i = 0; i < rows_; ++i) phase1[cols_ + i] = 1;
    load_costs(phase1);
    iterate(cols_ + rows_);
    const Rational infeas = -reduced_[width_ - 1];
    if (sgn(infeas) > 0) {
      res.status = Status::infeasible;
      res.farkas.resize(rows_);
      for (std::size_t i = 0; i < rows_; ++i) {
        // y_i = 1 - d_{artificial i}; certificate is -y in original row signs.
        res.farkas[i] = -(1 - reduced_[cols_ + i]) * sign_[i];
      }
      return res;
    }
    drive_out_artificials();
    if (cost_.empty()) {
      res.status = Status::optimal;
      res.x = primal();
      res.objective = 0;
      return res;
    }
    Vec phase2(cols_ + rows_);
    for (std::size_t j = 0; j < cols_; ++j) phase2[j] = cost_[j];
    load_costs(phase2);
    if (!iterate(cols_)) {
      res.status = Status::unbounded;
      return res;
    }
    res.status = Status::optimal;
    res.x = primal();
    res.objective = -reduced_[width_ - 1];
    res.dual.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      res.dual[i] = -reduced_[cols_ + i] * sign_[i];
    }
    return res;
  }

 private:
  void load_costs(const Vec& c) {
    reduced_.assign(width_, Rational(0));
    for (std::size_t j = 0; j < cols_ + rows_; ++j) reduced_[j] = c[j];
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& cb = c[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < width_; ++j) {
        if (sgn(tab_[i][j]) != 0) reduced_[j] -= cb * tab_[i][j];
      }
    }
  }

  void pivot(std::size_t r, std::size_t col) {
    const Rational inv = 1 / tab_[r][col];
    for (auto& v : tab_[r]) {
      if (sgn(v) != 0) v *= inv;
    }
    const Vec& prow = tab_[r];
    auto eliminate = [&](Vec& row) {
      if (sgn(row[col]) == 0) return;
      const Rational f = row[col];
      for (std::size_t j = 0; j < width_; ++j) {
        if (sgn(prow[j]) != 0) row[j] -= f * prow[j];
      }
    };
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i != r) eliminate(tab_[i]);
    }
    eliminate(reduced_);
    basis_[r] = col;
  }

  // Returns false on an unbounded ray.
  bool iterate(std::size_t eligible) {
    for (;;) {
      std::size_t enter = eligible;
      for (std::size_t j = 0; j < eligible; ++j) {
        if (sgn(reduced_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == eligible) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (sgn(tab_[i][enter]) <= 0) continue;
        Rational ratio = tab_[i][width_ - 1] / tab_[i][enter];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (!leave) return false;
      pivot(*leave, enter);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < cols_) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(tab_[i][j]) != 0) {
          pivot(i, j);
          break;
        }
      }
      // A row with no structural entry left is redundant; its artificial stays
      // basic at zero and never moves.
    }
  }

  Vec primal() const {
    Vec x(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < cols_) x[basis_[i]] = tab_[i][width_ - 1];
    }
    return x;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::size_t width_ = 0;
  Vec cost_;
  std::vector<int> sign_;
  linalg::Matrix tab_;
  Vec reduced_;
  std::vector<std::size_t> basis_;
};

inline Result solve(const linalg::Matrix& a, const Vec& b, Vec c = {}) {
  return Simplex(a, b, std::move(c)).run();
}

}  // namespace emu::lp

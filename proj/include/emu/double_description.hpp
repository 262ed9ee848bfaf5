#pragma once

#include <boost/dynamic_bitset.hpp>

#include <vector>

#include "emu/linalg.hpp"
#include "emu/rational.hpp"

namespace emu::dd {

/// Extreme rays of the pointed cone {w : <row, w> >= 0 for every row}.
/// Rows must have full column rank `dim`. Inequalities are inserted in the
/// given order, after an initial simplicial cone built from the first
/// linearly independent rows.
inline std::vector<IntVec> extreme_rays(const std::vector<IntVec>& rows, std::size_t dim) {
  if (dim == 0) return {};
  const std::size_t m = rows.size();

  // Pick the first `dim` independent rows.
  std::vector<std::size_t> initial;
  {
    linalg::Matrix acc;
    for (std::size_t i = 0; i < m && initial.size() < dim; ++i) {
      acc.push_back(to_rational(rows[i]));
      if (linalg::rank(acc, dim) == initial.size() + 1) {
        initial.push_back(i);
      } else {
        acc.pop_back();
      }
    }
  }
  if (initial.size() != dim) {
    throw Error(ErrorKind::dimension_mismatch, "constraint rows are not of full rank");
  }

  struct Ray {
    IntVec coords;
    boost::dynamic_bitset<> zeros;
  };

  // Columns of the inverse of the initial block: ray t is tight on every
  // initial row except row t.
  std::vector<Ray> rays;
  {
    linalg::Matrix block;
    for (auto i : initial) block.push_back(to_rational(rows[i]));
    for (std::size_t t = 0; t < dim; ++t) {
      Vec unit(dim);
      unit[t] = 1;
      auto sol = linalg::solve(block, unit, dim);
      Ray r{primitive(*sol), boost::dynamic_bitset<>(m)};
      for (std::size_t s = 0; s < dim; ++s) {
        if (s != t) r.zeros.set(initial[s]);
      }
      rays.push_back(std::move(r));
    }
  }

  boost::dynamic_bitset<> processed(m);
  for (auto i : initial) processed.set(i);

  auto adjacent = [&](const boost::dynamic_bitset<>& common) {
    if (common.count() + 2 < dim) return false;
    std::vector<IntVec> active;
    for (auto k = common.find_first(); k != boost::dynamic_bitset<>::npos;
         k = common.find_next(k)) {
      active.push_back(rows[k]);
    }
    return linalg::rank(active, dim) == dim - 2;
  };

  for (std::size_t i = 0; i < m; ++i) {
    if (processed.test(i)) continue;
    std::vector<std::size_t> pos, neg;
    std::vector<Integer> slack(rays.size());
    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      slack[k] = dot(rows[i], rays[k].coords);
      const int s = sgn(slack[k]);
      if (s > 0) pos.push_back(k);
      if (s < 0) neg.push_back(k);
    }
    for (std::size_t k = 0; k < rays.size(); ++k) {
      const int s = sgn(slack[k]);
      if (s > 0) next.push_back(rays[k]);
      if (s == 0) {
        next.push_back(rays[k]);
        next.back().zeros.set(i);
      }
    }
    for (auto p : pos) {
      for (auto n : neg) {
        boost::dynamic_bitset<> common = rays[p].zeros & rays[n].zeros;
        if (!adjacent(common)) continue;
        IntVec combo(dim);
        for (std::size_t d = 0; d < dim; ++d) {
          combo[d] = slack[p] * rays[n].coords[d] - slack[n] * rays[p].coords[d];
        }
        common.set(i);
        next.push_back({primitive(std::move(combo)), std::move(common)});
      }
    }
    rays = std::move(next);
    processed.set(i);
  }

  std::vector<IntVec> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.coords));
  return out;
}

}  // namespace emu::dd

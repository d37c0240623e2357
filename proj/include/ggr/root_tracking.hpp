#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <limits>
#include <numeric>
#include <vector>

#include <Eigen/Core>

#include "ggr/angle.hpp"
#include "ggr/quartic.hpp"

namespace ggr {

/// Continuous root paths of the golden quartic over an angle grid.
/// values(i, k) is the value of path k at grid[i].
template <std::floating_point Scalar>
struct RootPaths {
  std::vector<Angle<Scalar>> grid;
  Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 4> values;
};

/// Follows the four roots along an increasing grid. Each step assigns the new
/// roots to the paths by the permutation with minimal total displacement
/// (ties go to the lexicographically first permutation).
template <std::floating_point Scalar>
RootPaths<Scalar> track_roots(const std::vector<Angle<Scalar>>& grid) {
  if (grid.empty()) throw InvalidInput("track_roots: grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i].value() > grid[i - 1].value())) {
      throw InvalidInput("track_roots: grid must be strictly increasing");
    }
  }

  RootPaths<Scalar> out;
  out.grid = grid;
  out.values.resize(static_cast<Eigen::Index>(grid.size()), 4);

  const auto first = solve_golden_quartic(grid.front());
  for (int k = 0; k < 4; ++k) out.values(0, k) = first.roots[k];

  for (std::size_t i = 1; i < grid.size(); ++i) {
    const auto q = solve_golden_quartic(grid[i]);
    const auto row = static_cast<Eigen::Index>(i);
    std::array<int, 4> perm{0, 1, 2, 3};
    std::array<int, 4> best = perm;
    Scalar best_cost = std::numeric_limits<Scalar>::infinity();
    do {
      Scalar cost = 0;
      for (int k = 0; k < 4; ++k) cost += std::abs(q.roots[perm[k]] - out.values(row - 1, k));
      if (cost < best_cost) {
        best_cost = cost;
        best = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int k = 0; k < 4; ++k) out.values(row, k) = q.roots[best[k]];
  }
  return out;
}

/// count points spanning [start, stop] inclusive.
template <std::floating_point Scalar>
std::vector<Angle<Scalar>> uniform_grid(Scalar start, Scalar stop, std::size_t count) {
  if (count < 2) throw InvalidInput("uniform_grid: count must be at least 2");
  std::vector<Angle<Scalar>> g;
  g.reserve(count);
  const Scalar step = (stop - start) / static_cast<Scalar>(count - 1);
  for (std::size_t i = 0; i + 1 < count; ++i) g.emplace_back(start + step * static_cast<Scalar>(i));
  g.emplace_back(stop);
  return g;
}

}  // namespace ggr

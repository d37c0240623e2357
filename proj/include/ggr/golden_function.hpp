#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "ggr/angle.hpp"
#include "ggr/quartic.hpp"
#include "ggr/root_tracking.hpp"

namespace ggr {

template <std::floating_point Scalar>
BranchValues<Scalar> branches(Angle<Scalar> alpha) {
  return classify_roots(solve_golden_quartic(alpha));
}

/// The generalized golden ratio: the positive real root at alpha.
template <std::floating_point Scalar>
Scalar phi1(Angle<Scalar> alpha) {
  return branches(alpha).phi1;
}

template <std::floating_point Scalar>
Scalar phi2(Angle<Scalar> alpha) {
  return branches(alpha).phi2;
}

template <std::floating_point Scalar>
std::complex<Scalar> phi3(Angle<Scalar> alpha) {
  return branches(alpha).phi3;
}

template <std::floating_point Scalar>
std::complex<Scalar> phi4(Angle<Scalar> alpha) {
  return branches(alpha).phi4;
}

/// Midpoint of phi1(0) and phi1(pi); equals sqrt(5)/2.
template <std::floating_point Scalar>
Scalar cosine_approximation_offset() {
  static const Scalar offset =
      (phi1(Angle<Scalar>(0)) + phi1(Angle<Scalar>(std::numbers::pi_v<Scalar>))) / 2;
  return offset;
}

/// y(alpha) = (phi1(0) + phi1(pi))/2 + cos(alpha)/2.
template <std::floating_point Scalar>
Scalar cosine_approximation(Angle<Scalar> alpha) {
  return cosine_approximation_offset<Scalar>() + std::cos(alpha.reduced()) / 2;
}

template <std::floating_point Scalar>
struct BranchTable {
  Scalar start = 0;
  Scalar stop = 0;
  std::size_t count = 0;
  std::vector<BranchValues<Scalar>> rows;
};

/// Branch values on count uniformly spaced angles in [start, stop].
template <std::floating_point Scalar>
BranchTable<Scalar> sample_branches(Angle<Scalar> start, Angle<Scalar> stop, std::size_t count) {
  if (count < 2) throw InvalidInput("sample_branches: count must be at least 2");
  if (!(start.value() < stop.value())) throw InvalidInput("sample_branches: start must be below stop");
  BranchTable<Scalar> t{start.value(), stop.value(), count, {}};
  t.rows.reserve(count);
  for (const auto& a : uniform_grid(start.value(), stop.value(), count)) t.rows.push_back(branches(a));
  return t;
}

/// Trapezoidal mean of phi1 over [0, 2pi] on a count-point grid.
template <std::floating_point Scalar>
Scalar mean_ggr(std::size_t count) {
  if (count < 1000) throw InvalidInput("mean_ggr: count must be at least 1000");
  const auto grid = uniform_grid(Scalar(0), 2 * std::numbers::pi_v<Scalar>, count);
  Scalar sum = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const Scalar w = (i == 0 || i + 1 == count) ? Scalar(0.5) : Scalar(1);
    sum += w * phi1(grid[i]);
  }
  return sum / static_cast<Scalar>(count - 1);
}

}  // namespace ggr

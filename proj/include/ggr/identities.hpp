#pragma once

// Algebraic identities satisfied by the branch functions, evaluated over a
// uniform angle grid. Each check reports the worst value seen on the grid.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "ggr/golden_function.hpp"

namespace ggr {

struct CheckResult {
  std::string name;
  double max_residual = 0;
  double tolerance = 0;
  bool pass = false;
  std::string note;
};

/// Elementary symmetric polynomials e1..e4 of the four branch values.
template <std::floating_point Scalar>
std::array<std::complex<Scalar>, 4> elementary_symmetric(const BranchValues<Scalar>& b) {
  const auto x = b.as_array();
  std::complex<Scalar> e1{}, e2{}, e3{}, e4 = x[0] * x[1] * x[2] * x[3];
  for (int i = 0; i < 4; ++i) {
    e1 += x[i];
    for (int j = i + 1; j < 4; ++j) {
      e2 += x[i] * x[j];
      for (int k = j + 1; k < 4; ++k) e3 += x[i] * x[j] * x[k];
    }
  }
  return {e1, e2, e3, e4};
}

/// The number of grid points used by identity sweeps. Prime, so the grid
/// avoids landing on symmetry points in lockstep.
inline constexpr std::size_t kIdentityGridCount = 10007;

template <std::floating_point Scalar>
std::vector<CheckResult> identity_suite(std::size_t grid_count = kIdentityGridCount) {
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  const auto grid = uniform_grid(Scalar(0), 2 * pi, grid_count);
  const double tol = 1e-9;

  double even = 0, periodic = 0, conj = 0, vsum = 0, vprod = 0, vpairs = 0, vtriples = 0;
  double printed_sign = 0, shift12 = 0, shift34 = 0, re_identity = 0;
  double bounded_sum = 0, bounded_re = 0;
  Scalar min_phi1 = 1e300, max_phi2 = -1e300;

  auto dist = [](auto a, auto b) { return static_cast<double>(std::abs(a - b)); };
  for (const auto& alpha : grid) {
    const auto b = branches(alpha);
    const auto neg = branches(-alpha);
    const auto wrap = branches(Angle<Scalar>(alpha.value() + 2 * pi));
    const auto half = branches(Angle<Scalar>(alpha.value() + pi));
    const auto x = b.as_array();
    const auto xn = neg.as_array();
    const auto xw = wrap.as_array();
    for (int k = 0; k < 4; ++k) {
      even = std::max(even, dist(x[k], xn[k]));
      periodic = std::max(periodic, dist(x[k], xw[k]));
    }
    min_phi1 = std::min(min_phi1, b.phi1);
    max_phi2 = std::max(max_phi2, b.phi2);
    conj = std::max(conj, dist(b.phi4, std::conj(b.phi3)));

    const auto e = elementary_symmetric(b);
    const Scalar c = std::cos(alpha.reduced());
    vsum = std::max(vsum, dist(e[0], std::complex<Scalar>(0)));
    vpairs = std::max(vpairs, dist(e[1], std::complex<Scalar>(-1)));
    vtriples = std::max(vtriples, dist(e[2], std::complex<Scalar>(2 * c)));
    printed_sign = std::max(printed_sign, dist(e[2], std::complex<Scalar>(-2 * c)));
    vprod = std::max(vprod, dist(e[3], std::complex<Scalar>(-1)));

    shift12 = std::max(shift12, dist(b.phi1, -half.phi2));
    shift34 = std::max(shift34, dist(b.phi3, -half.phi4));
    re_identity = std::max(re_identity, dist(b.phi3.real(), -(b.phi1 + b.phi2) / 2));
    bounded_sum = std::max(bounded_sum, static_cast<double>(std::abs(b.phi1 + b.phi2)));
    bounded_re = std::max(bounded_re, static_cast<double>(std::abs(b.phi3.real())));
  }

  std::vector<CheckResult> r;
  auto add = [&](std::string name, double value, double t, std::string note = {}) {
    r.push_back({std::move(name), value, t, value <= t, std::move(note)});
  };
  add("evenness phi_k(-a) = phi_k(a)", even, tol);
  add("periodicity phi_k(a + 2pi) = phi_k(a)", periodic, tol);
  {
    // Reported as the worst violation; passes only when phi1 > 0 and phi2 < 0 everywhere.
    const double violation = std::max(0.0, static_cast<double>(std::max(-min_phi1, max_phi2)));
    r.push_back({"sign split phi1 > 0, phi2 < 0", violation, 0.0, min_phi1 > 0 && max_phi2 < 0,
                 "min phi1 = " + std::to_string(static_cast<double>(min_phi1)) +
                     ", max phi2 = " + std::to_string(static_cast<double>(max_phi2))});
  }
  add("conjugacy phi4 = conj(phi3)", conj, tol);
  add("sum of branches = 0", vsum, tol);
  add("product of branches = -1", vprod, tol);
  add("sum over unordered pairs = -1", vpairs, tol);
  add("sum over unordered triples = +2 cos a", vtriples, tol,
      "the printed form -2 cos a deviates by up to " + std::to_string(printed_sign) +
          "; +2 cos a is the sign forced by the x coefficient");
  add("shift phi1(a) = -phi2(a + pi)", shift12, tol);
  add("shift phi3(a) = -phi4(a + pi)", shift34, tol);
  add("Re phi3 = -(phi1 + phi2)/2", re_identity, tol);
  // Both bounds are attained at a = 0; the slack absorbs rounding there.
  add("bounded |phi1 + phi2| <= 1", bounded_sum, 1.0 + 1e-12);
  add("bounded |Re phi3| <= 0.5", bounded_re, 0.5 + 1e-12);

  const Scalar p0 = phi1(Angle<Scalar>(0));
  const Scalar ppi = phi1(Angle<Scalar>(pi));
  const Scalar phalf = phi1(Angle<Scalar>(pi / 2));
  add("poles phi1(0) phi1(pi) = 1", std::abs(static_cast<double>(p0 * ppi - 1)), tol);
  add("poles phi1(0) - phi1(pi) = 1", std::abs(static_cast<double>(p0 - ppi - 1)), tol);
  add("square phi1(pi/2)^2 = phi1(0)", std::abs(static_cast<double>(phalf * phalf - p0)), tol);
  add("sqrt2 point phi1(290.70 deg) = sqrt(2)",
      std::abs(static_cast<double>(phi1(Angle<Scalar>::degrees(Scalar(290.70))) - std::numbers::sqrt2_v<Scalar>)),
      1e-3, "loose tolerance: the angle is known to two decimals");
  return r;
}

}  // namespace ggr

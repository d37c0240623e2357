#pragma once

// Roots of the golden quartic x^4 - x^2 - 2x cos(alpha) - 1 = 0.
//
// The quartic has no cubic term, so Ferrari's method applies directly to it
// as a depressed quartic. The resolvent cubic
//   8m^3 - 8m^2 + 10m - 4cos^2(alpha) = 0
// is strictly increasing (its derivative has negative discriminant), so it
// has exactly one real root, m >= 0. The quartic then splits into two real
// quadratics. Every root is polished with Newton's method afterwards.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <concepts>
#include <limits>
#include <numbers>
#include <string>

#include "ggr/angle.hpp"
#include "ggr/errors.hpp"

namespace ggr {

/// Numerical thresholds shared by the solver and its consumers.
template <std::floating_point Scalar>
struct Tolerances {
  /// Target for |p(root)| after polishing.
  static Scalar residual() {
    return std::max(Scalar(1e-10), 64 * std::numeric_limits<Scalar>::epsilon());
  }
  /// A polished root is real iff |Im| is at most this.
  static Scalar real_classification() {
    return std::max(Scalar(1e-9), 256 * std::numeric_limits<Scalar>::epsilon());
  }
  static Scalar conjugate_pair() { return real_classification(); }
};

template <std::floating_point Scalar>
struct RootQuartet {
  Angle<Scalar> alpha;
  /// Sorted by real part, then imaginary part.
  std::array<std::complex<Scalar>, 4> roots;
  /// |p(root)| for each entry of roots.
  std::array<Scalar, 4> residuals;
};

/// The four roots regrouped into continuous branches: phi1 is the positive
/// real root, phi2 the negative real root, phi3 the root with Im > 0 and
/// phi4 = conj(phi3).
template <std::floating_point Scalar>
struct BranchValues {
  Angle<Scalar> alpha;
  Scalar phi1 = 0;
  Scalar phi2 = 0;
  std::complex<Scalar> phi3;
  std::complex<Scalar> phi4;

  std::array<std::complex<Scalar>, 4> as_array() const {
    return {std::complex<Scalar>(phi1), std::complex<Scalar>(phi2), phi3, phi4};
  }
};

/// p(x) = x^4 - x^2 - 2 cos_alpha x - 1, for real or complex x.
template <typename T, std::floating_point Scalar>
T golden_quartic(T x, Scalar cos_alpha) {
  return ((x * x - Scalar(1)) * x - Scalar(2) * cos_alpha) * x - Scalar(1);
}

template <typename T, std::floating_point Scalar>
T golden_quartic_derivative(T x, Scalar cos_alpha) {
  return (Scalar(4) * x * x - Scalar(2)) * x - Scalar(2) * cos_alpha;
}

namespace detail {

template <std::floating_point Scalar>
Scalar resolvent_root(Scalar cos_alpha) {
  // 8m^3 - 8m^2 + 10m - 4c^2 = 0 divided by 8, then depressed via m = t - a/3.
  const Scalar c2 = cos_alpha * cos_alpha;
  const Scalar a = -1, b = Scalar(5) / 4, d = -c2 / 2;  // m^3 + a m^2 + b m + d
  const Scalar p = b - a * a / 3;
  const Scalar q = 2 * a * a * a / 27 - a * b / 3 + d;
  // p > 0, so Cardano's single real root is well defined.
  const Scalar disc = std::sqrt(q * q / 4 + p * p * p / 27);
  Scalar m = std::cbrt(-q / 2 + disc) + std::cbrt(-q / 2 - disc) - a / 3;
  // The small root near cos = 0 loses relative accuracy to cancellation.
  for (int i = 0; i < 8; ++i) {
    const Scalar f = ((m + a) * m + b) * m + d;
    const Scalar df = (3 * m + 2 * a) * m + b;
    const Scalar step = f / df;
    m -= step;
    if (std::abs(step) <= std::numeric_limits<Scalar>::epsilon() * std::abs(m)) break;
  }
  return std::max(m, Scalar(0));
}

template <std::floating_point Scalar>
void quadratic_roots(Scalar b, Scalar c, std::complex<Scalar>* out) {
  // x^2 + b x + c = 0
  const Scalar disc = b * b - 4 * c;
  if (disc >= 0) {
    const Scalar s = std::sqrt(disc);
    const Scalar q = -(b + std::copysign(s, b)) / 2;
    out[0] = q;
    out[1] = q != 0 ? c / q : Scalar(0);
  } else {
    const Scalar re = -b / 2, im = std::sqrt(-disc) / 2;
    out[0] = {re, im};
    out[1] = {re, -im};
  }
}

/// Unpolished estimates of the four roots.
template <std::floating_point Scalar>
std::array<std::complex<Scalar>, 4> ferrari_estimates(Scalar cos_alpha) {
  // x^4 + P x^2 + Q x + R with P = -1, Q = -2c, R = -1.
  constexpr Scalar P = -1, R = -1;
  const Scalar Q = -2 * cos_alpha;
  std::array<std::complex<Scalar>, 4> x;
  if (std::abs(Q) < Scalar(1e-7)) {
    // Biquadratic: y^2 + P y + R = 0, x = ±sqrt(y).
    std::complex<Scalar> y[2];
    quadratic_roots(P, R, y);
    for (int i = 0; i < 2; ++i) {
      const auto r = std::sqrt(y[i]);
      x[2 * i] = r;
      x[2 * i + 1] = -r;
    }
    return x;
  }
  // (x^2 + P/2 + m)^2 = 2m (x - Q/(4m))^2 with the resolvent root m > 0.
  const Scalar m = resolvent_root(cos_alpha);
  const Scalar s = std::sqrt(2 * m);
  const Scalar base = P / 2 + m;
  const Scalar shift = Q / (2 * s);
  quadratic_roots(-s, base + shift, &x[0]);
  quadratic_roots(s, base - shift, &x[2]);
  return x;
}

template <std::floating_point Scalar>
std::complex<Scalar> newton_polish(std::complex<Scalar> z, Scalar cos_alpha) {
  const Scalar target = Tolerances<Scalar>::residual() / 16;
  for (int i = 0; i < 64; ++i) {
    const auto f = golden_quartic(z, cos_alpha);
    const auto df = golden_quartic_derivative(z, cos_alpha);
    if (std::abs(df) == Scalar(0)) break;
    const auto step = f / df;
    z -= step;
    if (std::abs(f) <= target &&
        std::abs(step) <= 4 * std::numeric_limits<Scalar>::epsilon() * std::max(Scalar(1), std::abs(z))) {
      break;
    }
  }
  return z;
}

template <std::floating_point Scalar>
Scalar newton_polish(Scalar x, Scalar cos_alpha) {
  for (int i = 0; i < 64; ++i) {
    const Scalar df = golden_quartic_derivative(x, cos_alpha);
    if (df == Scalar(0)) break;
    const Scalar step = golden_quartic(x, cos_alpha) / df;
    x -= step;
    if (std::abs(step) <= 4 * std::numeric_limits<Scalar>::epsilon() * std::max(Scalar(1), std::abs(x))) break;
  }
  return x;
}

}  // namespace detail

/// All four roots of the golden quartic at alpha, polished to the residual
/// tolerance and sorted by (Re, Im).
template <std::floating_point Scalar>
RootQuartet<Scalar> solve_golden_quartic(Angle<Scalar> alpha) {
  const Scalar cos_alpha = std::cos(alpha.reduced());
  auto roots = detail::ferrari_estimates(cos_alpha);
  const Scalar real_tol = Tolerances<Scalar>::real_classification();
  for (auto& r : roots) {
    if (r.imag() == Scalar(0) || std::abs(r.imag()) <= real_tol * Scalar(1e-3)) {
      r = detail::newton_polish(r.real(), cos_alpha);
    } else {
      r = detail::newton_polish(r, cos_alpha);
    }
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });

  RootQuartet<Scalar> out{alpha, roots, {}};
  for (int i = 0; i < 4; ++i) {
    out.residuals[i] = std::abs(golden_quartic(roots[i], cos_alpha));
    if (!(out.residuals[i] <= Tolerances<Scalar>::residual())) {
      throw ClassificationError("root polishing did not reach the residual tolerance at alpha = " +
                                std::to_string(static_cast<double>(alpha.value())));
    }
  }
  return out;
}

/// Splits a quartet into the branch values phi1..phi4.
template <std::floating_point Scalar>
BranchValues<Scalar> classify_roots(const RootQuartet<Scalar>& q) {
  const Scalar tol = Tolerances<Scalar>::real_classification();
  std::array<Scalar, 4> reals{};
  std::array<std::complex<Scalar>, 4> complexes{};
  int n_real = 0, n_complex = 0;
  for (const auto& r : q.roots) {
    if (std::abs(r.imag()) <= tol) {
      reals[n_real++] = r.real();
    } else {
      complexes[n_complex++] = r;
    }
  }
  const auto where = " at alpha = " + std::to_string(static_cast<double>(q.alpha.value()));
  if (n_real != 2) {
    throw ClassificationError("expected 2 real roots, found " + std::to_string(n_real) + where);
  }
  const Scalar lo = std::min(reals[0], reals[1]);
  const Scalar hi = std::max(reals[0], reals[1]);
  if (!(hi > 0 && lo < 0)) {
    throw ClassificationError("real roots do not straddle zero" + where);
  }
  if (std::abs(complexes[0] - std::conj(complexes[1])) > Tolerances<Scalar>::conjugate_pair()) {
    throw ClassificationError("complex roots are not a conjugate pair" + where);
  }

  BranchValues<Scalar> b;
  b.alpha = q.alpha;
  b.phi1 = hi;
  b.phi2 = lo;
  b.phi3 = complexes[0].imag() > 0 ? complexes[0] : complexes[1];
  b.phi4 = std::conj(b.phi3);
  return b;
}

}  // namespace ggr

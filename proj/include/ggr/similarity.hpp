#pragma once

// Golden pairs and similarity sets of vectors.
//
// Two vectors (a, b) form a golden pair when ||b + a|| ||a|| = ||b||^2. For a
// direction e at angle theta to a, the vector ||a|| phi1(theta) e is the
// unique partner of a along e; sweeping e gives the similarity set S(a).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <vector>

#include <Eigen/Core>

#include "ggr/angle.hpp"
#include "ggr/errors.hpp"
#include "ggr/golden_function.hpp"

namespace ggr {

template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

using Vec2d = Vec2<double>;
using Vec3d = Vec3<double>;

/// f(a, b) = ||a|| / ||b||.
template <typename DerivedA, typename DerivedB>
typename DerivedA::RealScalar proportion(const Eigen::MatrixBase<DerivedA>& a,
                                         const Eigen::MatrixBase<DerivedB>& b) {
  const auto nb = b.norm();
  if (nb == 0) throw DivisionDomainError("proportion: ||b|| = 0");
  return a.norm() / nb;
}

template <std::floating_point Scalar>
Scalar proportion(Scalar a, Scalar b) {
  if (b == 0) throw DivisionDomainError("proportion: ||b|| = 0");
  return std::abs(a) / std::abs(b);
}

/// | ||b + a|| ||a|| - ||b||^2 |
template <typename DerivedA, typename DerivedB>
typename DerivedA::RealScalar golden_pair_residual(const Eigen::MatrixBase<DerivedA>& a,
                                                   const Eigen::MatrixBase<DerivedB>& b) {
  return std::abs((b + a).norm() * a.norm() - b.squaredNorm());
}

template <std::floating_point Scalar>
Scalar golden_pair_residual(Scalar a, Scalar b) {
  return std::abs(std::abs(b + a) * std::abs(a) - b * b);
}

/// True iff the golden-pair residual is at most tol ||b||^2.
template <typename DerivedA, typename DerivedB>
bool is_golden_pair(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
                    typename DerivedA::RealScalar tol) {
  if (a.norm() == 0 || b.norm() == 0) throw InvalidInput("is_golden_pair: zero-norm vector");
  return golden_pair_residual(a, b) <= tol * b.squaredNorm();
}

template <std::floating_point Scalar>
bool is_golden_pair(Scalar a, Scalar b, Scalar tol) {
  if (a == 0 || b == 0) throw InvalidInput("is_golden_pair: zero-norm vector");
  return golden_pair_residual(a, b) <= tol * b * b;
}

/// The two real numbers in golden ratio with a: the partner along a and the
/// partner opposite to it.
template <std::floating_point Scalar>
std::array<Scalar, 2> golden_partners_1d(Scalar a) {
  if (a == 0) throw InvalidInput("golden_partners_1d: a must be nonzero");
  const Scalar m = std::abs(a);
  const Scalar same = phi1(Angle<Scalar>(0));
  const Scalar opposite = phi1(Angle<Scalar>(std::numbers::pi_v<Scalar>));
  if (a > 0) return {m * same, -m * opposite};
  return {m * opposite, -m * same};
}

/// Polar angle in [0, 2pi).
template <std::floating_point Scalar>
Scalar arg(const Vec2<Scalar>& v) {
  return Angle<Scalar>(std::atan2(v.y(), v.x())).reduced();
}

template <std::floating_point Scalar>
Vec2<Scalar> unit_direction(Angle<Scalar> phi) {
  return {std::cos(phi.value()), std::sin(phi.value())};
}

template <std::floating_point Scalar>
struct SimilaritySample2D {
  Angle<Scalar> direction;
  Vec2<Scalar> vector;
  Scalar ggr = 0;
};

/// ||a|| phi1(arg(a) - phi) e(phi).
template <std::floating_point Scalar>
SimilaritySample2D<Scalar> similar_vector_2d(const Vec2<Scalar>& a, Angle<Scalar> phi) {
  const Scalar norm = a.norm();
  if (!(norm > 0)) throw InvalidInput("similar_vector_2d: zero vector");
  const Scalar g = phi1(Angle<Scalar>(arg(a) - phi.value()));
  return {phi, norm * g * unit_direction(phi), g};
}

/// Samples of S(a) at phi = 2 pi k / count, k = 0..count-1.
template <std::floating_point Scalar>
std::vector<SimilaritySample2D<Scalar>> similarity_set_2d(const Vec2<Scalar>& a, std::size_t count) {
  if (!(a.norm() > 0)) throw InvalidInput("similarity_set_2d: zero vector");
  if (count < 1) throw InvalidInput("similarity_set_2d: count must be at least 1");
  std::vector<SimilaritySample2D<Scalar>> out;
  out.reserve(count);
  const Scalar step = 2 * std::numbers::pi_v<Scalar> / static_cast<Scalar>(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(similar_vector_2d(a, Angle<Scalar>(step * static_cast<Scalar>(k))));
  }
  return out;
}

template <std::floating_point Scalar>
struct SummedSimilaritySet2D {
  std::vector<SimilaritySample2D<Scalar>> samples;  ///< S(a1 + a2)
  /// Worst angle-wise mismatch between phi1(phi) ||a1 + a2|| e(gamma - phi)
  /// and the sum of the rotated summands.
  Scalar max_angle_wise_residual = 0;
};

/// Similarity set of a1 + a2, checked against the angle-wise sum of the
/// rotated similarity fields of a1 and a2.
template <std::floating_point Scalar>
SummedSimilaritySet2D<Scalar> sum_similarity_sets_2d(const Vec2<Scalar>& a1, const Vec2<Scalar>& a2,
                                                     std::size_t count) {
  const Scalar n1 = a1.norm(), n2 = a2.norm();
  if (!(n1 > 0) || !(n2 > 0)) throw InvalidInput("sum_similarity_sets_2d: zero vector");
  const Vec2<Scalar> sum = a1 + a2;
  const Scalar n = sum.norm();
  if (!(n > 64 * std::numeric_limits<Scalar>::epsilon() * (n1 + n2))) {
    throw DegenerateSumError("sum_similarity_sets_2d: a1 + a2 = 0, direction undefined");
  }

  SummedSimilaritySet2D<Scalar> out{similarity_set_2d(sum, count), 0};
  const Scalar gamma = arg(sum), alpha1 = arg(a1), alpha2 = arg(a2);
  for (const auto& s : out.samples) {
    const Scalar phi = s.direction.value();
    const Scalar g = phi1(s.direction);
    const Vec2<Scalar> lhs = g * n * unit_direction(Angle<Scalar>(gamma - phi));
    const Vec2<Scalar> rhs = g * n1 * unit_direction(Angle<Scalar>(alpha1 - phi)) +
                             g * n2 * unit_direction(Angle<Scalar>(alpha2 - phi));
    out.max_angle_wise_residual = std::max(out.max_angle_wise_residual, (lhs - rhs).norm());
  }
  return out;
}

/// [sin phi cos psi, sin phi sin psi, cos phi]
template <std::floating_point Scalar>
Vec3<Scalar> spherical_direction(Angle<Scalar> phi, Angle<Scalar> psi) {
  const Scalar sp = std::sin(phi.value());
  return {sp * std::cos(psi.value()), sp * std::sin(psi.value()), std::cos(phi.value())};
}

template <std::floating_point Scalar>
struct SimilaritySample3D {
  Angle<Scalar> polar;    ///< phi in [0, pi]
  Angle<Scalar> azimuth;  ///< psi
  Vec3<Scalar> vector;
  Scalar ggr = 0;
  Scalar theta = 0;  ///< angle between a and the sample direction
  /// How far the computed cos(theta) fell outside [-1, 1] before clamping.
  Scalar clamp_excursion = 0;
};

template <std::floating_point Scalar>
SimilaritySample3D<Scalar> similar_vector_3d(const Vec3<Scalar>& a, Angle<Scalar> phi, Angle<Scalar> psi) {
  const Scalar norm = a.norm();
  if (!(norm > 0)) throw InvalidInput("similar_vector_3d: zero vector");
  if (phi.value() < 0 || phi.value() > std::numbers::pi_v<Scalar>) {
    throw InvalidInput("similar_vector_3d: polar angle outside [0, pi]");
  }
  const Vec3<Scalar> e = spherical_direction(phi, psi);
  const Scalar raw = e.dot(a) / norm;
  const Scalar cos_theta = std::clamp(raw, Scalar(-1), Scalar(1));
  const Scalar theta = std::acos(cos_theta);
  const Scalar g = phi1(Angle<Scalar>(theta));
  return {phi, psi, norm * g * e, g, theta, std::abs(raw - cos_theta)};
}

/// Product grid: n_phi points on [0, pi] (closed) times n_psi points on
/// [0, 2pi) (half-open), phi-major order.
template <std::floating_point Scalar>
std::vector<SimilaritySample3D<Scalar>> similarity_set_3d(const Vec3<Scalar>& a, std::size_t n_phi,
                                                          std::size_t n_psi) {
  if (!(a.norm() > 0)) throw InvalidInput("similarity_set_3d: zero vector");
  if (n_phi < 1 || n_psi < 1) throw InvalidInput("similarity_set_3d: counts must be at least 1");
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  std::vector<SimilaritySample3D<Scalar>> out;
  out.reserve(n_phi * n_psi);
  for (std::size_t i = 0; i < n_phi; ++i) {
    const Scalar phi = n_phi == 1 ? Scalar(0)
                       : i + 1 == n_phi ? pi
                                        : pi * static_cast<Scalar>(i) / static_cast<Scalar>(n_phi - 1);
    for (std::size_t j = 0; j < n_psi; ++j) {
      const Scalar psi = 2 * pi * static_cast<Scalar>(j) / static_cast<Scalar>(n_psi);
      out.push_back(similar_vector_3d(a, Angle<Scalar>(phi), Angle<Scalar>(psi)));
    }
  }
  return out;
}

}  // namespace ggr

#pragma once

// Triangles as elements of a 6-D space. The inner product of two triangles
// is the sum of dot products of their corresponding edge vectors
// (a - b, b - c, c - a), so it ignores translation: (c, c, c) has norm 0.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "ggr/angle.hpp"
#include "ggr/errors.hpp"
#include "ggr/golden_function.hpp"
#include "ggr/similarity.hpp"

namespace ggr {

/// Ordered vertex triple (v_a, v_b, v_c) stored as a 6-vector.
template <std::floating_point Scalar>
class TriangleVec {
 public:
  using Coords = Eigen::Matrix<Scalar, 6, 1>;

  TriangleVec() : coords_(Coords::Zero()) {}
  TriangleVec(const Vec2<Scalar>& a, const Vec2<Scalar>& b, const Vec2<Scalar>& c) {
    coords_ << a, b, c;
  }
  explicit TriangleVec(const Coords& coords) : coords_(coords) {}

  Vec2<Scalar> a() const { return coords_.template segment<2>(0); }
  Vec2<Scalar> b() const { return coords_.template segment<2>(2); }
  Vec2<Scalar> c() const { return coords_.template segment<2>(4); }
  const Coords& coords() const { return coords_; }

  /// Edge vectors (a - b, b - c, c - a) stacked into a 6-vector.
  Coords edges() const {
    Coords e;
    e << a() - b(), b() - c(), c() - a();
    return e;
  }

  TriangleVec translated(const Vec2<Scalar>& shift) const {
    Coords s;
    s << shift, shift, shift;
    return TriangleVec(Coords(coords_ + s));
  }

  friend TriangleVec operator+(const TriangleVec& x, const TriangleVec& y) {
    return TriangleVec(Coords(x.coords_ + y.coords_));
  }
  friend TriangleVec operator-(const TriangleVec& x, const TriangleVec& y) {
    return TriangleVec(Coords(x.coords_ - y.coords_));
  }
  friend TriangleVec operator*(Scalar s, const TriangleVec& x) { return TriangleVec(Coords(s * x.coords_)); }

 private:
  Coords coords_;
};

using TriangleVecd = TriangleVec<double>;

template <std::floating_point Scalar>
Scalar tri_inner(const TriangleVec<Scalar>& v1, const TriangleVec<Scalar>& v2) {
  return v1.edges().dot(v2.edges());
}

template <std::floating_point Scalar>
Scalar tri_norm(const TriangleVec<Scalar>& v) {
  return v.edges().norm();
}

/// | ||s + v|| ||v|| - ||s||^2 | under the triangle norm.
template <std::floating_point Scalar>
Scalar tri_golden_pair_residual(const TriangleVec<Scalar>& v, const TriangleVec<Scalar>& s) {
  const Scalar ns = tri_norm(s);
  return std::abs(tri_norm(s + v) * tri_norm(v) - ns * ns);
}

/// Planar angle at v_a between the sides towards v_b and v_c.
template <std::floating_point Scalar>
Scalar vertex_angle_a(const TriangleVec<Scalar>& v) {
  const Vec2<Scalar> ab = v.b() - v.a(), ac = v.c() - v.a();
  return std::atan2(std::abs(ab.x() * ac.y() - ab.y() * ac.x()), ab.dot(ac));
}

/// Admissible range for the rotation angle phi of a unit triangle.
enum class PhiDomain {
  stated,    ///< 0 < phi <= pi - lambda
  extended,  ///< 0 < phi < pi (wherever ||e_c|| > 0)
};

template <std::floating_point Scalar>
class UnitTriangleParams {
 public:
  UnitTriangleParams(Angle<Scalar> phi, Angle<Scalar> lambda, PhiDomain domain = PhiDomain::stated)
      : phi_(phi), lambda_(lambda), domain_(domain) {
    constexpr Scalar pi = std::numbers::pi_v<Scalar>;
    // Boundary slack so that e.g. 135 deg passes for lambda = 45 deg after
    // degree-to-radian rounding.
    const Scalar slack = 64 * std::numeric_limits<Scalar>::epsilon();
    const Scalar l = lambda.value(), p = phi.value();
    if (!(l > 0 && l < pi)) throw InvalidInput("unit triangle: lambda must lie in (0, pi)");
    const Scalar upper = domain == PhiDomain::stated ? pi - l + slack : pi;
    const bool ok = domain == PhiDomain::stated ? (p > 0 && p <= upper) : (p > 0 && p < upper);
    if (!ok) {
      std::ostringstream msg;
      msg << "unit triangle: phi = " << phi.degrees() << " deg outside "
          << (domain == PhiDomain::stated ? "(0, pi - lambda]" : "(0, pi)") << " for lambda = " << lambda.degrees()
          << " deg";
      throw InvalidInput(msg.str());
    }
  }

  Angle<Scalar> phi() const { return phi_; }
  Angle<Scalar> lambda() const { return lambda_; }
  PhiDomain domain() const { return domain_; }

 private:
  Angle<Scalar> phi_;
  Angle<Scalar> lambda_;
  PhiDomain domain_;
};

/// Signed side lengths (||e_b||, ||e_c||) of the unit triangle E(phi, lambda).
/// ||e_b|| turns negative for large phi; e_b then points along lambda + phi + pi.
template <std::floating_point Scalar>
std::pair<Scalar, Scalar> unit_triangle_sides(const UnitTriangleParams<Scalar>& p) {
  const Scalar phi = p.phi().value(), lambda = p.lambda().value();
  const Scalar cl = std::cos(lambda);
  const Scalar ec = std::numbers::sqrt2_v<Scalar> * std::sin(phi) / std::sqrt(4 - cl * cl);
  const Scalar eb = ec * cl / 2 + std::cos(phi) / std::numbers::sqrt2_v<Scalar>;
  return {eb, ec};
}

/// E(phi, lambda) = (0, ||e_b|| e(lambda + phi), ||e_c|| e(phi)); norm 1.
template <std::floating_point Scalar>
TriangleVec<Scalar> unit_triangle(const UnitTriangleParams<Scalar>& p) {
  const auto [eb, ec] = unit_triangle_sides(p);
  const Scalar degenerate = 1e-12;
  if (std::abs(eb) <= degenerate || ec <= degenerate) {
    std::ostringstream msg;
    msg << "unit triangle: degenerate side (||e_b|| = " << eb << ", ||e_c|| = " << ec << ") at phi = "
        << p.phi().degrees() << " deg, lambda = " << p.lambda().degrees() << " deg";
    throw DegenerateParameterError(msg.str());
  }
  const Scalar phi = p.phi().value(), lambda = p.lambda().value();
  return {Vec2<Scalar>::Zero(), eb * Vec2<Scalar>(std::cos(lambda + phi), std::sin(lambda + phi)),
          ec * Vec2<Scalar>(std::cos(phi), std::sin(phi))};
}

/// Angle between v and a unit triangle e in the 6-D space.
template <std::floating_point Scalar>
Angle<Scalar> tri_angle(const TriangleVec<Scalar>& v, const TriangleVec<Scalar>& e) {
  const Scalar nv = tri_norm(v);
  if (!(nv > 0)) throw InvalidInput("tri_angle: zero-norm triangle");
  if (!(std::abs(tri_norm(e) - 1) <= Scalar(1e-9))) throw InvalidInput("tri_angle: second triangle is not unit");
  return Angle<Scalar>(std::acos(std::clamp(tri_inner(v, e) / nv, Scalar(-1), Scalar(1))));
}

template <std::floating_point Scalar>
struct SimilarTriangle {
  UnitTriangleParams<Scalar> params;
  TriangleVec<Scalar> triangle;
  Angle<Scalar> theta;  ///< 6-D angle between V and E(phi, lambda)
  Scalar ggr = 0;       ///< phi1(theta)
};

/// s = ||V|| phi1(theta) E(phi, lambda), then shifted by c.
template <std::floating_point Scalar>
SimilarTriangle<Scalar> similar_triangle(const TriangleVec<Scalar>& v, const UnitTriangleParams<Scalar>& params,
                                         const Vec2<Scalar>& c = Vec2<Scalar>::Zero()) {
  const Scalar nv = tri_norm(v);
  if (!(nv > 0)) throw InvalidInput("similar_triangle: zero-norm triangle");
  const auto e = unit_triangle(params);
  const auto theta = tri_angle(v, e);
  const Scalar g = phi1(theta);
  return {params, (nv * g * e).translated(c), theta, g};
}

/// One similar triangle per phi at fixed lambda. Every phi is validated
/// before any triangle is built.
template <std::floating_point Scalar>
std::vector<SimilarTriangle<Scalar>> triangle_similarity_set(const TriangleVec<Scalar>& v,
                                                             const std::vector<Angle<Scalar>>& phis,
                                                             Angle<Scalar> lambda,
                                                             const Vec2<Scalar>& c = Vec2<Scalar>::Zero(),
                                                             PhiDomain domain = PhiDomain::stated) {
  std::vector<UnitTriangleParams<Scalar>> params;
  params.reserve(phis.size());
  for (std::size_t i = 0; i < phis.size(); ++i) {
    try {
      params.emplace_back(phis[i], lambda, domain);
    } catch (const InvalidInput& err) {
      throw InvalidInput("triangle_similarity_set: entry " + std::to_string(i) + ": " + err.what());
    }
  }
  std::vector<SimilarTriangle<Scalar>> out;
  out.reserve(params.size());
  for (const auto& p : params) out.push_back(similar_triangle(v, p, c));
  return out;
}

/// Degree grid start:step:stop, inclusive of stop when it lands on the grid.
template <std::floating_point Scalar>
std::vector<Angle<Scalar>> degree_range(Scalar start, Scalar step, Scalar stop) {
  if (!(step > 0)) throw InvalidInput("degree_range: step must be positive");
  std::vector<Angle<Scalar>> out;
  const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + Scalar(1e-9)));
  for (std::size_t i = 0; i <= n; ++i) out.push_back(Angle<Scalar>::degrees(start + step * static_cast<Scalar>(i)));
  return out;
}

}  // namespace ggr

#pragma once

#include <cmath>
#include <concepts>
#include <numbers>

#include "ggr/errors.hpp"

namespace ggr {

/// An angle in radians. The raw value is kept as given; evaluation sites
/// call reduced() to map it into [0, 2π).
template <std::floating_point Scalar>
class Angle {
 public:
  using scalar_type = Scalar;

  constexpr Angle() = default;

  explicit Angle(Scalar radians) : value_(radians) {
    if (!std::isfinite(radians)) {
      throw InvalidInput("angle must be finite");
    }
  }

  static Angle radians(Scalar value) { return Angle(value); }
  static Angle degrees(Scalar value) {
    return Angle(value * std::numbers::pi_v<Scalar> / Scalar(180));
  }

  Scalar value() const { return value_; }
  Scalar degrees() const { return value_ * Scalar(180) / std::numbers::pi_v<Scalar>; }

  /// Representative in [0, 2π).
  Scalar reduced() const {
    constexpr Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
    Scalar r = std::fmod(value_, two_pi);
    if (r < 0) r += two_pi;
    // fmod of a tiny negative value can round up to exactly 2π.
    if (r >= two_pi) r = 0;
    return r;
  }

  Angle operator-() const { return Angle(-value_); }
  friend Angle operator+(Angle a, Angle b) { return Angle(a.value_ + b.value_); }
  friend Angle operator-(Angle a, Angle b) { return Angle(a.value_ - b.value_); }
  friend bool operator==(Angle a, Angle b) = default;
  friend auto operator<=>(Angle a, Angle b) = default;

 private:
  Scalar value_ = 0;
};

using Angled = Angle<double>;

}  // namespace ggr

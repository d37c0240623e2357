#pragma once

#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "ggr/cli/dataset.hpp"
#include "ggr/identities.hpp"
#include "ggr/similarity.hpp"
#include "ggr/triangle.hpp"

namespace ggr::cli {

struct EvalOptions {
  double angle = 0;
  bool degrees = false;
};

struct BranchesOptions {
  std::size_t count = 4801;
  double start = 0;
  double stop = 2 * std::numbers::pi;
  bool degrees = false;
  /// Replace the grid with the marked angles 0, 36, 72, 108, 144, 180 and 290.70 deg.
  bool marks = false;
};

struct PolarOptions {
  /// phi1..phi4, sum12, sum23, sum13, sum123, sum1234
  std::string selector = "phi1";
  std::size_t count = 4801;
};

struct Sim2dOptions {
  Vec2d vector{1, 2};
  std::size_t count = 128;
};

struct SumsetsOptions {
  Vec2d a1{0, 1};
  Vec2d a2{1, 0};
  std::size_t count = 128;
};

struct Sim3dOptions {
  Vec3d vector{0, 0, 1};
  std::size_t n_phi = 257;
  std::size_t n_psi = 512;
  /// Projection plane for SVG output: "xy", "xz" or "yz".
  std::string view = "xy";
};

struct TriangleOptions {
  TriangleVecd vertices;
  /// Radians; defaults to the planar angle at the first vertex.
  std::optional<double> lambda;
  /// Radians.
  std::vector<double> phis;
  Vec2d translation = Vec2d::Zero();
  PhiDomain domain = PhiDomain::stated;
};

Dataset cmd_eval(const EvalOptions& o);
Dataset cmd_branches(const BranchesOptions& o);
Dataset cmd_polar(const PolarOptions& o);
Dataset cmd_sim2d(const Sim2dOptions& o);
Dataset cmd_sumsets(const SumsetsOptions& o);
Dataset cmd_sim3d(const Sim3dOptions& o);
Dataset cmd_triangle(const TriangleOptions& o);

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;
  bool pass = false;
};

/// Runs every invariant suite at its full grid size.
VerifyReport run_verification();
Dataset verify_dataset(const VerifyReport& r);

/// "x,y[,z...]" -> components. Throws InvalidInput.
std::vector<double> parse_numbers(const std::string& text, char separator = ',');
/// "ax,ay bx,by cx,cy"
TriangleVecd parse_vertices(const std::string& text);
/// "start:step:stop" in degrees -> radians.
std::vector<double> parse_degree_range(const std::string& text);

}  // namespace ggr::cli

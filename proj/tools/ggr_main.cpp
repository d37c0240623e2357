// ggr: command-line front end for the generalized golden ratio library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ggr/cli/commands.hpp"

namespace {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3 };

struct CommonFlags {
  std::string out = "-";
  std::string format = "csv";
  int precision = 12;

  void attach(CLI::App* app) {
    app->add_option("--out", out, "Output path, '-' for standard output")->capture_default_str();
    app->add_option("--format", format, "csv, json or svg")->capture_default_str();
    app->add_option("--precision", precision, "Significant digits (6-17)")->capture_default_str();
  }

  ggr::cli::OutputSpec spec() const {
    if (precision < 6 || precision > 17) throw ggr::InvalidInput("--precision must lie in [6, 17]");
    return {ggr::cli::parse_format(format), out, precision};
  }
};

ggr::Vec2d parse_vec2(const std::string& s) {
  const auto v = ggr::cli::parse_numbers(s);
  if (v.size() != 2) throw ggr::InvalidInput("expected a 2D vector x,y, got '" + s + "'");
  return {v[0], v[1]};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized golden ratio: branch functions, similarity sets and verification"};
  app.require_subcommand(1);

  CommonFlags eval_io, branches_io, polar_io, sim2d_io, sumsets_io, sim3d_io, triangle_io, verify_io;

  auto* eval = app.add_subcommand("eval", "Print phi1..phi4 at one angle");
  std::optional<double> eval_deg, eval_rad;
  eval->add_option("--deg", eval_deg, "Angle in degrees");
  eval->add_option("--rad", eval_rad, "Angle in radians");
  eval_io.attach(eval);

  auto* branches = app.add_subcommand("branches", "Sample the branch functions and the cosine approximation");
  ggr::cli::BranchesOptions branches_opt;
  branches->add_option("--count", branches_opt.count, "Grid points")->capture_default_str();
  branches->add_option("--start", branches_opt.start, "Range start")->capture_default_str();
  branches->add_option("--stop", branches_opt.stop, "Range stop")->capture_default_str();
  branches->add_flag("--deg", branches_opt.degrees, "Range given in degrees");
  branches->add_flag("!--rad", branches_opt.degrees, "Range given in radians (default)");
  branches->add_flag("--marks", branches_opt.marks, "Only the marked angles 0, 36, 72, 108, 144, 180, 290.70 deg");
  branches_io.attach(branches);

  auto* polar = app.add_subcommand("polar", "Polar curve of a branch or a sum of branches");
  ggr::cli::PolarOptions polar_opt;
  polar->add_option("--selector", polar_opt.selector, "phi1..phi4, sum12, sum23, sum13, sum123, sum1234")
      ->capture_default_str();
  polar->add_option("--count", polar_opt.count, "Grid points over [0, 2pi]")->capture_default_str();
  polar_io.attach(polar);

  auto* sim2d = app.add_subcommand("sim2d", "Similarity set of a 2D vector");
  std::string sim2d_vector = "1,2";
  ggr::cli::Sim2dOptions sim2d_opt;
  sim2d->add_option("--vector", sim2d_vector, "x,y")->capture_default_str();
  sim2d->add_option("--count", sim2d_opt.count, "Directions over [0, 2pi)")->capture_default_str();
  sim2d_io.attach(sim2d);

  auto* sumsets = app.add_subcommand("sumsets", "Angle-wise sum of two similarity fields");
  std::string a1 = "0,1", a2 = "1,0";
  ggr::cli::SumsetsOptions sumsets_opt;
  sumsets->add_option("--a1", a1, "x,y")->capture_default_str();
  sumsets->add_option("--a2", a2, "x,y")->capture_default_str();
  sumsets->add_option("--count", sumsets_opt.count, "Directions over [0, 2pi)")->capture_default_str();
  sumsets_io.attach(sumsets);

  auto* sim3d = app.add_subcommand("sim3d", "Similarity set of a 3D vector");
  std::string sim3d_vector = "0,0,1";
  ggr::cli::Sim3dOptions sim3d_opt;
  sim3d->add_option("--vector", sim3d_vector, "x,y,z")->capture_default_str();
  sim3d->add_option("--nphi", sim3d_opt.n_phi, "Polar samples over [0, pi]")->capture_default_str();
  sim3d->add_option("--npsi", sim3d_opt.n_psi, "Azimuth samples over [0, 2pi)")->capture_default_str();
  sim3d->add_option("--view", sim3d_opt.view, "SVG projection plane: xy, xz or yz")->capture_default_str();
  sim3d_io.attach(sim3d);

  auto* triangle = app.add_subcommand("triangle", "Similar triangles in the 6D triangle space");
  std::string verts = "0,0 3,2 5,0";
  std::optional<double> lambda_deg, lambda_rad;
  std::string phi_deg, phi_deg_range = "10:5:120", translate = "0,0";
  bool extended = false;
  triangle->add_option("--verts", verts, "\"ax,ay bx,by cx,cy\"")->capture_default_str();
  auto* ld = triangle->add_option("--lambda-deg", lambda_deg, "Side angle in degrees (default: angle at a)");
  triangle->add_option("--lambda", lambda_rad, "Side angle in radians")->excludes(ld);
  auto* pd = triangle->add_option("--phi-deg", phi_deg, "Comma-separated rotation angles in degrees");
  triangle->add_option("--phi-deg-range", phi_deg_range, "start:step:stop in degrees")->excludes(pd)->capture_default_str();
  triangle->add_option("--translate", translate, "Translation c1,c2")->capture_default_str();
  triangle->add_flag("--extended-phi", extended, "Accept 0 < phi < pi instead of 0 < phi <= pi - lambda");
  triangle_io.attach(triangle);

  auto* verify = app.add_subcommand("verify", "Run every invariant check; exit 1 on failure");
  verify_io.attach(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    using namespace ggr::cli;
    if (eval->parsed()) {
      if (eval_deg.has_value() == eval_rad.has_value()) throw ggr::InvalidInput("eval needs exactly one of --deg, --rad");
      EvalOptions o{eval_deg ? *eval_deg : *eval_rad, eval_deg.has_value()};
      emit(cmd_eval(o), eval_io.spec());
    } else if (branches->parsed()) {
      const auto spec = branches_io.spec();
      emit(cmd_branches(branches_opt), spec);
    } else if (polar->parsed()) {
      const auto spec = polar_io.spec();
      emit(cmd_polar(polar_opt), spec);
    } else if (sim2d->parsed()) {
      const auto spec = sim2d_io.spec();
      sim2d_opt.vector = parse_vec2(sim2d_vector);
      emit(cmd_sim2d(sim2d_opt), spec);
    } else if (sumsets->parsed()) {
      const auto spec = sumsets_io.spec();
      sumsets_opt.a1 = parse_vec2(a1);
      sumsets_opt.a2 = parse_vec2(a2);
      emit(cmd_sumsets(sumsets_opt), spec);
    } else if (sim3d->parsed()) {
      const auto spec = sim3d_io.spec();
      const auto v = parse_numbers(sim3d_vector);
      if (v.size() != 3) throw ggr::InvalidInput("expected a 3D vector x,y,z");
      sim3d_opt.vector = {v[0], v[1], v[2]};
      emit(cmd_sim3d(sim3d_opt), spec);
    } else if (triangle->parsed()) {
      const auto spec = triangle_io.spec();
      TriangleOptions o;
      o.vertices = parse_vertices(verts);
      if (lambda_deg) o.lambda = *lambda_deg * std::numbers::pi / 180;
      if (lambda_rad) o.lambda = *lambda_rad;
      if (!phi_deg.empty()) {
        for (double d : parse_numbers(phi_deg)) o.phis.push_back(d * std::numbers::pi / 180);
      } else {
        o.phis = parse_degree_range(phi_deg_range);
      }
      o.translation = parse_vec2(translate);
      o.domain = extended ? ggr::PhiDomain::extended : ggr::PhiDomain::stated;
      emit(cmd_triangle(o), spec);
    } else if (verify->parsed()) {
      const auto spec = verify_io.spec();
      const auto report = run_verification();
      emit(verify_dataset(report), spec);
      for (const auto& n : report.notes) std::cerr << "note: " << n << '\n';
      if (!report.pass) {
        for (const auto& c : report.checks) {
          if (!c.pass) std::cerr << "FAILED: " << c.name << " (max residual " << c.max_residual << ")\n";
        }
        return kVerifyFailed;
      }
      std::cerr << "all " << report.checks.size() << " checks passed\n";
    }
  } catch (const ggr::cli::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const ggr::ClassificationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const ggr::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

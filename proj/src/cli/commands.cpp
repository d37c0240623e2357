#include "ggr/cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <complex>
#include <map>
#include <sstream>
#include <utility>

#include "ggr/golden_function.hpp"

namespace ggr::cli {

namespace {

constexpr double kPi = std::numbers::pi;

Shape polyline(std::vector<std::array<double, 2>> pts, std::string stroke = "#1f77b4") {
  return {Shape::Kind::polyline, std::move(pts), std::move(stroke)};
}

Shape polygon(std::vector<std::array<double, 2>> pts, std::string stroke = "#1f77b4") {
  return {Shape::Kind::polygon, std::move(pts), std::move(stroke)};
}

nlohmann::ordered_json to_json(const Vec2d& v) { return nlohmann::ordered_json::array({v.x(), v.y()}); }

std::vector<Cell> branch_row(const BranchValues<double>& b) {
  return {b.alpha.value(), b.phi1, b.phi2, b.phi3.real(), b.phi3.imag(), cosine_approximation(b.alpha)};
}

}  // namespace

std::vector<double> parse_numbers(const std::string& text, char separator) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = text.find(separator, pos);
    std::string token = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    token = first == std::string::npos ? "" : token.substr(first, last - first + 1);
    double v = 0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || res.ec != std::errc() || res.ptr != token.data() + token.size() || !std::isfinite(v)) {
      throw InvalidInput("cannot parse number '" + token + "' in '" + text + "'");
    }
    out.push_back(v);
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return out;
}

TriangleVecd parse_vertices(const std::string& text) {
  std::istringstream is(text);
  std::vector<Vec2d> pts;
  std::string tok;
  while (is >> tok) {
    const auto xy = parse_numbers(tok);
    if (xy.size() != 2) throw InvalidInput("vertex '" + tok + "' must be x,y");
    pts.emplace_back(xy[0], xy[1]);
  }
  if (pts.size() != 3) throw InvalidInput("expected three vertices \"ax,ay bx,by cx,cy\"");
  return {pts[0], pts[1], pts[2]};
}

std::vector<double> parse_degree_range(const std::string& text) {
  const auto parts = parse_numbers(text, ':');
  if (parts.size() != 3) throw InvalidInput("range '" + text + "' must be start:step:stop");
  std::vector<double> out;
  for (const auto& a : degree_range(parts[0], parts[1], parts[2])) out.push_back(a.value());
  return out;
}

Dataset cmd_eval(const EvalOptions& o) {
  const auto input = o.degrees ? Angled::degrees(o.angle) : Angled(o.angle);
  const auto alpha = Angled(input.reduced());
  const auto b = branches(alpha);
  Dataset d;
  d.command = "eval";
  d.parameters["alpha"] = alpha.value();
  d.columns = {"alpha", "phi1", "phi2", "re_phi3", "im_phi3", "re_phi4", "im_phi4"};
  d.rows.push_back({alpha.value(), b.phi1, b.phi2, b.phi3.real(), b.phi3.imag(), b.phi4.real(), b.phi4.imag()});
  return d;
}

Dataset cmd_branches(const BranchesOptions& o) {
  Dataset d;
  d.command = "branches";
  d.columns = {"alpha", "phi1", "phi2", "re_phi3", "im_phi3", "cosine_approx"};
  std::vector<BranchValues<double>> rows;
  if (o.marks) {
    d.parameters["marks_deg"] = {0.0, 36.0, 72.0, 108.0, 144.0, 180.0, 290.70};
    for (double deg : {0.0, 36.0, 72.0, 108.0, 144.0, 180.0, 290.70}) rows.push_back(branches(Angled::degrees(deg)));
  } else {
    const double scale = o.degrees ? kPi / 180 : 1.0;
    const auto table = sample_branches(Angled(o.start * scale), Angled(o.stop * scale), o.count);
    d.parameters["start"] = table.start;
    d.parameters["stop"] = table.stop;
    d.parameters["count"] = table.count;
    rows = table.rows;
  }
  std::array<std::vector<std::array<double, 2>>, 5> curves;
  for (const auto& b : rows) {
    d.rows.push_back(branch_row(b));
    const double a = b.alpha.value();
    curves[0].push_back({a, b.phi1});
    curves[1].push_back({a, b.phi2});
    curves[2].push_back({a, b.phi3.real()});
    curves[3].push_back({a, b.phi3.imag()});
    curves[4].push_back({a, cosine_approximation(b.alpha)});
  }
  const char* colours[] = {"#1f77b4", "#2ca02c", "#d62728", "#9467bd", "#7f7f7f"};
  for (int i = 0; i < 5; ++i) d.shapes.push_back(polyline(std::move(curves[i]), colours[i]));
  return d;
}

Dataset cmd_polar(const PolarOptions& o) {
  using C = std::complex<double>;
  static const std::map<std::string, std::array<bool, 4>> selectors = {
      {"phi1", {true, false, false, false}},  {"phi2", {false, true, false, false}},
      {"phi3", {false, false, true, false}},  {"phi4", {false, false, false, true}},
      {"sum12", {true, true, false, false}},  {"sum23", {false, true, true, false}},
      {"sum13", {true, false, true, false}},  {"sum123", {true, true, true, false}},
      {"sum1234", {true, true, true, true}},
  };
  const auto it = selectors.find(o.selector);
  if (it == selectors.end()) throw InvalidInput("unknown polar selector '" + o.selector + "'");

  const auto table = sample_branches(Angled(0), Angled(2 * kPi), o.count);
  Dataset d;
  d.command = "polar";
  d.parameters["selector"] = o.selector;
  d.parameters["count"] = o.count;
  d.columns = {"alpha", "radius", "arg"};
  std::vector<std::array<double, 2>> curve;
  for (const auto& b : table.rows) {
    const auto x = b.as_array();
    C v{};
    for (int k = 0; k < 4; ++k) {
      if (it->second[k]) v += x[k];
    }
    const double a = b.alpha.value(), r = std::abs(v);
    d.rows.push_back({a, r, std::arg(v)});
    curve.push_back({r * std::cos(a), r * std::sin(a)});
  }
  d.shapes.push_back(polyline(std::move(curve)));
  return d;
}

namespace {

void add_2d_samples(Dataset& d, const Vec2d& a, const std::vector<SimilaritySample2D<double>>& samples) {
  d.columns = {"phi", "theta", "x", "y", "ggr", "residual"};
  const double alpha = arg(a);
  std::vector<std::array<double, 2>> locus;
  for (const auto& s : samples) {
    const double theta = Angled(alpha - s.direction.value()).reduced();
    d.rows.push_back({s.direction.value(), theta, s.vector.x(), s.vector.y(), s.ggr, golden_pair_residual(a, s.vector)});
    d.shapes.push_back(polyline({{0, 0}, {s.vector.x(), s.vector.y()}}, "#aec7e8"));
    locus.push_back({s.vector.x(), s.vector.y()});
  }
  d.shapes.push_back(polygon(std::move(locus)));
  d.shapes.push_back(polyline({{0, 0}, {a.x(), a.y()}}, "#d62728"));
}

}  // namespace

Dataset cmd_sim2d(const Sim2dOptions& o) {
  Dataset d;
  d.command = "sim2d";
  d.parameters["vector"] = to_json(o.vector);
  d.parameters["count"] = o.count;
  add_2d_samples(d, o.vector, similarity_set_2d(o.vector, o.count));
  return d;
}

Dataset cmd_sumsets(const SumsetsOptions& o) {
  const auto result = sum_similarity_sets_2d(o.a1, o.a2, o.count);
  const Vec2d sum = o.a1 + o.a2;
  Dataset d;
  d.command = "sumsets";
  d.parameters["a1"] = to_json(o.a1);
  d.parameters["a2"] = to_json(o.a2);
  d.parameters["sum"] = to_json(sum);
  d.parameters["count"] = o.count;
  d.parameters["max_angle_wise_residual"] = result.max_angle_wise_residual;
  add_2d_samples(d, sum, result.samples);
  d.shapes.push_back(polyline({{0, 0}, {o.a1.x(), o.a1.y()}}, "#ff7f0e"));
  d.shapes.push_back(polyline({{0, 0}, {o.a2.x(), o.a2.y()}}, "#2ca02c"));
  return d;
}

Dataset cmd_sim3d(const Sim3dOptions& o) {
  int u = 0, v = 1;
  if (o.view == "xz") {
    v = 2;
  } else if (o.view == "yz") {
    u = 1;
    v = 2;
  } else if (o.view != "xy") {
    throw InvalidInput("unknown view '" + o.view + "' (expected xy, xz or yz)");
  }
  const auto samples = similarity_set_3d(o.vector, o.n_phi, o.n_psi);
  Dataset d;
  d.command = "sim3d";
  d.parameters["vector"] = {o.vector.x(), o.vector.y(), o.vector.z()};
  d.parameters["n_phi"] = o.n_phi;
  d.parameters["n_psi"] = o.n_psi;
  d.parameters["view"] = o.view;
  d.columns = {"phi", "psi", "theta", "x", "y", "z", "ggr", "residual"};
  std::vector<std::array<double, 2>> ring;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    d.rows.push_back({s.polar.value(), s.azimuth.value(), s.theta, s.vector.x(), s.vector.y(), s.vector.z(), s.ggr,
                      golden_pair_residual(o.vector, s.vector)});
    ring.push_back({s.vector[u], s.vector[v]});
    if ((i + 1) % o.n_psi == 0) d.shapes.push_back(polygon(std::exchange(ring, {})));
  }
  return d;
}

Dataset cmd_triangle(const TriangleOptions& o) {
  const auto& v = o.vertices;
  if (!(tri_norm(v) > 0)) throw InvalidInput("triangle: vertices coincide (zero norm)");
  const Angled lambda(o.lambda.value_or(vertex_angle_a(v)));
  std::vector<Angled> phis;
  for (double p : o.phis) phis.emplace_back(p);
  const auto set = triangle_similarity_set(v, phis, lambda, o.translation, o.domain);
  const double ggr_lambda = phi1(lambda);

  Dataset d;
  d.command = "triangle";
  d.parameters["vertices"] = {to_json(v.a()), to_json(v.b()), to_json(v.c())};
  d.parameters["norm"] = tri_norm(v);
  d.parameters["lambda"] = lambda.value();
  d.parameters["lambda_deg"] = lambda.degrees();
  d.parameters["translation"] = to_json(o.translation);
  d.parameters["phi_domain"] = o.domain == PhiDomain::stated ? "stated" : "extended";
  d.columns = {"kind", "phi", "lambda", "theta", "ggr", "ggr_lambda", "ax", "ay", "bx", "by", "cx", "cy", "residual"};

  auto tri_shape = [](const TriangleVecd& t, const char* stroke) {
    return polygon({{t.a().x(), t.a().y()}, {t.b().x(), t.b().y()}, {t.c().x(), t.c().y()}}, stroke);
  };
  d.rows.push_back({std::string("original"), std::string(), lambda.value(), std::string(), std::string(), ggr_lambda,
                    v.a().x(), v.a().y(), v.b().x(), v.b().y(), v.c().x(), v.c().y(), std::string()});
  d.shapes.push_back(tri_shape(v, "#d62728"));
  for (const auto& s : set) {
    const auto& t = s.triangle;
    d.rows.push_back({std::string("similar"), s.params.phi().value(), lambda.value(), s.theta.value(), s.ggr, ggr_lambda,
                      t.a().x(), t.a().y(), t.b().x(), t.b().y(), t.c().x(), t.c().y(),
                      tri_golden_pair_residual(v, t)});
    d.shapes.push_back(tri_shape(t, "#1f77b4"));
  }
  return d;
}

Dataset verify_dataset(const VerifyReport& r) {
  Dataset d;
  d.command = "verify";
  d.parameters["pass"] = r.pass;
  d.parameters["notes"] = r.notes;
  d.columns = {"check", "max_residual", "tolerance", "pass", "note"};
  for (const auto& c : r.checks) {
    d.rows.push_back({c.name, c.max_residual, c.tolerance, std::string(c.pass ? "PASS" : "FAIL"), c.note});
  }
  return d;
}

}  // namespace ggr::cli

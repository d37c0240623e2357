#include "ggr/cli/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <system_error>

namespace ggr::cli {

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "svg") return Format::svg;
  throw InvalidInput("unknown format '" + name + "' (expected csv, json or svg)");
}

std::string format_number(double value, int precision) {
  if (precision < 6 || precision > 17) throw InvalidInput("precision must lie in [6, 17]");
  if (value == 0) return "0";  // folds -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, precision);
  if (res.ec != std::errc()) throw Error("format_number: conversion failed");
  return std::string(buf, res.ptr);
}

namespace {

std::string csv_field(const Cell& c, int precision) {
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d, precision);
  const auto& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

nlohmann::ordered_json json_value(const Cell& c, int precision) {
  if (const auto* d = std::get_if<double>(&c)) {
    // Round-trip through the formatted text so JSON carries the same digits as CSV.
    const std::string text = format_number(*d, precision);
    double v = 0;
    std::from_chars(text.data(), text.data() + text.size(), v);
    return v;
  }
  const auto& s = std::get<std::string>(c);
  if (s.empty()) return nullptr;
  return s;
}

}  // namespace

void write_csv(std::ostream& os, const Dataset& d, int precision) {
  for (std::size_t i = 0; i < d.columns.size(); ++i) os << (i ? "," : "") << d.columns[i];
  os << '\n';
  for (const auto& row : d.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i], precision);
    os << '\n';
  }
}

void write_json(std::ostream& os, const Dataset& d, int precision) {
  nlohmann::ordered_json doc;
  doc["command"] = d.command;
  doc["parameters"] = d.parameters;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : d.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < d.columns.size(); ++i) r[d.columns[i]] = json_value(row[i], precision);
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  os << doc.dump(2) << '\n';
}

void write_svg(std::ostream& os, const Dataset& d, int precision) {
  if (d.shapes.empty()) throw InvalidInput("command '" + d.command + "' has no SVG rendering");
  double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
  double min_y = min_x, max_y = -min_x;
  for (const auto& s : d.shapes) {
    for (const auto& p : s.points) {
      min_x = std::min(min_x, p[0]);
      max_x = std::max(max_x, p[0]);
      min_y = std::min(min_y, p[1]);
      max_y = std::max(max_y, p[1]);
    }
  }
  if (!std::isfinite(min_x)) throw InvalidInput("command '" + d.command + "' produced no points to draw");
  double w = max_x - min_x, h = max_y - min_y;
  if (w <= 0) w = 1;
  if (h <= 0) h = 1;
  const double mx = 0.05 * w, my = 0.05 * h;
  const double vb_w = w + 2 * mx, vb_h = h + 2 * my;
  const double px_w = 800, px_h = std::clamp(800 * vb_h / vb_w, 100.0, 4000.0);
  auto num = [&](double v) { return format_number(v, precision); };

  // y is flipped so that data "up" is screen "up".
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(px_w) << "\" height=\""
     << num(px_h) << "\" viewBox=\"" << num(min_x - mx) << ' ' << num(-(max_y + my)) << ' ' << num(vb_w) << ' '
     << num(vb_h) << "\" preserveAspectRatio=\"none\">\n";
  os << "<title>" << d.command << "</title>\n";
  for (const auto& s : d.shapes) {
    os << (s.kind == Shape::Kind::polygon ? "<polygon" : "<polyline") << " points=\"";
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      os << (i ? " " : "") << num(s.points[i][0]) << ',' << num(-s.points[i][1]);
    }
    os << "\" fill=\"none\" stroke=\"" << s.stroke << "\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\"/>\n";
  }
  os << "</svg>\n";
}

std::string render(const Dataset& d, Format format, int precision) {
  std::ostringstream os;
  switch (format) {
    case Format::csv: write_csv(os, d, precision); break;
    case Format::json: write_json(os, d, precision); break;
    case Format::svg: write_svg(os, d, precision); break;
  }
  return os.str();
}

void emit(const Dataset& d, const OutputSpec& out) {
  const std::string text = render(d, out.format, out.precision);
  if (out.path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing to standard output");
    return;
  }
  std::ofstream f(out.path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + out.path + "' for writing");
  f << text;
  f.flush();
  if (!f) throw IoError("failed writing '" + out.path + "'");
}

}  // namespace ggr::cli

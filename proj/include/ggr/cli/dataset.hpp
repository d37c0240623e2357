#pragma once

#include <array>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "ggr/errors.hpp"

namespace ggr::cli {

/// Output file could not be opened or written.
class IoError : public Error {
 public:
  using Error::Error;
};

enum class Format { csv, json, svg };

Format parse_format(const std::string& name);

struct OutputSpec {
  Format format = Format::csv;
  std::string path = "-";  ///< "-" is standard output
  int precision = 12;      ///< significant digits, 6..17
};

/// A table cell: a number, or text (empty text means "not applicable").
using Cell = std::variant<double, std::string>;

struct Shape {
  enum class Kind { polyline, polygon };
  Kind kind = Kind::polyline;
  std::vector<std::array<double, 2>> points;
  std::string stroke = "#1f77b4";
};

/// Everything a command emits: a table for CSV/JSON and shapes for SVG.
struct Dataset {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<Shape> shapes;
};

/// Shortest decimal with at most `precision` significant digits, '.'
/// separator, independent of the global locale.
std::string format_number(double value, int precision);

void write_csv(std::ostream& os, const Dataset& d, int precision);
void write_json(std::ostream& os, const Dataset& d, int precision);
void write_svg(std::ostream& os, const Dataset& d, int precision);

std::string render(const Dataset& d, Format format, int precision);

/// Renders and writes to the configured sink. Throws IoError on failure.
void emit(const Dataset& d, const OutputSpec& out);

}  // namespace ggr::cli

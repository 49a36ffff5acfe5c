#pragma once

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "mft/solver.hpp"

namespace mft {

struct PolygonFile {
  std::vector<Point> vertices;
  std::optional<std::uint64_t> seed;
  std::string generator;
  std::string name;
};

// JSON object with a "vertices" array of [x, y] pairs (plus optional
// "metadata"), or plain text with one "x y" pair per line ('#' starts a
// comment). Throws ParseError.
PolygonFile parse_polygon(const std::string& text);
PolygonFile read_polygon_file(const std::string& path);

// JSON with coordinates printed to 17 significant digits.
std::string format_polygon(const PolygonFile& file);

struct ReportOptions {
  bool candidates = false;
  std::optional<double> wall_ns;
};

nlohmann::json report_to_json(const ConvexPolygon& poly, const SolverReport& report, const ReportOptions& opts = {});

// The parts of a report that survive a round trip: algorithm, mft and candidates.
SolverReport report_from_json(const nlohmann::json& j);

// Polygon and triangle as two paths, y axis pointing up.
std::string render_svg(const ConvexPolygon& poly, const Triangle& triangle);

}  // namespace mft

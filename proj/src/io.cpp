#include "mft/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mft/error.hpp"

namespace mft {

namespace {

std::string num17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string escape_json(const std::string& s) { return nlohmann::json(s).dump(); }

PolygonFile parse_json_polygon(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    throw Error(ErrorKind::ParseError, "expected an object with a \"vertices\" array");
  }
  PolygonFile out;
  long idx = 0;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw Error(ErrorKind::ParseError, "vertex " + std::to_string(idx) + " is not an [x, y] pair", {idx});
    }
    out.vertices.push_back({v[0].get<double>(), v[1].get<double>()});
    ++idx;
  }
  if (j.contains("metadata") && j["metadata"].is_object()) {
    const auto& m = j["metadata"];
    if (m.contains("seed") && m["seed"].is_number_unsigned()) out.seed = m["seed"].get<std::uint64_t>();
    if (m.contains("generator") && m["generator"].is_string()) out.generator = m["generator"].get<std::string>();
    if (m.contains("name") && m["name"].is_string()) out.name = m["name"].get<std::string>();
  }
  return out;
}

PolygonFile parse_plain_polygon(const std::string& text) {
  PolygonFile out;
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    double x = 0.0;
    double y = 0.0;
    std::string extra;
    if (!(fields >> x)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected \"x y\"", {lineno});
    }
    if (!(fields >> y) || (fields >> extra)) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected \"x y\"", {lineno});
    }
    out.vertices.push_back({x, y});
  }
  return out;
}

nlohmann::json point_json(Point p) { return nlohmann::json::array({p.x, p.y}); }

nlohmann::json triple_json(Triple t) { return nlohmann::json::array({t.i, t.j, t.k}); }

Triple triple_from(const nlohmann::json& j) { return {j.at(0).get<long>(), j.at(1).get<long>(), j.at(2).get<long>()}; }

}  // namespace

PolygonFile parse_polygon(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json_polygon(text);
  return parse_plain_polygon(text);
}

PolygonFile read_polygon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_polygon(buf.str());
}

std::string format_polygon(const PolygonFile& file) {
  std::string out = "{\n  \"vertices\": [\n";
  for (std::size_t i = 0; i < file.vertices.size(); ++i) {
    out += "    [" + num17(file.vertices[i].x) + ", " + num17(file.vertices[i].y) + "]";
    out += i + 1 < file.vertices.size() ? ",\n" : "\n";
  }
  out += "  ]";
  if (file.seed || !file.generator.empty() || !file.name.empty()) {
    std::vector<std::string> fields;
    if (file.seed) fields.push_back("\"seed\": " + std::to_string(*file.seed));
    if (!file.generator.empty()) fields.push_back("\"generator\": " + escape_json(file.generator));
    if (!file.name.empty()) fields.push_back("\"name\": " + escape_json(file.name));
    out += ",\n  \"metadata\": {";
    for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? ", " : "") + fields[i];
    out += "}";
  }
  out += "\n}\n";
  return out;
}

nlohmann::json report_to_json(const ConvexPolygon& poly, const SolverReport& report, const ReportOptions& opts) {
  nlohmann::json j;
  j["algorithm"] = to_string(report.algo);
  j["n"] = poly.size();
  j["input_reversed"] = poly.reversed();
  nlohmann::json corners = nlohmann::json::array();
  for (const Point& p : report.triangle.corners) corners.push_back(point_json(p));
  j["mft"] = {{"edges", triple_json(report.mft)}, {"corners", corners}, {"area", report.area}};
  if (report.algo != Algo::Brute) {
    j["initial"] = triple_json(canonical(poly, {report.run.r, report.run.s, report.run.t}));
  }
  const SolverStats& s = report.stats;
  j["stats"] = {{"iterations", s.iterations},
                {"apex_advances", s.apex_advances},
                {"support_advances", s.support_advances},
                {"repair_steps", s.repair_steps},
                {"violations", s.violations()}};
  if (opts.candidates) {
    nlohmann::json list = nlohmann::json::array();
    for (const Candidate& c : report.candidates) {
      list.push_back({{"edges", triple_json(c.triple)}, {"area", c.area}, {"stable", c.stable}});
    }
    j["candidates"] = list;
  }
  if (opts.wall_ns) j["wall_ns"] = *opts.wall_ns;
  return j;
}

SolverReport report_from_json(const nlohmann::json& j) {
  SolverReport r;
  try {
    const auto algo = parse_algo(j.at("algorithm").get<std::string>());
    if (!algo) throw Error(ErrorKind::ParseError, "unknown algorithm tag");
    r.algo = *algo;
    const auto& m = j.at("mft");
    r.mft = triple_from(m.at("edges"));
    r.area = m.at("area").get<double>();
    for (std::size_t i = 0; i < 3; ++i) {
      r.triangle.corners[i] = {m.at("corners").at(i).at(0).get<double>(), m.at("corners").at(i).at(1).get<double>()};
    }
    r.triangle.area = r.area;
    if (j.contains("candidates")) {
      for (const auto& c : j["candidates"]) {
        r.candidates.push_back({triple_from(c.at("edges")), c.at("area").get<double>(), c.at("stable").get<bool>()});
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return r;
}

std::string render_svg(const ConvexPolygon& poly, const Triangle& triangle) {
  double lo_x = kInf, lo_y = kInf, hi_x = -kInf, hi_y = -kInf;
  const auto grow = [&](Point p) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  };
  for (const Point& p : poly.vertices()) grow(p);
  for (const Point& p : triangle.corners) grow(p);
  const double pad = 0.05 * std::max(hi_x - lo_x, hi_y - lo_y);
  lo_x -= pad;
  lo_y -= pad;
  hi_x += pad;
  hi_y += pad;

  const auto path = [](auto begin, auto end) {
    std::string d;
    for (auto it = begin; it != end; ++it) {
      d += (it == begin ? "M " : " L ") + num17(it->x) + " " + num17(it->y);
    }
    return d + " Z";
  };
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num17(lo_x) + " " + num17(-hi_y) + " " +
                    num17(hi_x - lo_x) + " " + num17(hi_y - lo_y) + "\" width=\"800\" height=\"800\">\n";
  out += "  <g transform=\"scale(1,-1)\">\n";
  out += "    <path class=\"mft\" d=\"" + path(triangle.corners.begin(), triangle.corners.end()) +
         "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\" vector-effect=\"non-scaling-stroke\"/>\n";
  out += "    <path class=\"polygon\" d=\"" + path(poly.vertices().begin(), poly.vertices().end()) +
         "\" fill=\"#aed6f1\" stroke=\"#1b4f72\" stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\"/>\n";
  out += "  </g>\n</svg>\n";
  return out;
}

}  // namespace mft

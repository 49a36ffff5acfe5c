#include "mft/geom.hpp"

#include <algorithm>

#include "mft/error.hpp"

namespace mft {

namespace {

struct KindName {
  ErrorKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {ErrorKind::ParallelLines, "ParallelLines"},
    {ErrorKind::ZeroVector, "ZeroVector"},
    {ErrorKind::NotConvex, "NotConvex"},
    {ErrorKind::CollinearVertices, "CollinearVertices"},
    {ErrorKind::ParallelEdges, "ParallelEdges"},
    {ErrorKind::TooFewVertices, "TooFewVertices"},
    {ErrorKind::NonFiniteCoordinate, "NonFiniteCoordinate"},
    {ErrorKind::SameEdge, "SameEdge"},
    {ErrorKind::GenerationFailed, "GenerationFailed"},
    {ErrorKind::NotClockwiseTriple, "NotClockwiseTriple"},
    {ErrorKind::InvalidEdgePair, "InvalidEdgePair"},
    {ErrorKind::InfiniteTriangle, "InfiniteTriangle"},
    {ErrorKind::NotChasing, "NotChasing"},
    {ErrorKind::PreconditionViolated, "PreconditionViolated"},
    {ErrorKind::NoTangentWithDirection, "NoTangentWithDirection"},
    {ErrorKind::NoCommonTangent, "NoCommonTangent"},
    {ErrorKind::ParseError, "ParseError"},
    {ErrorKind::InstanceTooLarge, "InstanceTooLarge"},
    {ErrorKind::NonMonotoneDirection, "NonMonotoneDirection"},
    {ErrorKind::DMonotonicityViolated, "DMonotonicityViolated"},
    {ErrorKind::CommonTangentInvalid, "CommonTangentInvalid"},
    {ErrorKind::InvariantViolated, "InvariantViolated"},
};

}  // namespace

const char* to_string(ErrorKind kind) noexcept {
  for (const auto& entry : kKindNames) {
    if (entry.kind == kind) return entry.name;
  }
  return "Unknown";
}

bool is_internal(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonMonotoneDirection:
    case ErrorKind::DMonotonicityViolated:
    case ErrorKind::CommonTangentInvalid:
    case ErrorKind::InvariantViolated:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorKind kind, const std::string& detail, std::vector<long> indices)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      indices_(std::move(indices)) {}

Vec2 normalized(Vec2 a) {
  const double len = norm(a);
  if (!(len > 0.0) || !std::isfinite(len)) throw Error(ErrorKind::ZeroVector, "cannot normalize");
  return {a.x / len, a.y / len};
}

DirectedLine DirectedLine::through(Point from, Point to) { return {from, normalized(to - from)}; }

Side side_of(const DirectedLine& line, Point p, double eps_abs) {
  const double s = cross(line.dir, p - line.anchor);
  if (s > eps_abs) return Side::Left;
  if (s < -eps_abs) return Side::Right;
  return Side::On;
}

Point intersect_lines(const DirectedLine& a, const DirectedLine& b) {
  const double denom = cross(a.dir, b.dir);
  if (std::abs(denom) <= kEpsParallel) throw Error(ErrorKind::ParallelLines, "lines do not meet");
  const double t = cross(b.anchor - a.anchor, b.dir) / denom;
  return a.anchor + t * a.dir;
}

double signed_area(Point a, Point b, Point c) { return 0.5 * cross(b - a, c - a); }

double cw_angle(Vec2 v) {
  if (v.x == 0.0 && v.y == 0.0) throw Error(ErrorKind::ZeroVector, "direction of null vector");
  double t = std::atan2(-v.y, v.x);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t -= kTwoPi;
  return t;
}

bool definitely_less(double x, double y, double eps_rel) {
  if (!is_finite_area(y)) return is_finite_area(x);
  if (!is_finite_area(x)) return false;
  return x < y - eps_rel * std::max(std::abs(x), std::abs(y));
}

}  // namespace mft

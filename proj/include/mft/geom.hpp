#pragma once

#include <cmath>
#include <limits>
#include <numbers>

namespace mft {

inline constexpr double kEpsParallel = 1e-12;  // |cross| of unit directions
inline constexpr double kEpsRel = 1e-9;        // relative area ties
inline constexpr double kEpsTurn = 1e-9;       // radians, general-position check
inline constexpr double kEpsAbsScale = 1e-9;   // times polygon diameter
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

using Point = Vec2;

constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

// Throws ZeroVector on a null vector.
Vec2 normalized(Vec2 a);

// Line through `anchor` with unit direction `dir`; "left" is cross(dir, p - anchor) > 0.
struct DirectedLine {
  Point anchor;
  Vec2 dir;

  static DirectedLine through(Point from, Point to);
  // Signed left offset of the line: cross(dir, anchor).
  double offset() const { return cross(dir, anchor); }
};

enum class Side { Left, On, Right };

Side side_of(const DirectedLine& line, Point p, double eps_abs = 0.0);

// Throws ParallelLines when the directions are within kEpsParallel.
Point intersect_lines(const DirectedLine& a, const DirectedLine& b);

// Positive for counter-clockwise order.
double signed_area(Point a, Point b, Point c);

// Clockwise angle of a direction measured from +x, in [0, 2π).
double cw_angle(Vec2 v);

// Unit vector for a clockwise angle (inverse of cw_angle).
inline Vec2 direction_of(double cw_theta) { return {std::cos(cw_theta), -std::sin(cw_theta)}; }

// Area values may be +∞ for unbounded regions.
inline bool is_finite_area(double a) { return a < kInf; }

// `x` is smaller than `y` by more than the relative tie tolerance. Infinite
// values compare equal to each other and above every finite value.
bool definitely_less(double x, double y, double eps_rel = kEpsRel);

}  // namespace mft

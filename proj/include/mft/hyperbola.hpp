#pragma once

#include <optional>
#include <vector>

#include "mft/flush_triangle.hpp"

namespace mft {

// One branch of a hyperbola with apex O and asymptote rays along unit vectors
// u, v. Its tangents cut triangles of area `area` from the quadrant spanned by
// u and v; in coordinates p = O + αu + βv the branch is αβ = coef().
struct HyperbolaBranch {
  Point apex;
  Vec2 u;
  Vec2 v;
  double area = 0.0;

  double coef() const;
  Point point_at(double alpha) const;  // the branch point with u-coordinate alpha
};

// Normalises u and v. Throws ParallelLines for parallel rays and
// PreconditionViolated for a non-positive or non-finite area.
HyperbolaBranch make_branch(Point apex, Vec2 u, Vec2 v, double area);

// Corner branch at vertex k relative to edge j.
//  Plus:  lies in the Plus wedge at v_k, area = corner_area(j, k, Minus);
//         needs e_j ≺ e_k and j ≠ k-1.
//  Minus: lies in the Minus wedge at v_k, area = corner_area(j, k, Plus);
//         needs e_{k-1} ≺ e_j and j ≠ k.
HyperbolaBranch corner_branch(const ConvexPolygon& poly, long k, long j, Corner side);

enum class LineRelation { Disjoint, Tangent, Secant };

// Area of the triangle the line cuts from the quadrant on the apex side; +∞
// when the line crosses only one asymptote ray, nullopt when it misses both.
std::optional<double> cut_area(const HyperbolaBranch& h, const DirectedLine& line);

// Tangent when the cut area matches within eps_rel; a line that misses the
// quadrant is Disjoint, one that crosses a single asymptote ray is Secant.
LineRelation classify(const HyperbolaBranch& h, const DirectedLine& line, double eps_rel = kEpsRel);

// Left offset cross(w, X) of the tangent with clockwise direction angle theta;
// nullopt when no tangent has that direction.
std::optional<double> tangent_offset(const HyperbolaBranch& h, double theta);

// Tangent line with direction angle theta, anchored at the touching point.
// Throws NoTangentWithDirection.
DirectedLine tangent_with_direction(const HyperbolaBranch& h, double theta);

struct CommonTangent {
  double angle = 0.0;   // clockwise direction angle (unwrapped as requested)
  double offset = 0.0;  // cross(direction, point on line)

  Vec2 direction() const { return direction_of(angle); }
  DirectedLine line() const;
};

// The oriented common tangent whose direction lies in [lo, hi]. The offset
// difference must change sign over the bracket (the tangent offsets are
// continued to the asymptote directions by the line through the apex).
// Throws NoCommonTangent otherwise.
CommonTangent common_tangent(const HyperbolaBranch& h1, const HyperbolaBranch& h2, double lo, double hi);

// Every common tangent line of the two branches, one orientation each
// (direction angle in [0, π)), found by scanning and refinement.
std::vector<CommonTangent> common_tangents(const HyperbolaBranch& h1, const HyperbolaBranch& h2);

}  // namespace mft

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mft/geom.hpp"

namespace mft {

struct ValidationOptions {
  // Minimum separation of edge directions (modulo π). Negative selects the
  // default: kEpsTurn, shrunk for very large n so that random inputs remain
  // admissible (see turn_tolerance()).
  double eps_turn = -1.0;
};

// kEpsTurn for n up to a few thousand; π / (16 n²) beyond that.
double turn_tolerance(std::size_t n);

// Strictly convex polygon in clockwise order with no two parallel edges.
// Edge i runs from vertex i to vertex i+1. Every accessor taking an index
// accepts any integer and reduces it modulo n ("unwrapped" indices).
class ConvexPolygon {
 public:
  // Throws Error with NotConvex, CollinearVertices, ParallelEdges,
  // TooFewVertices or NonFiniteCoordinate. Counter-clockwise input is reversed.
  static ConvexPolygon validate(std::vector<Point> vertices, const ValidationOptions& opts = {});

  long size() const { return static_cast<long>(vertices_.size()); }
  long wrap(long i) const {
    const long n = size();
    const long r = i % n;
    return r < 0 ? r + n : r;
  }

  std::span<const Point> vertices() const { return vertices_; }
  const Point& vertex(long i) const { return vertices_[static_cast<std::size_t>(wrap(i))]; }
  Vec2 edge_dir(long i) const { return dirs_[static_cast<std::size_t>(wrap(i))]; }
  DirectedLine line(long i) const { return {vertex(i), edge_dir(i)}; }

  // Unwrapped clockwise direction angle of edge i: angle(i + n) = angle(i) + 2π.
  double edge_angle(long i) const;
  // Cumulative clockwise turn from edge 0 to edge i, in [0, 2π) for i in [0, n).
  double cum_turn(long i) const { return edge_angle(wrap(i)) - angles_[0]; }
  // Clockwise turn from e_i to e_j in (0, 2π); zero when i ≡ j.
  double turn(long i, long j) const;
  // e_i ≺ e_j. Throws SameEdge when i ≡ j.
  bool chases(long i, long j) const;
  // Same as chases() but false for i ≡ j.
  bool chases_or_false(long i, long j) const { return wrap(i) != wrap(j) && turn(i, j) < std::numbers::pi; }

  // Vertex farthest from ℓ_i (the paper's D_i), in [0, n).
  long far_vertex(long i) const { return far_[static_cast<std::size_t>(wrap(i))]; }
  const std::vector<long>& far_vertices() const { return far_; }

  // Smallest unwrapped index k ≥ lo with k ≡ i (mod n).
  long unwrap_from(long i, long lo) const { return lo + wrap(i - lo); }

  double area() const { return area_; }
  double diameter() const { return diameter_; }
  double eps_abs() const { return kEpsAbsScale * diameter_; }
  // True when the input was given counter-clockwise and got reversed.
  bool reversed() const { return reversed_; }

 private:
  ConvexPolygon() = default;

  std::vector<Point> vertices_;
  std::vector<Vec2> dirs_;
  std::vector<double> angles_;  // unwrapped, strictly increasing, span < 2π
  std::vector<long> far_;
  double area_ = 0.0;
  double diameter_ = 0.0;
  bool reversed_ = false;
};

// Jitters every coordinate by up to `scale` × diameter (deterministic per seed).
std::vector<Point> perturb(std::span<const Point> vertices, double scale, std::uint64_t seed);

// Random convex polygon in the unit box via Valtr's construction, re-drawn on
// validation failure. Throws GenerationFailed after bounded retries.
ConvexPolygon generate_random(long n, std::uint64_t seed);

// Exhaustive argmax of distance to each ℓ_i; O(n²) reference.
std::vector<long> far_vertices_by_scan(const ConvexPolygon& poly);

// Rotating support query: the vertex that maximises the left offset for a
// clockwise direction angle. Directions must be non-decreasing (unwrapped).
class SupportPointer {
 public:
  SupportPointer(const ConvexPolygon& poly, double start_angle);

  // Line with direction angle `theta` through the support vertex; P lies right.
  DirectedLine query(double theta);
  long vertex() const { return poly_->wrap(ptr_); }
  long advances() const { return advances_; }

 private:
  const ConvexPolygon* poly_;
  long ptr_ = 0;  // unwrapped vertex index
  double last_ = 0.0;
  long advances_ = 0;
};

}  // namespace mft

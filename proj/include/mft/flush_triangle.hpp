#pragma once

#include <array>
#include <compare>

#include "mft/polygon.hpp"

namespace mft {

// Three edge indices in clockwise order.
struct Triple {
  long i = 0;
  long j = 0;
  long k = 0;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Indices reduced modulo n and rotated so the smallest comes first. Throws
// NotClockwiseTriple if the edges are not distinct or not in clockwise order.
Triple canonical(const ConvexPolygon& poly, Triple t);

// e_i ≺ e_j, e_j ≺ e_k and e_k ≺ e_i.
bool is_finite(const ConvexPolygon& poly, Triple t);

struct Triangle {
  std::array<Point, 3> corners;  // ℓ_i∩ℓ_j, ℓ_j∩ℓ_k, ℓ_k∩ℓ_i
  double area = 0.0;
};

// Throws InfiniteTriangle unless is_finite().
Triangle triangle_of(const ConvexPolygon& poly, Triple t);

// Area of the all-flush triangle, +∞ when unbounded.
double area_of(const ConvexPolygon& poly, Triple t);

enum class Corner {
  Minus,  // wedge at v_m outside ℓ_{m-1}, inside ℓ_m
  Plus,   // wedge at v_m inside ℓ_{m-1}, outside ℓ_m
};

// Area of the part of the corner wedge at vertex m on the polygon side of ℓ_x.
// Zero when ℓ_x bounds the wedge from the polygon side (x = m-1 for Minus,
// x = m for Plus); +∞ when unbounded. Throws InvalidEdgePair for the other
// bounding edge.
double corner_area(const ConvexPolygon& poly, long x, long m, Corner corner);

// Neighbour comparisons for an edge x whose triangle predecessor is p and
// successor is q (clockwise p, x, q). Both use the tie tolerance.
bool forward_improves(const ConvexPolygon& poly, long p, long x, long q);   // moving x to x+1
bool backward_improves(const ConvexPolygon& poly, long p, long x, long q);  // moving x to x-1

struct Stability {
  bool back = false;
  bool forw = false;
  bool finite = false;
  bool stable() const { return finite && back && forw; }
};

// Generalised back/forward stability of edge `which` (0, 1, 2 selects i, j, k);
// meaningful for infinite triangles too.
Stability edge_stability(const ConvexPolygon& poly, Triple t, int which);

// Finite, and no single-edge replacement yields a smaller triangle. Uses the
// neighbour test, which is exact thanks to unimodality.
bool is_3stable(const ConvexPolygon& poly, Triple t);

// Clockwise-first minimiser of Area(△ e_a e_b e_c) over a in (c, b), starting
// the forward walk at `hint`. Requires e_b ≺ e_c. Returns an unwrapped index in
// [c+1, c+n). `steps` (optional) receives the number of pointer advances.
long next_opt_apex(const ConvexPolygon& poly, long b, long c, long hint, long* steps = nullptr);

// Exhaustive argmin over the same range, for reference.
long opt_apex_by_scan(const ConvexPolygon& poly, long b, long c);

// Whether two clockwise triples admit a non-strict clockwise alternating merge.
bool is_interleaving(Triple a, Triple b, long n);

}  // namespace mft

#include "mft/flush_triangle.hpp"

#include <algorithm>
#include <string>

#include "mft/error.hpp"

namespace mft {

Triple canonical(const ConvexPolygon& poly, Triple t) {
  long a = poly.wrap(t.i);
  long b = poly.wrap(t.j);
  long c = poly.wrap(t.k);
  if (a == b || b == c || a == c) {
    throw Error(ErrorKind::NotClockwiseTriple, "edges must be distinct", {a, b, c});
  }
  // rotate so the smallest index leads; the rest must then ascend
  while (a > b || a > c) {
    std::tie(a, b, c) = std::tuple(b, c, a);
  }
  if (!(a < b && b < c)) throw Error(ErrorKind::NotClockwiseTriple, "edges are not in clockwise order", {a, b, c});
  return {a, b, c};
}

bool is_finite(const ConvexPolygon& poly, Triple t) {
  return poly.chases_or_false(t.i, t.j) && poly.chases_or_false(t.j, t.k) && poly.chases_or_false(t.k, t.i);
}

Triangle triangle_of(const ConvexPolygon& poly, Triple t) {
  const Triple c = canonical(poly, t);
  if (!is_finite(poly, c)) throw Error(ErrorKind::InfiniteTriangle, "lines do not bound a triangle", {c.i, c.j, c.k});
  Triangle tri;
  tri.corners = {intersect_lines(poly.line(c.i), poly.line(c.j)), intersect_lines(poly.line(c.j), poly.line(c.k)),
                 intersect_lines(poly.line(c.k), poly.line(c.i))};
  tri.area = std::abs(signed_area(tri.corners[0], tri.corners[1], tri.corners[2]));
  return tri;
}

double area_of(const ConvexPolygon& poly, Triple t) {
  const Triple c = canonical(poly, t);
  if (!is_finite(poly, c)) return kInf;
  return triangle_of(poly, c).area;
}

double corner_area(const ConvexPolygon& poly, long x, long m, Corner corner) {
  const long xw = poly.wrap(x);
  const long prev = poly.wrap(m - 1);
  const long cur = poly.wrap(m);
  const long zero_edge = corner == Corner::Minus ? prev : cur;
  const long bad_edge = corner == Corner::Minus ? cur : prev;
  if (xw == zero_edge) return 0.0;
  if (xw == bad_edge) throw Error(ErrorKind::InvalidEdgePair, "edge bounds the wedge on the far side", {xw, cur});

  const bool bounded = corner == Corner::Minus ? poly.chases(xw, cur) : poly.chases(prev, xw);
  if (!bounded) return kInf;

  // Distances from v_m to ℓ_x along both wedge sides, times the sine of the turn.
  const Point apex = poly.vertex(m);
  const Vec2 d_prev = poly.edge_dir(prev);
  const Vec2 d_cur = poly.edge_dir(cur);
  const DirectedLine lx = poly.line(xw);
  const Vec2 to_x = lx.anchor - apex;
  const double t_prev = cross(to_x, lx.dir) / cross(d_prev, lx.dir);
  const double t_cur = cross(to_x, lx.dir) / cross(d_cur, lx.dir);
  return 0.5 * std::abs(t_prev * t_cur * cross(d_prev, d_cur));
}

bool forward_improves(const ConvexPolygon& poly, long p, long x, long q) {
  return definitely_less(corner_area(poly, p, x + 1, Corner::Minus), corner_area(poly, q, x + 1, Corner::Plus));
}

bool backward_improves(const ConvexPolygon& poly, long p, long x, long q) {
  return definitely_less(corner_area(poly, q, x, Corner::Plus), corner_area(poly, p, x, Corner::Minus));
}

Stability edge_stability(const ConvexPolygon& poly, Triple t, int which) {
  const Triple c = canonical(poly, t);
  const std::array<long, 3> e = {c.i, c.j, c.k};
  const long x = e[static_cast<std::size_t>(which)];
  const long p = e[static_cast<std::size_t>((which + 2) % 3)];
  const long q = e[static_cast<std::size_t>((which + 1) % 3)];
  Stability s;
  s.finite = is_finite(poly, c);
  s.back = poly.chases(p, x) && !backward_improves(poly, p, x, q);
  s.forw = poly.chases(x, q) && !forward_improves(poly, p, x, q);
  return s;
}

bool is_3stable(const ConvexPolygon& poly, Triple t) {
  const Triple c = canonical(poly, t);
  if (!is_finite(poly, c)) return false;
  for (int w = 0; w < 3; ++w) {
    if (!edge_stability(poly, c, w).stable()) return false;
  }
  return true;
}

long next_opt_apex(const ConvexPolygon& poly, long b, long c, long hint, long* steps) {
  if (!poly.chases(b, c)) throw Error(ErrorKind::NotChasing, "apex search needs e_b ≺ e_c", {poly.wrap(b), poly.wrap(c)});
  const long lo = poly.unwrap_from(poly.far_vertex(b), c + 1);
  const long hi = poly.unwrap_from(poly.far_vertex(c), lo);  // finite apexes: [lo, hi)
  if (steps) *steps = 0;
  if (lo == hi) return lo - 1;
  long a = std::clamp(poly.unwrap_from(hint, c + 1), lo, hi - 1);
  while (a + 1 < hi && forward_improves(poly, c, a, b)) {
    ++a;
    if (steps) ++*steps;
  }
  return a;
}

long opt_apex_by_scan(const ConvexPolygon& poly, long b, long c) {
  const long end = poly.unwrap_from(b, c + 1);
  long best = c + 1;
  double best_area = kInf;
  for (long a = c + 1; a < end; ++a) {
    const double area = area_of(poly, {a, b, c});
    if (area < best_area) {
      best_area = area;
      best = a;
    }
  }
  if (!is_finite_area(best_area)) {
    // only the degenerate D_b = D_c case has no finite apex
    return poly.unwrap_from(poly.far_vertex(b), c + 1) - 1;
  }
  return best;
}

bool is_interleaving(Triple a, Triple b, long n) {
  const auto wrap = [n](long v) { return ((v % n) + n) % n; };
  const std::array<long, 3> x = {wrap(a.i), wrap(a.j), wrap(a.k)};
  const std::array<long, 3> y = {wrap(b.i), wrap(b.j), wrap(b.k)};
  for (int ra = 0; ra < 3; ++ra) {
    for (int rb = 0; rb < 3; ++rb) {
      const std::array<long, 6> seq = {x[ra], y[rb], x[(ra + 1) % 3], y[(rb + 1) % 3], x[(ra + 2) % 3], y[(rb + 2) % 3]};
      long cur = seq[0];
      for (std::size_t m = 1; m < seq.size(); ++m) cur += wrap(seq[m] - cur);
      if (cur <= seq[0] + n) return true;
    }
  }
  return false;
}

}  // namespace mft

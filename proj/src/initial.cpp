#include <array>

#include "mft/error.hpp"
#include "mft/solver.hpp"

namespace mft {

namespace {

// Clockwise triangle r < s < t < r + n, unwrapped.
struct Walk {
  const ConvexPolygon& poly;
  long r;
  long s;
  long t;

  long n() const { return poly.size(); }

  bool forward_r() { return r + 1 != s && forward_improves(poly, t, r, s) && (++r, true); }
  bool forward_s() { return s + 1 != t && forward_improves(poly, r, s, t) && (++s, true); }
  bool forward_t() { return t + 1 != r + n() && forward_improves(poly, s, t, r + n()) && (++t, true); }
  bool backward_r() { return r - 1 != t - n() && backward_improves(poly, t - n(), r, s) && (--r, true); }
  bool backward_s() { return s - 1 != r && backward_improves(poly, r, s, t) && (--s, true); }
  bool backward_t() { return t - 1 != s && backward_improves(poly, s, t, r + n()) && (--t, true); }

  // Keeps r <= s within one turn after r moved backwards past zero, etc.
  void renormalise() {
    while (s <= r) s += n(), t += n();
    while (s - r >= n()) s -= n(), t -= n();
  }
};

}  // namespace

Run initial_3stable(const ConvexPolygon& poly, SolverStats* stats) {
  const long n = poly.size();

  // Phase 1: best apex for every chasing pair (e_0, e_b).
  Walk w{poly, 0, 1, 2};
  double best = kInf;
  long apex = 2;
  for (long b = 1; b < n && poly.chases(0, b); ++b) {
    apex = next_opt_apex(poly, 0, b, std::max(apex, b + 1));
    const double area = area_of(poly, {0, b, apex});
    if (area < best) {
      best = area;
      w.s = b;
      w.t = apex;
    }
  }
  if (!is_finite_area(best)) throw Error(ErrorKind::InvariantViolated, "no finite all-flush triangle through e_0");

  // Phase 2: forward walk.
  while (w.forward_r()) {
  }
  for (bool moved = true; moved;) {
    moved = false;
    while (w.forward_s()) moved = true;
    while (w.forward_t()) moved = true;
  }

  // Phase 3: backward walk.
  while (w.backward_r()) {
  }
  w.renormalise();
  for (bool moved = true; moved;) {
    moved = false;
    while (w.backward_s()) moved = true;
    while (w.backward_t()) moved = true;
  }

  // Local repair until every edge is stable; a no-op in exact arithmetic.
  long repairs = 0;
  for (bool moved = true; moved;) {
    moved = w.forward_r() || w.backward_r() || w.forward_s() || w.backward_s() || w.forward_t() || w.backward_t();
    if (moved) {
      ++repairs;
      w.renormalise();
    }
  }
  if (stats) stats->repair_steps += repairs;

  Run run;
  run.s = poly.wrap(w.s);
  run.t = run.s + (w.t - w.s);
  run.r = run.s + (w.r + n - w.s);
  return run;
}

}  // namespace mft

#include "mft/hyperbola.hpp"

#include <algorithm>
#include <boost/math/tools/toms748_solve.hpp>
#include <cstdint>
#include <string>

#include "mft/error.hpp"

namespace mft {

namespace {

struct Decomposition {
  double p;  // coefficient along u
  double q;  // coefficient along v
};

Decomposition decompose(const HyperbolaBranch& h, Vec2 w) {
  const double cuv = cross(h.u, h.v);
  return {cross(w, h.v) / cuv, cross(h.u, w) / cuv};
}

// Tangent offset continued past the asymptote directions by the apex line.
double offset_continued(const HyperbolaBranch& h, double theta) {
  const Vec2 w = direction_of(theta);
  const auto [p, q] = decompose(h, w);
  const double spread = std::sqrt(h.coef() * std::max(0.0, -p * q));
  return cross(w, h.apex) + 2.0 * (p < 0.0 ? -1.0 : 1.0) * cross(h.u, h.v) * spread;
}

bool has_tangent(const HyperbolaBranch& h, double theta) {
  const auto [p, q] = decompose(h, direction_of(theta));
  return p * q < 0.0;
}

CommonTangent refine(const HyperbolaBranch& h1, const HyperbolaBranch& h2, double lo, double hi, double f_lo,
                     double f_hi) {
  const auto f = [&](double t) { return offset_continued(h1, t) - offset_continued(h2, t); };
  double root = lo;
  if (f_lo == 0.0) {
    root = lo;
  } else if (f_hi == 0.0) {
    root = hi;
  } else {
    std::uintmax_t iters = 100;
    const auto bracket = boost::math::tools::toms748_solve(f, lo, hi, f_lo, f_hi,
                                                           boost::math::tools::eps_tolerance<double>(50), iters);
    root = 0.5 * (bracket.first + bracket.second);
  }
  return {root, 0.5 * (offset_continued(h1, root) + offset_continued(h2, root))};
}

}  // namespace

double HyperbolaBranch::coef() const { return area / (2.0 * std::abs(cross(u, v))); }

Point HyperbolaBranch::point_at(double alpha) const { return apex + alpha * u + (coef() / alpha) * v; }

HyperbolaBranch make_branch(Point apex, Vec2 u, Vec2 v, double area) {
  const Vec2 nu = normalized(u);
  const Vec2 nv = normalized(v);
  if (std::abs(cross(nu, nv)) <= kEpsParallel) throw Error(ErrorKind::ParallelLines, "asymptotes are parallel");
  if (!(area > 0.0) || !std::isfinite(area)) {
    throw Error(ErrorKind::PreconditionViolated, "branch area must be positive and finite");
  }
  return {apex, nu, nv, area};
}

HyperbolaBranch corner_branch(const ConvexPolygon& poly, long k, long j, Corner side) {
  const long kw = poly.wrap(k);
  const long jw = poly.wrap(j);
  const Vec2 d_prev = poly.edge_dir(k - 1);
  const Vec2 d_cur = poly.edge_dir(k);
  if (side == Corner::Plus) {
    if (jw == poly.wrap(k - 1) || !poly.chases(jw, kw)) {
      throw Error(ErrorKind::InvalidEdgePair, "plus branch needs e_j ≺ e_k and j ≠ k-1", {kw, jw});
    }
    return make_branch(poly.vertex(k), d_prev, d_cur, corner_area(poly, jw, kw, Corner::Minus));
  }
  if (jw == kw || !poly.chases(k - 1, jw)) {
    throw Error(ErrorKind::InvalidEdgePair, "minus branch needs e_{k-1} ≺ e_j and j ≠ k", {kw, jw});
  }
  return make_branch(poly.vertex(k), -d_prev, -d_cur, corner_area(poly, jw, kw, Corner::Plus));
}

std::optional<double> cut_area(const HyperbolaBranch& h, const DirectedLine& line) {
  const auto along = [&](Vec2 axis) -> std::optional<double> {
    const double denom = cross(line.dir, axis);
    if (std::abs(denom) <= kEpsParallel) return std::nullopt;
    return cross(line.dir, line.anchor - h.apex) / denom;
  };
  const auto a = along(h.u);
  const auto b = along(h.v);
  const bool hits_u = a && *a > 0.0;
  const bool hits_v = b && *b > 0.0;
  if (hits_u && hits_v) return 0.5 * *a * *b * std::abs(cross(h.u, h.v));
  if (hits_u || hits_v) return kInf;
  return std::nullopt;
}

LineRelation classify(const HyperbolaBranch& h, const DirectedLine& line, double eps_rel) {
  const auto cut = cut_area(h, line);
  if (!cut) return LineRelation::Disjoint;
  if (!is_finite_area(*cut)) return LineRelation::Secant;
  if (std::abs(*cut - h.area) <= eps_rel * h.area) return LineRelation::Tangent;
  return *cut < h.area ? LineRelation::Disjoint : LineRelation::Secant;
}

std::optional<double> tangent_offset(const HyperbolaBranch& h, double theta) {
  if (!has_tangent(h, theta)) return std::nullopt;
  return offset_continued(h, theta);
}

DirectedLine tangent_with_direction(const HyperbolaBranch& h, double theta) {
  const Vec2 w = direction_of(theta);
  const auto [p, q] = decompose(h, w);
  if (!(p * q < 0.0)) throw Error(ErrorKind::NoTangentWithDirection, "direction outside the asymptote cone");
  const double c = h.coef();
  const double alpha = std::sqrt(c * std::abs(p / q));
  const double beta = std::sqrt(c * std::abs(q / p));
  return {h.apex + alpha * h.u + beta * h.v, w};
}

DirectedLine CommonTangent::line() const {
  const Vec2 w = direction();
  // point with cross(w, X) = offset, on the left normal
  return {offset * Vec2{-w.y, w.x}, w};
}

CommonTangent common_tangent(const HyperbolaBranch& h1, const HyperbolaBranch& h2, double lo, double hi) {
  const double f_lo = offset_continued(h1, lo) - offset_continued(h2, lo);
  const double f_hi = offset_continued(h1, hi) - offset_continued(h2, hi);
  if (!(lo <= hi) || (f_lo > 0.0 && f_hi > 0.0) || (f_lo < 0.0 && f_hi < 0.0)) {
    throw Error(ErrorKind::NoCommonTangent, "offset difference keeps its sign over the bracket");
  }
  return refine(h1, h2, lo, hi, f_lo, f_hi);
}

std::vector<CommonTangent> common_tangents(const HyperbolaBranch& h1, const HyperbolaBranch& h2) {
  constexpr int kSamples = 4096;
  std::vector<CommonTangent> found;
  const auto f = [&](double t) { return offset_continued(h1, t) - offset_continued(h2, t); };
  for (int s = 0; s < kSamples; ++s) {
    const double lo = kTwoPi * s / kSamples;
    const double hi = kTwoPi * (s + 1) / kSamples;
    const bool ok = has_tangent(h1, lo) && has_tangent(h1, hi) && has_tangent(h2, lo) && has_tangent(h2, hi);
    if (!ok) continue;
    const double f_lo = f(lo);
    const double f_hi = f(hi);
    if (f_lo == 0.0 || (f_lo < 0.0) != (f_hi < 0.0)) {
      CommonTangent t = refine(h1, h2, lo, hi, f_lo, f_hi);
      if (t.angle >= std::numbers::pi) {
        t.angle -= std::numbers::pi;
        t.offset = -t.offset;
      }
      const bool dup = std::any_of(found.begin(), found.end(),
                                   [&](const CommonTangent& g) { return std::abs(g.angle - t.angle) < 1e-9; });
      if (!dup) found.push_back(t);
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.angle < b.angle; });
  return found;
}

}  // namespace mft

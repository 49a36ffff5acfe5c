#include "mft/polygon.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>

#include "mft/error.hpp"

namespace mft {

namespace {

constexpr double kPi = std::numbers::pi;

long floor_div(long a, long n) {
  long q = a / n;
  if (a % n != 0 && a < 0) --q;
  return q;
}

double lift_above(double angle, double floor_angle) {
  double d = std::fmod(angle - floor_angle, kTwoPi);
  if (d < 0.0) d += kTwoPi;
  return floor_angle + d;
}

}  // namespace

double turn_tolerance(std::size_t n) {
  const double nn = static_cast<double>(n);
  return std::min(kEpsTurn, kPi / (16.0 * nn * nn));
}

ConvexPolygon ConvexPolygon::validate(std::vector<Point> vertices, const ValidationOptions& opts) {
  const std::size_t n = vertices.size();
  if (n < 3) throw Error(ErrorKind::TooFewVertices, "need at least 3 vertices, got " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(vertices[i].x) || !std::isfinite(vertices[i].y)) {
      throw Error(ErrorKind::NonFiniteCoordinate, "vertex " + std::to_string(i), {static_cast<long>(i)});
    }
  }

  ConvexPolygon poly;
  double twice_area = 0.0;
  for (std::size_t i = 0; i < n; ++i) twice_area += cross(vertices[i], vertices[(i + 1) % n]);
  if (twice_area > 0.0) {
    std::reverse(vertices.begin(), vertices.end());
    poly.reversed_ = true;
  }
  poly.vertices_ = std::move(vertices);
  const auto& v = poly.vertices_;
  const long ln = static_cast<long>(n);
  poly.area_ = 0.5 * std::abs(twice_area);

  poly.dirs_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e = v[(i + 1) % n] - v[i];
    if (e.x == 0.0 && e.y == 0.0) {
      throw Error(ErrorKind::CollinearVertices, "repeated vertex at " + std::to_string(i),
                  {static_cast<long>(i), static_cast<long>((i + 1) % n)});
    }
    poly.dirs_[i] = normalized(e);
  }

  const double eps_turn = opts.eps_turn >= 0.0 ? opts.eps_turn : turn_tolerance(n);
  double total_turn = 0.0;
  for (long i = 0; i < ln; ++i) {
    const Vec2 a = poly.dirs_[static_cast<std::size_t>((i + ln - 1) % ln)];
    const Vec2 b = poly.dirs_[static_cast<std::size_t>(i)];
    const double tau = std::atan2(-cross(a, b), dot(a, b));
    const std::vector<long> idx = {(i + ln - 1) % ln, i, (i + 1) % ln};
    if (std::abs(tau) <= eps_turn || std::abs(tau) >= kPi - eps_turn) {
      throw Error(ErrorKind::CollinearVertices, "vertices around " + std::to_string(i) + " are collinear", idx);
    }
    if (tau < 0.0) throw Error(ErrorKind::NotConvex, "reflex turn at vertex " + std::to_string(i), idx);
    total_turn += tau;
  }
  if (std::abs(total_turn - kTwoPi) > 1e-6) {
    throw Error(ErrorKind::NotConvex, "boundary winds more than once (total turn " + std::to_string(total_turn) + ")");
  }

  poly.angles_.resize(n);
  poly.angles_[0] = cw_angle(poly.dirs_[0]);
  for (std::size_t i = 1; i < n; ++i) {
    poly.angles_[i] = lift_above(cw_angle(poly.dirs_[i]), poly.angles_[i - 1]);
  }

  // Pairwise parallelism: directions modulo π must stay eps_turn apart.
  std::vector<std::pair<double, long>> mod_pi(n);
  for (std::size_t i = 0; i < n; ++i) mod_pi[i] = {std::fmod(poly.angles_[i], kPi), static_cast<long>(i)};
  std::sort(mod_pi.begin(), mod_pi.end());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& lo = mod_pi[i];
    const auto& hi = mod_pi[(i + 1) % n];
    const double gap = i + 1 < n ? hi.first - lo.first : hi.first + kPi - lo.first;
    if (gap <= eps_turn) {
      throw Error(ErrorKind::ParallelEdges,
                  "edges " + std::to_string(lo.second) + " and " + std::to_string(hi.second) + " are parallel",
                  {std::min(lo.second, hi.second), std::max(lo.second, hi.second)});
    }
  }

  // D_i by a monotone pointer: first vertex whose outgoing edge turned past π.
  poly.far_.resize(n);
  long m = 1;
  for (long i = 0; i < ln; ++i) {
    m = std::max(m, i + 1);
    while (poly.edge_angle(m) - poly.edge_angle(i) < kPi) ++m;
    poly.far_[static_cast<std::size_t>(i)] = poly.wrap(m);
  }

  // Diameter over antipodal pairs.
  double diam = 0.0;
  for (long i = 0; i < ln; ++i) {
    long from = poly.far_[static_cast<std::size_t>(poly.wrap(i - 1))];
    const long to = poly.unwrap_from(poly.far_[static_cast<std::size_t>(i)], from);
    for (long k = from; k <= to; ++k) diam = std::max(diam, norm(poly.vertex(k) - v[static_cast<std::size_t>(i)]));
  }
  poly.diameter_ = diam;
  return poly;
}

double ConvexPolygon::edge_angle(long i) const {
  const long n = size();
  return angles_[static_cast<std::size_t>(wrap(i))] + kTwoPi * static_cast<double>(floor_div(i, n));
}

double ConvexPolygon::turn(long i, long j) const {
  const long jj = unwrap_from(j, i);
  return edge_angle(jj) - edge_angle(i);
}

bool ConvexPolygon::chases(long i, long j) const {
  if (wrap(i) == wrap(j)) throw Error(ErrorKind::SameEdge, "chasing needs distinct edges", {wrap(i)});
  return turn(i, j) < kPi;
}

std::vector<Point> perturb(std::span<const Point> vertices, double scale, std::uint64_t seed) {
  double lo_x = kInf, lo_y = kInf, hi_x = -kInf, hi_y = -kInf;
  for (const auto& p : vertices) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  const double amp = scale * std::hypot(hi_x - lo_x, hi_y - lo_y);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-amp, amp);
  std::vector<Point> out(vertices.begin(), vertices.end());
  for (auto& p : out) {
    p.x += jitter(rng);
    p.y += jitter(rng);
  }
  return out;
}

namespace {

// Integer grid for generated coordinates; sums and the final power-of-two
// scaling stay exact in double precision.
constexpr int kGridBits = 44;

// One axis of Valtr's construction: n signed integer increments summing to zero.
std::vector<std::int64_t> valtr_axis(long n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> unit(0, (std::int64_t{1} << kGridBits) - 1);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::int64_t> xs(static_cast<std::size_t>(n));
  for (auto& x : xs) x = unit(rng);
  std::sort(xs.begin(), xs.end());
  const std::int64_t lo = xs.front();
  const std::int64_t hi = xs.back();
  std::vector<std::int64_t> steps;
  steps.reserve(xs.size());
  std::int64_t last_a = lo;
  std::int64_t last_b = lo;
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    if (coin(rng)) {
      steps.push_back(xs[i] - last_a);
      last_a = xs[i];
    } else {
      steps.push_back(last_b - xs[i]);
      last_b = xs[i];
    }
  }
  steps.push_back(hi - last_a);
  steps.push_back(last_b - hi);
  return steps;
}

struct GridStep {
  std::int64_t x;
  std::int64_t y;
};

// Exact counterclockwise order by direction, starting at the positive x axis.
bool precedes_ccw(const GridStep& a, const GridStep& b) {
  const auto half = [](const GridStep& v) { return v.y < 0 || (v.y == 0 && v.x < 0); };
  if (half(a) != half(b)) return half(a) < half(b);
  const __int128 turn = static_cast<__int128>(a.x) * b.y - static_cast<__int128>(a.y) * b.x;
  return turn > 0;
}

std::vector<Point> valtr_polygon(long n, std::mt19937_64& rng) {
  const auto dx = valtr_axis(n, rng);
  auto dy = valtr_axis(n, rng);
  std::shuffle(dy.begin(), dy.end(), rng);
  std::vector<GridStep> steps(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < steps.size(); ++i) steps[i] = {dx[i], dy[i]};
  std::sort(steps.begin(), steps.end(), precedes_ccw);

  std::vector<GridStep> grid(steps.size());
  GridStep cur{0, 0};
  std::int64_t lo_x = 0, lo_y = 0, hi_x = 0, hi_y = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    grid[i] = cur;
    lo_x = std::min(lo_x, cur.x);
    hi_x = std::max(hi_x, cur.x);
    lo_y = std::min(lo_y, cur.y);
    hi_y = std::max(hi_y, cur.y);
    cur = {cur.x + steps[i].x, cur.y + steps[i].y};
  }
  // Scale into the unit box by a power of two so that no coordinate is rounded.
  const std::int64_t extent = std::max<std::int64_t>(1, std::max(hi_x - lo_x, hi_y - lo_y));
  const int shift = std::bit_width(static_cast<std::uint64_t>(extent));
  std::vector<Point> pts(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    pts[i] = {std::ldexp(static_cast<double>(grid[i].x - lo_x), -shift),
              std::ldexp(static_cast<double>(grid[i].y - lo_y), -shift)};
  }
  return pts;
}

}  // namespace

ConvexPolygon generate_random(long n, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorKind::TooFewVertices, "need n >= 3");
  constexpr int kAttempts = 64;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n)};
  std::mt19937_64 rng(seq);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    try {
      return ConvexPolygon::validate(valtr_polygon(n, rng));
    } catch (const Error&) {
      // re-draw from the same stream
    }
  }
  throw Error(ErrorKind::GenerationFailed, "no valid polygon after " + std::to_string(kAttempts) + " draws");
}

std::vector<long> far_vertices_by_scan(const ConvexPolygon& poly) {
  const long n = poly.size();
  std::vector<long> out(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    const DirectedLine l = poly.line(i);
    long best = 0;
    double best_dist = -kInf;
    for (long k = 0; k < n; ++k) {
      const double dist = -cross(l.dir, poly.vertex(k) - l.anchor);
      if (dist > best_dist) {
        best_dist = dist;
        best = k;
      }
    }
    out[static_cast<std::size_t>(i)] = best;
  }
  return out;
}

SupportPointer::SupportPointer(const ConvexPolygon& poly, double start_angle) : poly_(&poly), last_(start_angle) {
  const long n = poly.size();
  const double base = poly.edge_angle(0);
  const long q = static_cast<long>(std::floor((start_angle - base) / kTwoPi));
  const double t = start_angle - kTwoPi * static_cast<double>(q);
  long k = 0;
  long hi = n;
  while (k < hi) {  // first k with angle(k) >= t
    const long mid = (k + hi) / 2;
    if (poly.edge_angle(mid) < t) {
      k = mid + 1;
    } else {
      hi = mid;
    }
  }
  ptr_ = k + q * n;
}

DirectedLine SupportPointer::query(double theta) {
  if (theta < last_) {
    throw Error(ErrorKind::NonMonotoneDirection,
                "support direction went back by " + std::to_string(last_ - theta) + " rad");
  }
  last_ = theta;
  while (poly_->edge_angle(ptr_) < theta) {
    ++ptr_;
    ++advances_;
  }
  return {poly_->vertex(ptr_), direction_of(theta)};
}

}  // namespace mft

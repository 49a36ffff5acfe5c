#include <algorithm>
#include <ranges>
#include <string>

#include "mft/error.hpp"
#include "mft/solver.hpp"

namespace mft {

namespace {

constexpr double kPi = std::numbers::pi;
// Angular slack for comparing tangent directions computed by root finding.
constexpr double kAngleSlack = 1e-11;
// Relative slack for the runtime tangency check.
constexpr double kTangencySlack = 1e-6;

bool trivial_decision(const ConvexPolygon& poly, long b, long c, Kill& out) {
  if (b + 1 == c) {
    out = Kill::C;
    return true;
  }
  if (!poly.chases_or_false(b, c + 1)) {
    out = Kill::B;
    return true;
  }
  return false;
}

// Offset at angle d of the line through the intersection of two lines given
// in (angle, offset) form; stays well conditioned when they are nearly parallel.
double pencil_offset(const CommonTangent& first, const CommonTangent& second, double d) {
  const double span = std::sin(second.angle - first.angle);
  if (std::abs(span) < 1e-14) return first.offset;
  return (std::sin(second.angle - d) * first.offset + std::sin(d - first.angle) * second.offset) / span;
}

}  // namespace

LinearCriterion::LinearCriterion(const ConvexPolygon& poly, const Run& run, SolverStats& stats, bool strict)
    : poly_(&poly),
      stats_(&stats),
      strict_(strict),
      d1_(poly.edge_angle(run.s + 1) + kPi),
      d2_(poly.edge_angle(run.r) + kPi),
      d_(d1_),
      support_(poly, d1_) {}

Kill LinearCriterion::decide(long b, long c, KillRecord* record) {
  const ConvexPolygon& poly = *poly_;
  Kill out = Kill::B;
  if (record) *record = KillRecord{b, c, Kill::B, true, d_, 0.0, 0.0};
  if (trivial_decision(poly, b, c, out)) {
    if (record) record->decision = out;
    return out;
  }

  const HyperbolaBranch g_plus = corner_branch(poly, c + 1, b, Corner::Plus);
  const HyperbolaBranch h_plus = corner_branch(poly, c + 1, b + 1, Corner::Plus);
  const HyperbolaBranch g_minus = corner_branch(poly, b + 1, c + 1, Corner::Minus);
  const HyperbolaBranch h_minus = corner_branch(poly, b + 1, c, Corner::Minus);

  const double lo = poly.edge_angle(b + 1) + kPi;
  const double hi = poly.edge_angle(c) + kPi;
  CommonTangent hg;
  CommonTangent gh;
  try {
    hg = common_tangent(h_plus, g_minus, lo, hi);
    gh = common_tangent(g_plus, h_minus, lo, hi);
  } catch (const Error& e) {
    throw Error(ErrorKind::CommonTangentInvalid,
                std::string(e.what()) + " at (b, c) = (" + std::to_string(b) + ", " + std::to_string(c) + ")",
                {poly.wrap(b), poly.wrap(c)});
  }

  const auto tangent_ok = [](const HyperbolaBranch& h, const CommonTangent& t) {
    return classify(h, t.line(), kTangencySlack) == LineRelation::Tangent;
  };
  if (!tangent_ok(h_plus, hg) || !tangent_ok(g_minus, hg) || !tangent_ok(g_plus, gh) || !tangent_ok(h_minus, gh)) {
    ++stats_->tangent_violations;
    if (strict_) throw Error(ErrorKind::CommonTangentInvalid, "common tangent fails the tangency check", {b, c});
  }
  if (hg.angle < d1_ - kAngleSlack || gh.angle > d2_ + kAngleSlack || hg.angle > gh.angle + kAngleSlack) {
    ++stats_->range_violations;
    if (strict_) throw Error(ErrorKind::CommonTangentInvalid, "tangent directions leave [d1, d2]", {b, c});
  }

  // Keep the previous direction while it stays admissible, else jump to L^HG.
  if (d_ < hg.angle - kAngleSlack) {
    d_ = hg.angle;
  } else if (d_ > gh.angle + kAngleSlack) {
    ++stats_->d_violations;
    if (strict_) {
      throw Error(ErrorKind::DMonotonicityViolated,
                  "previous direction exceeds the admissible range by " + std::to_string(d_ - gh.angle), {b, c});
    }
  }

  const double line_offset = pencil_offset(hg, gh, d_);
  const DirectedLine support = support_.query(d_);
  stats_->support_advances = support_.advances();
  out = cross(support.dir, support.anchor) < line_offset ? Kill::B : Kill::C;

  if (record) {
    record->decision = out;
    record->trivial = false;
    record->d = d_;
    record->theta_hg = hg.angle;
    record->theta_gh = gh.angle;
  }
  return out;
}

Kill kill_logn(const ConvexPolygon& poly, long b, long c, KillRecord* record) {
  Kill out = Kill::B;
  const bool trivial = trivial_decision(poly, b, c, out);
  if (!trivial) {
    const long k = c + 1;
    const long first = c + 2;
    const long last = poly.unwrap_from(b, k) - 1;  // candidates [first, last]
    const auto range = std::views::iota(first, last + 1);

    // e_b forward-stable in (i, b, k) holds on a prefix of the candidates.
    const double b_forward_loss = corner_area(poly, k, b + 1, Corner::Plus);
    const auto forw = [&](long i) { return !definitely_less(corner_area(poly, i, b + 1, Corner::Minus), b_forward_loss); };
    const auto x_end = std::ranges::partition_point(range, forw);
    const long x = x_end == range.begin() ? k : *std::ranges::prev(x_end);

    // e_k backward-stable in (i, b, k) holds on a suffix.
    const double k_backward_gain = corner_area(poly, b, k, Corner::Minus);
    const auto not_back = [&](long i) { return definitely_less(corner_area(poly, i, k, Corner::Plus), k_backward_gain); };
    const auto y_it = std::ranges::partition_point(range, not_back);
    const long y = y_it == range.end() ? last + 1 : *y_it;

    out = x < y ? Kill::B : Kill::C;
  }
  if (record) *record = KillRecord{b, c, out, trivial, 0.0, 0.0, 0.0};
  return out;
}

}  // namespace mft

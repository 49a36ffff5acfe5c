#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mft/error.hpp"
#include "mft/hyperbola.hpp"
#include "mft/solver.hpp"
#include "oracles.hpp"

namespace mft {
namespace {

constexpr double kPi = std::numbers::pi;

// αβ = 1 in the first quadrant: tangents cut triangles of area 2.
HyperbolaBranch unit_branch() { return make_branch({0, 0}, {1, 0}, {0, 1}, 2.0); }

TEST(Branch, CoefficientAndPoints) {
  const HyperbolaBranch h = unit_branch();
  EXPECT_DOUBLE_EQ(h.coef(), 1.0);
  const Point p = h.point_at(0.5);
  EXPECT_DOUBLE_EQ(p.x, 0.5);
  EXPECT_DOUBLE_EQ(p.y, 2.0);
}

TEST(Branch, RejectsBadInput) {
  EXPECT_THROW(make_branch({0, 0}, {1, 0}, {2, 0}, 1.0), Error);
  EXPECT_THROW(make_branch({0, 0}, {1, 0}, {0, 1}, 0.0), Error);
  EXPECT_THROW(make_branch({0, 0}, {1, 0}, {0, 1}, kInf), Error);
}

TEST(Classify, UnitBranchLines) {
  const HyperbolaBranch h = unit_branch();
  EXPECT_EQ(classify(h, DirectedLine::through({2, 0}, {0, 2})), LineRelation::Tangent);
  EXPECT_EQ(classify(h, DirectedLine::through({1, 0}, {0, 1})), LineRelation::Disjoint);
  EXPECT_EQ(classify(h, DirectedLine::through({3, 0}, {0, 3})), LineRelation::Secant);
  EXPECT_EQ(classify(h, DirectedLine::through({0, 1}, {1, 1})), LineRelation::Secant);
  EXPECT_EQ(classify(h, DirectedLine::through({-1, 0}, {0, -1})), LineRelation::Disjoint);
}

TEST(CutArea, MatchesIntercepts) {
  const HyperbolaBranch h = unit_branch();
  EXPECT_NEAR(*cut_area(h, DirectedLine::through({3, 0}, {0, 3})), 4.5, 1e-12);
  EXPECT_NEAR(*cut_area(h, DirectedLine::through({1, 0}, {0, 1})), 0.5, 1e-12);
}

TEST(TangentWithDirection, SlopeMinusOneTouchesAtOneOne) {
  const HyperbolaBranch h = unit_branch();
  const DirectedLine l = tangent_with_direction(h, cw_angle({1, -1}));
  EXPECT_NEAR(l.anchor.x, 1.0, 1e-12);
  EXPECT_NEAR(l.anchor.y, 1.0, 1e-12);
  EXPECT_EQ(side_of(l, {2, 0}, 1e-12), Side::On);
  EXPECT_EQ(side_of(l, {0, 2}, 1e-12), Side::On);
}

TEST(TangentWithDirection, SlopeMinusFourTouchesAtHalfTwo) {
  const HyperbolaBranch h = unit_branch();
  const DirectedLine l = tangent_with_direction(h, cw_angle({1, -4}));
  EXPECT_NEAR(l.anchor.x, 0.5, 1e-12);
  EXPECT_NEAR(l.anchor.y, 2.0, 1e-12);
  EXPECT_EQ(side_of(l, {1, 0}, 1e-12), Side::On);
  EXPECT_EQ(side_of(l, {0, 4}, 1e-12), Side::On);
  EXPECT_EQ(classify(h, l), LineRelation::Tangent);
}

TEST(TangentWithDirection, NoTangentOutsideTheCone) {
  try {
    tangent_with_direction(unit_branch(), cw_angle({1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoTangentWithDirection);
  }
  EXPECT_FALSE(tangent_offset(unit_branch(), cw_angle({1, 1})).has_value());
}

TEST(CommonTangents, MirroredUnitBranches) {
  const HyperbolaBranch h1 = unit_branch();
  const HyperbolaBranch h2 = make_branch({1, 1}, {-1, 0}, {0, -1}, 2.0);
  const auto tangents = common_tangents(h1, h2);
  std::vector<double> slopes;
  for (const CommonTangent& t : tangents) {
    const Vec2 w = t.direction();
    slopes.push_back(w.y / w.x);
    EXPECT_EQ(classify(h1, t.line(), 1e-9), LineRelation::Tangent);
    EXPECT_EQ(classify(h2, t.line(), 1e-9), LineRelation::Tangent);
  }
  std::sort(slopes.begin(), slopes.end());
  ASSERT_EQ(slopes.size(), 2u);
  EXPECT_NEAR(slopes[0], -(7 + 4 * std::sqrt(3.0)), 1e-9);
  EXPECT_NEAR(slopes[1], -(7 - 4 * std::sqrt(3.0)), 1e-9);
}

TEST(CommonTangent, BracketSelectsOneRoot) {
  const HyperbolaBranch h1 = unit_branch();
  const HyperbolaBranch h2 = make_branch({1, 1}, {-1, 0}, {0, -1}, 2.0);
  // Directions pointing down-right: clockwise angles in (0, π/2).
  const CommonTangent steep = common_tangent(h1, h2, kPi / 4, kPi / 2 - 1e-6);
  EXPECT_NEAR(std::tan(steep.angle), 7 + 4 * std::sqrt(3.0), 1e-8);
  const CommonTangent flat = common_tangent(h1, h2, 1e-6, kPi / 4);
  EXPECT_NEAR(std::tan(flat.angle), 7 - 4 * std::sqrt(3.0), 1e-9);
  EXPECT_THROW(common_tangent(h1, h2, 0.2, 0.3), Error);
}

// Tangent at (α, c/α) meets the asymptotes at 2α and 2c/α, so every tangent
// cuts the same area.
TEST(Branch, RandomTangentsCutConstantArea) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  double worst = 0.0;
  for (int trial = 0; trial < 2000; ++trial) {
    const double ta = angle(rng);
    double tb = ta + 0.05 + (kPi - 0.1) * (unit(rng) + 1) / 2;
    const HyperbolaBranch h =
        make_branch({unit(rng), unit(rng)}, direction_of(ta), direction_of(tb), std::exp(4 * unit(rng)));
    const double alpha = std::exp(3 * unit(rng));
    const double beta = h.coef() / alpha;
    const DirectedLine l = DirectedLine::through(h.apex + 2 * alpha * h.u, h.apex + 2 * beta * h.v);
    worst = std::max(worst, std::abs(*cut_area(h, l) - h.area) / h.area);
    EXPECT_EQ(side_of(l, h.point_at(alpha), 1e-9), Side::On);
    const DirectedLine same = tangent_with_direction(h, cw_angle(l.dir));
    EXPECT_NEAR(norm(same.anchor - h.point_at(alpha)), 0.0, 1e-7 * (1 + alpha + beta));
  }
  EXPECT_LE(worst, 1e-9);
}

TEST(CornerBranch, Q4PlusBranch) {
  const ConvexPolygon q4 = ConvexPolygon::validate(oracle::q4());
  const HyperbolaBranch h = corner_branch(q4, 2, 0, Corner::Plus);
  EXPECT_EQ(h.apex, (Point{6, 4}));
  EXPECT_NEAR(h.area, 187.0 / 3.0, 1e-12);
}

TEST(CornerBranch, Preconditions) {
  const ConvexPolygon poly = generate_random(12, 3);
  for (long k = 0; k < 12; ++k) {
    EXPECT_THROW(corner_branch(poly, k, k - 1, Corner::Plus), Error);
    EXPECT_THROW(corner_branch(poly, k, k, Corner::Minus), Error);
  }
}

TEST(CornerBranch, AreaMatchesOppositeCorner) {
  const ConvexPolygon poly = generate_random(20, 8);
  for (long k = 0; k < 20; ++k) {
    for (long j = 0; j < 20; ++j) {
      if (poly.wrap(j - k + 1) != 0 && poly.wrap(j - k) != 0 && poly.chases(j, k)) {
        EXPECT_NEAR(corner_branch(poly, k, j, Corner::Plus).area, corner_area(poly, j, k, Corner::Minus), 1e-12);
      }
      if (poly.wrap(j - k) != 0 && poly.wrap(j - k + 1) != 0 && poly.chases(k - 1, j)) {
        EXPECT_NEAR(corner_branch(poly, k, j, Corner::Minus).area, corner_area(poly, j, k, Corner::Plus), 1e-12);
      }
    }
  }
}

// The linear criterion checks tangency of every common tangent it uses and
// throws in strict mode on a miss.
TEST(CommonTangent, SolverTangentsTouchBothBranches) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const ConvexPolygon poly = generate_random(40 + static_cast<long>(seed) * 50, seed);
    SolverOptions strict;
    const SolverReport rep = rotate_and_kill(poly, Algo::Linear, strict);
    EXPECT_EQ(rep.stats.tangent_violations, 0);
    EXPECT_EQ(rep.stats.range_violations, 0);
  }
}

TEST(CommonTangent, NearlyCoincidentTangentsStayClose) {
  // Two branches sharing asymptote directions with nearly equal apexes and areas.
  const HyperbolaBranch h1 = unit_branch();
  const HyperbolaBranch h2 = make_branch({1 + 1e-7, 1 + 1e-7}, {-1, 0}, {0, -1}, 2.0);
  const auto close = common_tangents(h1, h2);
  const auto exact = common_tangents(h1, make_branch({1, 1}, {-1, 0}, {0, -1}, 2.0));
  ASSERT_EQ(close.size(), exact.size());
  for (std::size_t i = 0; i < close.size(); ++i) EXPECT_NEAR(close[i].angle, exact[i].angle, 1e-5);
}

}  // namespace
}  // namespace mft

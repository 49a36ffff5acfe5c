#include <gtest/gtest.h>

#include <cmath>

#include "mft/error.hpp"
#include "mft/polygon.hpp"
#include "oracles.hpp"

namespace mft {
namespace {

ErrorKind validation_error(std::vector<Point> pts) {
  try {
    ConvexPolygon::validate(std::move(pts));
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "validation passed";
  return ErrorKind::InvariantViolated;
}

TEST(Validate, Q4IsClockwiseWithArea21) {
  const ConvexPolygon q4 = ConvexPolygon::validate(oracle::q4());
  EXPECT_EQ(q4.size(), 4);
  EXPECT_FALSE(q4.reversed());
  EXPECT_DOUBLE_EQ(q4.area(), 21.0);
  EXPECT_DOUBLE_EQ(std::abs(oracle::shoelace(oracle::q4())), 21.0);
}

TEST(Validate, CounterClockwiseInputIsReversed) {
  auto pts = oracle::q4();
  std::reverse(pts.begin(), pts.end());
  const ConvexPolygon poly = ConvexPolygon::validate(pts);
  EXPECT_TRUE(poly.reversed());
  EXPECT_DOUBLE_EQ(poly.area(), 21.0);
  EXPECT_LT(oracle::shoelace({poly.vertices().begin(), poly.vertices().end()}), 0.0);
}

TEST(Validate, RejectsDegenerateInput) {
  EXPECT_EQ(validation_error({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), ErrorKind::ParallelEdges);
  EXPECT_EQ(validation_error({{0, 0}, {1, 0}, {2, 0}, {1, 1}}), ErrorKind::CollinearVertices);
  EXPECT_EQ(validation_error({{0, 0}, {1, 1}}), ErrorKind::TooFewVertices);
  EXPECT_EQ(validation_error({{0, 0}, {NAN, 1}, {1, 0}}), ErrorKind::NonFiniteCoordinate);
  EXPECT_EQ(validation_error({{0, 0}, {2, 5}, {1, 1}, {5, 0}}), ErrorKind::NotConvex);
  EXPECT_EQ(validation_error({{0, 0}, {0, 0}, {2, 5}, {5, 0}}), ErrorKind::CollinearVertices);
}

TEST(Validate, ReportsOffendingIndices) {
  try {
    ConvexPolygon::validate({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.indices().size(), 2u);
  }
}

TEST(Chases, Q4Examples) {
  const ConvexPolygon q4 = ConvexPolygon::validate(oracle::q4());
  EXPECT_TRUE(q4.chases(0, 1));
  EXPECT_FALSE(q4.chases(2, 0));
  EXPECT_NEAR(q4.turn(0, 1), 82.23 * std::numbers::pi / 180.0, 1e-3);
}

TEST(Chases, TriangleNeighbours) {
  const ConvexPolygon tri = ConvexPolygon::validate({{0, 0}, {1, 3}, {4, 0}});
  for (long i = 0; i < 3; ++i) EXPECT_TRUE(tri.chases(i, i + 1));
}

TEST(Chases, AcceptsUnwrappedIndices) {
  const ConvexPolygon q4 = ConvexPolygon::validate(oracle::q4());
  EXPECT_EQ(q4.chases(4, 5), q4.chases(0, 1));
  EXPECT_EQ(q4.chases(-2, -4), q4.chases(2, 0));
  EXPECT_EQ(q4.vertex(-1), q4.vertex(3));
}

TEST(EdgeAngles, StrictlyIncreasingWithinOneTurn) {
  const ConvexPolygon poly = generate_random(50, 3);
  for (long i = 0; i + 1 < poly.size(); ++i) EXPECT_LT(poly.edge_angle(i), poly.edge_angle(i + 1));
  EXPECT_NEAR(poly.edge_angle(poly.size()) - poly.edge_angle(0), kTwoPi, 1e-12);
  EXPECT_LT(poly.edge_angle(poly.size() - 1) - poly.edge_angle(0), kTwoPi);
}

TEST(FarVertex, Q4BottomEdge) {
  const ConvexPolygon q4 = ConvexPolygon::validate(oracle::q4());
  EXPECT_EQ(q4.far_vertex(3), 1);
  EXPECT_EQ(q4.vertex(q4.far_vertex(3)), (Point{2, 5}));
}

TEST(FarVertex, TriangleOppositeVertex) {
  const ConvexPolygon tri = ConvexPolygon::validate({{0, 0}, {1, 3}, {4, 0}});
  for (long i = 0; i < 3; ++i) EXPECT_EQ(tri.far_vertex(i), tri.wrap(i + 2));
}

TEST(FarVertex, MatchesExhaustiveScan) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const ConvexPolygon poly = generate_random(3 + static_cast<long>(seed) * 7, seed);
    const oracle::Polygon ref = oracle::from(poly);
    for (long i = 0; i < poly.size(); ++i) EXPECT_EQ(poly.far_vertex(i), oracle::farthest_vertex(ref, i));
    EXPECT_EQ(poly.far_vertices(), far_vertices_by_scan(poly));
  }
}

TEST(SupportPointer, Q4ExtremeLines) {
  const ConvexPolygon q4 = ConvexPolygon::validate(oracle::q4());
  SupportPointer support(q4, 0.0);
  const DirectedLine top = support.query(cw_angle({1, 0}));
  EXPECT_EQ(top.anchor, (Point{2, 5}));
  EXPECT_NEAR(top.dir.x, 1.0, 1e-15);
  const DirectedLine again = support.query(cw_angle({1, 0}));
  EXPECT_EQ(again.anchor, top.anchor);
  const DirectedLine bottom = support.query(cw_angle({-1, 0}));
  EXPECT_EQ(bottom.anchor, (Point{5, 0}));
}

TEST(SupportPointer, PolygonStaysOnTheRight) {
  const ConvexPolygon poly = generate_random(200, 11);
  SupportPointer support(poly, 0.3);
  for (double theta = 0.3; theta < 0.3 + 2 * kTwoPi; theta += 0.01) {
    const DirectedLine l = support.query(theta);
    for (const Point& p : poly.vertices()) EXPECT_NE(side_of(l, p, 1e-12), Side::Left);
  }
  EXPECT_LE(support.advances(), 2 * poly.size() + 1);
}

TEST(SupportPointer, RejectsDecreasingDirection) {
  const ConvexPolygon q4 = ConvexPolygon::validate(oracle::q4());
  SupportPointer support(q4, 0.0);
  support.query(1.0);
  try {
    support.query(0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonMonotoneDirection);
  }
}

TEST(Generate, SmallAndMediumValidate) {
  EXPECT_EQ(generate_random(3, 1).size(), 3);
  const ConvexPolygon poly = generate_random(64, 7);
  EXPECT_EQ(poly.size(), 64);
  EXPECT_NO_THROW(ConvexPolygon::validate({poly.vertices().begin(), poly.vertices().end()}));
}

TEST(Generate, DeterministicPerSeed) {
  const ConvexPolygon a = generate_random(500, 42);
  const ConvexPolygon b = generate_random(500, 42);
  const ConvexPolygon c = generate_random(500, 43);
  ASSERT_EQ(a.size(), b.size());
  EXPECT_TRUE(std::equal(a.vertices().begin(), a.vertices().end(), b.vertices().begin()));
  EXPECT_FALSE(std::equal(a.vertices().begin(), a.vertices().end(), c.vertices().begin()));
}

TEST(Generate, FitsTheUnitBox) {
  const ConvexPolygon poly = generate_random(1000, 5);
  for (const Point& p : poly.vertices()) {
    EXPECT_GE(p.x, 0.0);
    EXPECT_LE(p.x, 1.0);
    EXPECT_GE(p.y, 0.0);
    EXPECT_LE(p.y, 1.0);
  }
}

TEST(Generate, LargeInstanceValidates) {
  const ConvexPolygon poly = generate_random(1 << 17, 2);
  EXPECT_EQ(poly.size(), 1 << 17);
}

TEST(Perturb, DeterministicAndSmall) {
  const auto pts = oracle::q4();
  const auto a = perturb(pts, 1e-9, 3);
  const auto b = perturb(pts, 1e-9, 3);
  ASSERT_EQ(a.size(), pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    EXPECT_EQ(a[i], b[i]);
    EXPECT_LE(std::abs(a[i].x - pts[i].x), 1e-9 * std::hypot(6.0, 5.0) + 1e-15);
  }
}

TEST(Perturb, RepairsParallelSquare) {
  const std::vector<Point> square = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  EXPECT_NO_THROW(ConvexPolygon::validate(perturb(square, 1e-6, 1)));
}

}  // namespace
}  // namespace mft

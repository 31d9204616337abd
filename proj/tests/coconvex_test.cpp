#include "coaf/coconvex.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

namespace coaf {
namespace {

using test::ivec;
using test::q;
using Kind = GeometryError::Kind;

Cone quadrant() { return make_cone({ivec({1, 0}), ivec({0, 1})}); }

const std::vector<Vector> kQuadrantRays = {ivec({1, 0}), ivec({0, 1})};

// quadrant ∩ {x + y ≥ s}: complement of the right triangle with legs s
CoconvexBody triangle_body(const Rational& s) {
  Vector a = Vector::Zero(2), b = Vector::Zero(2);
  a[0] = s;
  b[1] = s;
  return make_coconvex(quadrant(), convex_hull({a, b}, kQuadrantRays));
}

Kind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const GeometryError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a GeometryError";
  return Kind::ConeMismatch;
}

TEST(MakeCone, Quadrant) {
  const Cone c = quadrant();
  EXPECT_EQ(c.dim(), 2);
  EXPECT_TRUE(equal(c.xi(), ivec({1, 1})));
  EXPECT_TRUE(c.is_interior_functional(c.xi()));
}

TEST(MakeCone, SkewCone) {
  const Cone c = make_cone({ivec({2, 1}), ivec({1, 2})});
  for (const auto& r : c.rays()) EXPECT_GT(c.xi().dot(r), 0);
  EXPECT_TRUE(equal(c.xi(), ivec({1, 1})));
  EXPECT_EQ(c.xi().dot(ivec({2, 1})), 3);
}

TEST(MakeCone, Errors) {
  EXPECT_EQ(kind_of([] { make_cone({ivec({1, 0}), ivec({-1, 0}), ivec({0, 1})}); }), Kind::NotStrictlyConvex);
  EXPECT_EQ(kind_of([] { make_cone({ivec({1, 0}), ivec({2, 0})}); }), Kind::NotFullDimensional);
  EXPECT_THROW(make_cone({}), InputError);
  EXPECT_THROW(make_cone(kQuadrantRays, ivec({1, -1})), InputError);
}

TEST(MakeCone, ThreeDimensionalCertificate) {
  const Cone c = make_cone({ivec({1, 0, 0}), ivec({0, 1, 0}), ivec({0, 0, 1}), ivec({1, 1, 0})});
  EXPECT_EQ(c.rays().size(), 3U);
  EXPECT_TRUE(c.is_interior_functional(c.xi()));
}

TEST(MakeCoconvex, UnitTriangle) {
  const auto a = triangle_body(1);
  EXPECT_EQ(co_volume(a), q("1/2"));
  EXPECT_EQ(a.threshold(ivec({1, 1})), 1);
}

TEST(MakeCoconvex, Errors) {
  EXPECT_EQ(kind_of([] { make_coconvex(quadrant(), convex_hull({ivec({1, 0})}, kQuadrantRays)); }),
            Kind::ComplementNotCompact);
  EXPECT_EQ(kind_of([] { make_coconvex(quadrant(), convex_hull({ivec({0, 0})}, kQuadrantRays)); }),
            Kind::EmptyInterior);
  EXPECT_EQ(kind_of([] { make_coconvex(quadrant(), convex_hull({ivec({-1, 0}), ivec({0, 1})}, kQuadrantRays)); }),
            Kind::ComplementNotInCone);
  EXPECT_EQ(kind_of([] { make_coconvex(quadrant(), convex_hull({ivec({1, 1})}, {ivec({1, 1})})); }),
            Kind::ComplementNotCompact);
}

TEST(CoSum, TriangleWithItself) {
  const auto a = triangle_body(1);
  const auto s = co_sum(a, a);
  EXPECT_EQ(s, triangle_body(2));
  // frozen by tests/oracles/handcheck.py (co_sum_triangle_area)
  EXPECT_EQ(co_volume(s), 2);
}

TEST(CoSum, TinyScaledCopy) {
  const auto a = triangle_body(1);
  const Rational eps = q("1/1000");
  EXPECT_EQ(co_sum(a, co_scale(eps, a)), triangle_body(1 + eps));
  EXPECT_EQ(co_volume(co_sum(a, co_scale(eps, a))), (1 + eps) * (1 + eps) / 2);
}

TEST(CoSum, MixedPairTwoTruncations) {
  const auto a = triangle_body(1);
  const auto b = make_coconvex(quadrant(), from_halfspaces(2, {{ivec({-1, 0}), 0},
                                                               {ivec({0, -1}), 0},
                                                               {ivec({-2, -1}), -2},
                                                               {ivec({-1, -2}), -2}}));
  // frozen by tests/oracles/handcheck.py (co_volume_k2, co_sum_mixed_area_t10/_t17)
  EXPECT_EQ(co_volume(b), q("4/3"));
  const auto s = co_sum(a, b);
  EXPECT_EQ(co_volume(s, Truncation{ivec({1, 1}), 10}), q("19/6"));
  EXPECT_EQ(co_volume(s, Truncation{ivec({1, 1}), 17}), q("19/6"));
  EXPECT_EQ(co_volume(s, Truncation{ivec({1, 3}), 40}), q("19/6"));
}

TEST(CoSum, ConeMismatch) {
  const auto a = triangle_body(1);
  const Cone other = make_cone({ivec({2, 1}), ivec({1, 2})});
  const auto b = make_coconvex(other, convex_hull({ivec({2, 1}), ivec({1, 2})}, other.rays()));
  EXPECT_EQ(kind_of([&] { co_sum(a, b); }), Kind::ConeMismatch);
}

TEST(CoScale, Examples) {
  const auto a = triangle_body(1);
  EXPECT_EQ(co_scale(1, a), a);
  EXPECT_EQ(co_volume(co_scale(2, a)), 2);
  EXPECT_EQ(co_scale(q("1/3"), triangle_body(3)), a);
  EXPECT_EQ(kind_of([&] { co_scale(0, a); }), Kind::NonPositiveScale);
  EXPECT_EQ(kind_of([&] { co_scale(-1, a); }), Kind::NonPositiveScale);
}

TEST(CoVolume, TruncationIndependence) {
  const auto a = triangle_body(1);
  // frozen by tests/oracles/handcheck.py (co_volume_triangle_t3/_t5): 9/2 - 8/2
  EXPECT_EQ(co_volume(a, Truncation{ivec({1, 1}), 3}), q("1/2"));
  EXPECT_EQ(co_volume(a, Truncation{ivec({1, 1}), 5}), q("1/2"));
  EXPECT_EQ(co_volume(a, Truncation{ivec({2, 1}), q("5/2")}), q("1/2"));
}

TEST(CoVolume, InvalidTruncation) {
  const auto a = triangle_body(1);
  EXPECT_EQ(kind_of([&] { co_volume(a, Truncation{ivec({1, 1}), 1}); }), Kind::InvalidTruncation);
  EXPECT_EQ(kind_of([&] { co_volume(a, Truncation{ivec({1, 0}), 5}); }), Kind::InvalidTruncation);
}

TEST(CoVolume, AdditivityAgainstTruncatedCone) {
  const auto a = triangle_body(3);
  const Halfspace w{ivec({1, 1}), 7};
  const Rational sector = volume(clip(quadrant().polyhedron(), w));
  EXPECT_EQ(sector, sector_constant(quadrant(), ivec({1, 1})) * 49);
  EXPECT_EQ(volume(clip(a.complement(), w)) + co_volume(a), sector);
}

TEST(CoconvexProperties, ThreeDimensionalBody) {
  const Cone c = make_cone({ivec({1, 0, 0}), ivec({0, 1, 0}), ivec({0, 0, 1})});
  auto body = [&](long a, long b) {
    return make_coconvex(c, from_halfspaces(3, {{ivec({-1, 0, 0}), 0},
                                                {ivec({0, -1, 0}), 0},
                                                {ivec({0, 0, -1}), 0},
                                                {ivec({-1, -1, -1}), -a},
                                                {ivec({-2, -1, -1}), -b}}));
  };
  const auto a = body(1, 2);
  const auto b = body(2, 2);
  const Rational va = co_volume(a);
  EXPECT_GT(va, 0);
  EXPECT_EQ(co_volume(co_scale(q("3/2"), a)), q("27/8") * va);
  EXPECT_EQ(co_sum(a, b), co_sum(b, a));
  EXPECT_EQ(co_scale(2, co_sum(a, b)), co_sum(co_scale(2, a), co_scale(2, b)));
  const std::vector<Truncation> truncs = {a.default_truncation(),
                                          {ivec({1, 1, 1}), 9},
                                          {ivec({1, 2, 3}), 11},
                                          {ivec({3, 1, 1}), q("15/2")}};
  for (const auto& t : truncs) EXPECT_EQ(co_volume(a, t), va);
}

}  // namespace
}  // namespace coaf

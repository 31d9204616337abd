#include "coaf/io.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

namespace coaf {
namespace {

using test::ivec;
using test::q;

TEST(Json, RationalFormat) {
  EXPECT_EQ(to_json(q("-3/6")), "-1/2");
  EXPECT_EQ(to_json(Rational(4)), "4");
  EXPECT_EQ(rational_from_json(Json("7/21")), q("1/3"));
  EXPECT_EQ(rational_from_json(Json(5)), 5);
  EXPECT_THROW(rational_from_json(Json(0.5)), InputError);
  EXPECT_THROW(rational_from_json(Json("1/0")), InputError);
}

TEST(Json, PolyhedronRoundTrip) {
  const auto p = convex_hull({ivec({0, 0}), ivec({2, 0}), ivec({1, 1}), ivec({1, 0})}, {ivec({0, 3})});
  const Json j = to_json(p);
  EXPECT_EQ(j["dim"], 2);
  EXPECT_EQ(j["rays"][0], Json::array({"0", "1"}));
  EXPECT_EQ(polyhedron_from_json(j), p);
  EXPECT_EQ(polyhedron_from_json(Json::parse(R"({"dim":2,"vertices":[],"rays":[]})")), Polyhedron::empty(2));
}

TEST(Json, MalformedInput) {
  EXPECT_THROW(polyhedron_from_json(Json::parse(R"({"vertices":[]})")), InputError);
  EXPECT_THROW(polyhedron_from_json(Json::parse(R"({"dim":2,"vertices":[["1"]]})")), InputError);
  EXPECT_THROW(polyhedron_from_json(Json::parse(R"({"dim":2,"vertices":"x"})")), InputError);
  EXPECT_THROW(form_from_json(Json::parse(R"({"n":2,"rows":[["1","2"],["3","4"]]})")), InputError);
  EXPECT_THROW(polynomial_from_json(Json::parse(R"({"nvars":2,"degree":2,"terms":[{"exp":[1,0],"coeff":"1"}]})")),
               InputError);
}

TEST(Json, ConeAndCoconvexRoundTrip) {
  const Cone c = make_cone({ivec({1, 0}), ivec({1, 2})});
  EXPECT_EQ(cone_from_json(to_json(c)), c);
  EXPECT_TRUE(equal(cone_from_json(to_json(c)).xi(), c.xi()));
  const auto body = make_coconvex(c, convex_hull({ivec({2, 0}), ivec({1, 2})}, c.rays()));
  const Json j = to_json(body);
  EXPECT_TRUE(j.contains("cone"));
  EXPECT_TRUE(j.contains("complement"));
  EXPECT_EQ(coconvex_from_json(j), body);
  EXPECT_THROW(cone_from_json(Json::parse(R"({"rays":[["1","0"],["-1","0"]]})")), GeometryError);
}

TEST(Json, PolynomialFormSignatureRoundTrip) {
  Polynomial p(2, 2);
  p.add_term({2, 0}, q("1/2"));
  p.add_term({0, 2}, q("-3"));
  const Json j = to_json(p);
  EXPECT_EQ(j["terms"][0]["exp"], Json::array({2, 0}));
  EXPECT_EQ(j["terms"][0]["coeff"], "1/2");
  EXPECT_EQ(polynomial_from_json(j), p);

  Matrix m(2, 2);
  m << q("1/2"), 1, 1, 2;
  const Form f(m);
  EXPECT_EQ(to_json(f).dump(), R"({"n":2,"rows":[["1/2","1"],["1","2"]]})");
  EXPECT_EQ(form_from_json(to_json(f)), f);
  EXPECT_EQ(to_json(Signature{1, 0, 1}).dump(), R"({"pos":1,"neg":0,"zero":1})");
  EXPECT_EQ(signature_from_json(to_json(Signature{2, 1, 0})), (Signature{2, 1, 0}));
}

TEST(Json, FamiliesRoundTrip) {
  const auto cube = box(Vector::Zero(3), Vector::Ones(3));
  const auto fam = make_convex_family({cube, scale(cube, 2)}, {ivec({1, 1})});
  const auto back = convex_family_from_json(to_json(fam));
  EXPECT_EQ(back.generators, fam.generators);
  EXPECT_TRUE(equal(back.marked[0], fam.marked[0]));

  const Cone c = make_cone({ivec({1, 0}), ivec({0, 1})});
  const auto body = make_coconvex(c, convex_hull({ivec({1, 0}), ivec({0, 1})}, c.rays()));
  const auto cf = make_coconvex_family(c, {body, co_scale(2, body)}, {});
  const auto cback = coconvex_family_from_json(to_json(cf));
  EXPECT_EQ(cback.generators, cf.generators);
}

}  // namespace
}  // namespace coaf

#include "coaf/corollary.hpp"
#include "coaf/random.hpp"
#include "coaf/suite.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

namespace coaf {
namespace {

using test::ivec;
using test::q;

TEST(SplitMix64, ReferenceStream) {
  // frozen by tests/oracles/handcheck.py (splitmix64_seed_1234567, splitmix64_stream_7_3)
  SplitMix64 rng(1234567);
  for (std::uint64_t expected : {6457827717110365317ULL, 3203168211198807973ULL, 9817491932198370423ULL,
                                 4593380528125082431ULL, 16408922859458223821ULL}) {
    EXPECT_EQ(rng.next(), expected);
  }
  auto s = SplitMix64::stream(7, 3);
  for (std::uint64_t expected : {7250273413821410515ULL, 16474944268897792596ULL, 627910309507936648ULL}) {
    EXPECT_EQ(s.next(), expected);
  }
}

TEST(SplitMix64, BoundedDraws) {
  SplitMix64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const auto x = rng.between(-3, 5);
    EXPECT_GE(x, -3);
    EXPECT_LE(x, 5);
    const Rational r = rng.rational(4);
    EXPECT_LE(abs(numerator(r)), 4);
    EXPECT_LE(denominator(r), 4);
    EXPECT_GT(rng.positive_rational(3), 0);
  }
}

TEST(Generators, GoldenBody) {
  SplitMix64 rng(1);
  const auto body = gen_convex_body(rng, 2, 4);
  const Json golden = read_json_file(COAF_FIXTURE_DIR "/gen_body_seed1_d2.json");
  EXPECT_EQ(to_json(body), golden);
}

TEST(Generators, Postconditions) {
  for (Eigen::Index d : {2, 3, 4}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      SplitMix64 a(seed), b(seed);
      const auto body = gen_convex_body(a, d, 4);
      EXPECT_EQ(body, gen_convex_body(b, d, 4));
      EXPECT_GT(volume(body), 0);
      EXPECT_LE(body.vertices().size(), kMaxVertices);

      const Cone c = gen_cone(a, d, 3);
      EXPECT_EQ(c.polyhedron().affine_dim(), d);
      const auto co = gen_coconvex_body(a, c, 4);
      EXPECT_GT(co_volume(co), 0);
      EXPECT_EQ(co.cone(), c);
    }
  }
}

TEST(Generators, FamiliesHaveMarkedPoints) {
  SplitMix64 rng(9);
  const auto fam = gen_convex_family(rng, 4, 3, 3);
  EXPECT_EQ(fam.marked.size(), 2u);
  const auto cf = gen_coconvex_family(rng, 3, 2, 3);
  EXPECT_EQ(cf.marked.size(), 1u);
  EXPECT_GT(cf.marked[0].minCoeff(), 0);
}

TEST(RootSum, ExactCases) {
  EXPECT_EQ(exact_root(q("8/27"), 3), q("2/3"));
  EXPECT_FALSE(exact_root(q("2"), 2));
  // √2 + √8 − √18 = 0
  EXPECT_EQ(root_sum_sign({{1, 2}, {1, 8}, {-1, 18}}, 2), 0);
  // √2 + √3 < √10
  EXPECT_EQ(root_sum_sign({{1, 2}, {1, 3}, {-1, 10}}, 2), -1);
  // ∛2 + ∛3 > ∛16 (1.260 + 1.442 > 2.520)
  EXPECT_EQ(root_sum_sign({{1, 2}, {1, 3}, {-1, 16}}, 3), 1);
  EXPECT_EQ(root_sum_sign({{q("1/2"), q("9/4")}, {-1, q("9/16")}}, 2), 0);
  EXPECT_THROW(root_sum_sign({{1, -1}}, 2), InputError);
}

Polynomial quadratic(const char* a, const char* b, const char* c) {
  Polynomial p(2, 2);
  p.add_term({2, 0}, parse_rational(a));
  p.add_term({1, 1}, parse_rational(b));
  p.add_term({0, 2}, parse_rational(c));
  return p;
}

TEST(Corollaries, HomotheticPairIsAnEqualityCase) {
  const auto vol = quadratic("1/2", "2", "2");  // (λ1 + 2λ2)²/2
  const std::vector<Rational> ts{0, q("1/4"), q("1/2"), q("3/4"), 1};
  EXPECT_TRUE(check_reversed_bm(vol, ivec({1, 0}), ivec({0, 1}), ts).ok);
  EXPECT_TRUE(check_generalized_reversed_bm(vol, {ivec({1, 1})}, ivec({1, 2}), ivec({3, 1})).ok);
  EXPECT_TRUE(check_first_reversed_minkowski(vol, ivec({1, 0}), ivec({0, 1})).ok);
  EXPECT_TRUE(check_second_reversed_minkowski(vol, ivec({1, 0}), ivec({0, 1})).ok);
}

TEST(Corollaries, DetectViolations) {
  // 2λ1λ2 vanishes at e1, e2 but not at their midpoint
  const auto bad = quadratic("0", "2", "0");
  const auto r = check_reversed_bm(bad, ivec({1, 0}), ivec({0, 1}), {q("1/2")});
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.counterexample["t"], "1/2");
  // a convex-type volume polynomial violates the reversed inequalities
  const auto convex = quadratic("1", "5", "6");
  EXPECT_FALSE(check_first_reversed_minkowski(convex, ivec({1, 0}), ivec({0, 1})).ok);
  EXPECT_FALSE(check_second_reversed_minkowski(convex, ivec({1, 0}), ivec({0, 1})).ok);
  EXPECT_FALSE(check_reversed_bm(convex, ivec({1, 0}), ivec({0, 1}), {q("1/2")}).ok);
}

TEST(Corollaries, CubicCaseWithIrrationalRoots) {
  // 2λ1³ + 3λ2³: the roots at e1 and e2 are in different classes
  Polynomial p(2, 3);
  p.add_term({3, 0}, 2);
  p.add_term({0, 3}, 3);
  const auto r = check_reversed_bm(p, ivec({1, 0}), ivec({0, 1}), {q("1/2")});
  // (2/8 + 3/8)^(1/3) = 0.855 ≤ (∛2 + ∛3)/2 = 1.351: the reversed BM inequality holds here
  EXPECT_TRUE(r.ok);
}

TEST(Config, Validation) {
  ExperimentConfig cfg;
  cfg.n_trials = 0;
  EXPECT_THROW(validate(cfg), InputError);
  EXPECT_THROW(config_from_json(Json::parse(R"({"n_trials": 0})")), InputError);
  EXPECT_THROW(config_from_json(Json::parse(R"({"dim": 5})")), InputError);
  EXPECT_THROW(config_from_json(Json::parse(R"({"suite": ["nope"]})")), InputError);
  const auto parsed = config_from_json(Json::parse(R"({"dim": 3, "seed": 11, "suite": ["af", "rbm"]})"));
  EXPECT_EQ(parsed.dim, 3);
  EXPECT_EQ(parsed.seed, 11u);
  EXPECT_EQ(parsed.suites, (std::vector<std::string>{"af", "rbm"}));
  EXPECT_EQ(config_from_json(to_json(parsed)).suites, parsed.suites);
}

TEST(Suite, AllPassAndDeterministic) {
  ExperimentConfig cfg;
  cfg.n_trials = 6;
  const auto a = run_suite(cfg);
  EXPECT_TRUE(a.all_pass()) << to_json(a).dump();
  for (const auto& p : a.properties) {
    EXPECT_EQ(p.trials, 6) << p.name;
    EXPECT_EQ(p.pass + p.fail, p.trials);
  }
  EXPECT_EQ(a.properties.size(), 12u);
  const auto b = run_suite(cfg);
  EXPECT_EQ(dump(to_json(a, false)), dump(to_json(b, false)));
  cfg.seed = 8;
  EXPECT_NE(dump(to_json(run_suite(cfg), false)), dump(to_json(a, false)));
}

TEST(Suite, CorruptedFormIsCaught) {
  ExperimentConfig cfg;
  cfg.n_trials = 3;
  cfg.suites = {"co_af"};
  SuiteHooks hooks;
  hooks.corrupt_co_af = [](AfForms& f) {
    Matrix b = f.bilinear.matrix();
    Matrix h = f.quadratic.matrix();
    b(0, 0) = -b(0, 0);
    h(0, 0) = -h(0, 0);
    f.bilinear = Form(b);
    f.quadratic = Form(h);
  };
  const auto rep = run_suite(cfg, hooks);
  EXPECT_FALSE(rep.all_pass());
  const auto& sig = rep.properties[1];
  EXPECT_EQ(sig.name, "co_af_signature");
  EXPECT_EQ(sig.fail, 3);
  ASSERT_FALSE(sig.counterexamples.empty());

  // the counterexample reproduces the failing instance exactly
  const Json& ce = sig.counterexamples[0];
  const auto fam = coconvex_family_from_json(ce["family"]);
  EXPECT_EQ(to_json(fam), ce["family"]);
  EXPECT_EQ(signature(co_af_form(fam).quadratic).neg, 0);
  const Json& cs = rep.properties[0].counterexamples;
  EXPECT_EQ(rep.properties[0].name, "co_af");
  EXPECT_EQ(rep.properties[0].fail, static_cast<int>(cs.size()));
}

TEST(Suite, HigherDimensionsSmoke) {
  ExperimentConfig cfg;
  cfg.dim = 3;
  cfg.n_generators = 2;
  cfg.n_trials = 2;
  EXPECT_TRUE(run_suite(cfg).all_pass());
  cfg.dim = 4;
  cfg.n_trials = 1;
  cfg.suites = {"kernel", "af", "co_af", "lift_Q"};
  EXPECT_TRUE(run_suite(cfg).all_pass());
}

}  // namespace
}  // namespace coaf

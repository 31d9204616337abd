#include "coaf/lift.hpp"

#include <algorithm>
#include <stdexcept>

namespace coaf {

namespace {

Vector with_height(const Vector& lambda, const Rational& t) {
  Vector w(lambda.size() + 1);
  w.head(lambda.size()) = lambda;
  w[lambda.size()] = t;
  return w;
}

Polynomial monomial_t(int nvars, int degree, const Rational& coeff) {
  Polynomial p(nvars, degree);
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  e.back() = degree;
  p.add_term(e, coeff);
  return p;
}

Polynomial reduce_quadratic(const Polynomial& p, const std::vector<Vector>& marked, int d) {
  Polynomial r = p;
  for (const auto& v : marked) r = directional_derivative(r, v);
  return (Rational(2) / factorial(d)) * r;
}

Json entry(Eigen::Index i, Eigen::Index j, const Rational& got, const Rational& expected) {
  return Json{{"row", i}, {"col", j}, {"got", to_string(got)}, {"expected", to_string(expected)}};
}

}  // namespace

Rational LiftedFamily::c_prime() const {
  Rational cp = c();
  for (const auto& m : lifted_marked()) cp *= m.s;
  return cp;
}

const Polynomial& LiftedFamily::volume_polynomial() const {
  std::call_once(state_->alpha_once, [this] {
    const int n = size();
    const Rational big_t = t0() + 1;
    // b_i = (e_i, T) for i < n and b_n = (e_1, T + 1) are linearly independent
    // valid points; Vol_α(Mμ) = Vol(Σ μ_j f(b_j)) by linearity of the family.
    Matrix m = Matrix::Zero(n + 1, n + 1);
    std::vector<Polyhedron> bodies;
    for (int j = 0; j <= n; ++j) {
      const int i = j < n ? j : 0;
      const Rational t = j < n ? big_t : big_t + 1;
      m(i, j) = 1;
      m(n, j) = t;
      bodies.push_back(clip(base().generators[static_cast<std::size_t>(i)].complement(), {xi(), t}));
    }
    const auto minv = inverse(m);
    if (!minv) throw std::logic_error("lift sample points are not independent");
    state_->alpha = substitute_linear(coaf::volume_polynomial(bodies), *minv);
  });
  return *state_->alpha;
}

const Polynomial& LiftedFamily::base_volume_polynomial() const {
  std::call_once(state_->beta_once, [this] { state_->beta = co_volume_polynomial(base()); });
  return *state_->beta;
}

LiftedFamily lift(const CoconvexFamily& fam, const std::optional<std::vector<Rational>>& heights) {
  auto st = std::make_shared<LiftedFamily::State>(fam);
  st->xi = fam.cone.xi();
  st->t0 = fam.generators.front().threshold(st->xi);
  for (const auto& g : fam.generators) st->t0 = std::max(st->t0, g.threshold(st->xi));
  st->t1 = st->t0 + 2;
  if (heights && heights->size() != fam.marked.size()) {
    throw InputError("lift: need one height per marked point");
  }
  for (std::size_t i = 0; i < fam.marked.size(); ++i) {
    const Rational s = heights ? (*heights)[i] : st->t0 + 1;
    if (s <= st->t0 || s >= st->t1) {
      throw InputError("lift: height " + to_string(s) + " outside (" + to_string(st->t0) + ", " + to_string(st->t1) + ")");
    }
    st->marked.push_back({fam.marked[i], s});
  }
  st->c = sector_constant(fam.cone, st->xi);
  return LiftedFamily(std::move(st));
}

Rational lifted_threshold(const LiftedFamily& lf, const Vector& lambda) {
  if (lambda.size() != lf.size()) throw InputError("lifted sample has wrong length");
  Rational thr = 0;
  for (int i = 0; i < lf.size(); ++i) {
    if (lambda[i] <= 0) throw InputError("lifted sample needs positive coefficients: " + to_string(lambda));
    thr += lambda[i] * lf.base().generators[static_cast<std::size_t>(i)].threshold(lf.xi());
  }
  return thr;
}

Polyhedron lifted_body(const LiftedFamily& lf, const Vector& lambda, const Rational& t) {
  const Rational thr = lifted_threshold(lf, lambda);
  if (t <= thr) {
    throw InputError("lifted sample t = " + to_string(t) + " does not exceed the threshold " + to_string(thr));
  }
  return clip(combination(lf.base(), lambda).complement(), {lf.xi(), t});
}

Polynomial co_volume_polynomial_from_lift(const LiftedFamily& lf) {
  const int n = lf.size();
  const auto d = static_cast<int>(lf.dim());
  const Polynomial beta = monomial_t(n + 1, d, lf.c()) - lf.volume_polynomial();
  Polynomial out(n, d);
  for (const auto& [e, coeff] : beta.terms()) {
    if (e.back() != 0) throw std::logic_error("c·t^d − Vol_α depends on t");
    out.add_term(std::vector<int>(e.begin(), e.end() - 1), coeff);
  }
  return out;
}

std::vector<LiftSample> default_samples(const LiftedFamily& lf) {
  std::vector<LiftSample> out;
  for (int k = 0; k < 5; ++k) {
    Vector lambda(lf.size());
    for (int i = 0; i < lf.size(); ++i) lambda[i] = Rational(1 + (i + k) % 3, 2);
    const Rational t = lifted_threshold(lf, lambda) + Rational(k + 1, 2);
    out.push_back({lambda, t});
  }
  return out;
}

IdentityReport verify_identity_V(const LiftedFamily& lf, const std::vector<LiftSample>& samples) {
  IdentityReport rep;
  rep.identity = "V";
  const auto d = static_cast<unsigned>(lf.dim());
  const Polynomial& beta = lf.base_volume_polynomial();
  const Polynomial& alpha = lf.volume_polynomial();
  rep.details["c"] = to_string(lf.c());

  const Polynomial from_lift = co_volume_polynomial_from_lift(lf);
  if (!(from_lift == beta)) {
    rep.ok = false;
    rep.counterexample = Json{{"check", "vol_beta_paths"}, {"interpolation", to_json(beta)}, {"lift", to_json(from_lift)}};
    return rep;
  }

  std::vector<Polyhedron> bodies;
  for (const auto& s : samples) {
    const Polyhedron body = lifted_body(lf, s.lambda, s.t);
    const Rational lhs = volume(body);
    const Rational rhs = lf.c() * pow(s.t, d) - beta.evaluate(s.lambda);
    const Rational poly = alpha.evaluate(with_height(s.lambda, s.t));
    ++rep.samples;
    if (lhs != rhs || poly != lhs) {
      rep.ok = false;
      rep.counterexample = Json{{"check", "volume"},           {"lambda", to_json(s.lambda)},
                                {"t", to_string(s.t)},         {"lifted_volume", to_string(lhs)},
                                {"c_t_d_minus_vol_beta", to_string(rhs)}, {"vol_alpha_polynomial", to_string(poly)}};
      return rep;
    }
    bodies.push_back(body);
  }

  if (lf.dim() <= 3) {
    for (std::size_t k = 0; k + 1 < samples.size(); ++k) {
      const Vector lambda = samples[k].lambda + samples[k + 1].lambda;
      const Rational t = samples[k].t + samples[k + 1].t;
      if (!(minkowski_sum(bodies[k], bodies[k + 1]) == lifted_body(lf, lambda, t))) {
        rep.ok = false;
        rep.counterexample = Json{{"check", "linearity"},
                                  {"first", {{"lambda", to_json(samples[k].lambda)}, {"t", to_string(samples[k].t)}}},
                                  {"second", {{"lambda", to_json(samples[k + 1].lambda)}, {"t", to_string(samples[k + 1].t)}}}};
        return rep;
      }
    }
  }
  return rep;
}

IdentityReport verify_identity_V(const LiftedFamily& lf) { return verify_identity_V(lf, default_samples(lf)); }

IdentityReport verify_identity_Q(const LiftedFamily& lf) {
  IdentityReport rep;
  rep.identity = "Q";
  const int n = lf.size();
  const auto d = static_cast<int>(lf.dim());
  std::vector<Vector> lifted;
  for (const auto& m : lf.lifted_marked()) lifted.push_back(with_height(m.v, m.s));
  const Matrix q_alpha = hessian(reduce_quadratic(lf.volume_polynomial(), lifted, d));
  const Matrix q_beta = hessian(reduce_quadratic(lf.base_volume_polynomial(), lf.base().marked, d));

  Matrix expected = Matrix::Zero(n + 1, n + 1);
  expected.topLeftCorner(n, n) = -q_beta;
  expected(n, n) = 2 * lf.c_prime();

  rep.details["c_prime"] = to_string(lf.c_prime());
  rep.details["q_alpha"] = to_json(Form(q_alpha));
  Json bad = Json::array();
  for (Eigen::Index i = 0; i <= n; ++i) {
    for (Eigen::Index j = 0; j <= n; ++j) {
      ++rep.samples;
      if (q_alpha(i, j) != expected(i, j)) bad.push_back(entry(i, j, q_alpha(i, j), expected(i, j)));
    }
  }
  if (!bad.empty()) {
    rep.ok = false;
    rep.counterexample = Json{{"check", "entries"}, {"entries", bad}, {"q_alpha", to_json(q_alpha)},
                              {"expected", to_json(expected)}};
  }
  return rep;
}

IdentityReport verify_signature_argument(const LiftedFamily& lf) {
  IdentityReport rep;
  rep.identity = "signature";
  const auto d = static_cast<int>(lf.dim());
  std::vector<Vector> lifted;
  for (const auto& m : lf.lifted_marked()) lifted.push_back(with_height(m.v, m.s));
  const Matrix q_alpha = hessian(reduce_quadratic(lf.volume_polynomial(), lifted, d));
  const Matrix q_beta = hessian(reduce_quadratic(lf.base_volume_polynomial(), lf.base().marked, d));

  const Signature s_alpha = signature(Form(q_alpha));
  const Signature s_t = signature(Form(Matrix::Constant(1, 1, 2 * lf.c_prime())));
  const Signature s_beta = signature(Form(q_beta));
  const Signature s_neg_beta = signature(Form(Matrix(-q_beta)));
  const Signature sum{s_t.pos + s_neg_beta.pos, s_t.neg + s_neg_beta.neg, s_t.zero + s_neg_beta.zero};
  rep.details = Json{{"q_alpha", to_json(s_alpha)},   {"c_prime_t2", to_json(s_t)}, {"neg_q_beta", to_json(s_neg_beta)},
                     {"q_beta", to_json(s_beta)}};

  const std::vector<std::pair<const char*, bool>> chain = {
      {"c_prime_t2 has signature (1,0,0)", s_t == Signature{1, 0, 0}},
      {"-Q_beta swaps the signature of Q_beta", s_neg_beta == Signature{s_beta.neg, s_beta.pos, s_beta.zero}},
      {"Q_alpha = c_prime_t2 + (-Q_beta) on disjoint variables", s_alpha == sum},
      {"Q_alpha has exactly one positive square", s_alpha.pos == 1},
      {"Q_beta has no negative squares", s_beta.neg == 0},
  };
  for (const auto& [what, holds] : chain) {
    ++rep.samples;
    if (!holds) {
      rep.ok = false;
      rep.counterexample = Json{{"check", what}, {"signatures", rep.details}, {"q_alpha", to_json(q_alpha)}};
      break;
    }
  }
  return rep;
}

Json to_json(const LiftedFamily& lf) {
  Json marked = Json::array();
  for (const auto& m : lf.lifted_marked()) marked.push_back(Json{{"v", to_json(m.v)}, {"s", to_string(m.s)}});
  return Json{{"base", to_json(lf.base())},
              {"xi", to_json(lf.xi())},
              {"t_window", Json::array({to_string(lf.t0()), to_string(lf.t1())})},
              {"lifted_marked", marked},
              {"c", to_string(lf.c())},
              {"c_prime", to_string(lf.c_prime())}};
}

Json to_json(const IdentityReport& report) {
  return Json{{"identity", report.identity},
              {"status", report.ok ? "ok" : "fail"},
              {"samples", report.samples},
              {"counterexample", report.ok ? Json(nullptr) : report.counterexample},
              {"details", report.details}};
}

}  // namespace coaf

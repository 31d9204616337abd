#ifndef COAF_LIFT_HPP
#define COAF_LIFT_HPP

#include "coaf/family.hpp"
#include "coaf/io.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace coaf {

/// A point (v, s) of V × R used as a marked point of the lifted family.
struct LiftedPoint {
  Vector v;
  Rational s;
};

/// The convex family α on V × R whose body at (λ, t) is the closure of
/// (C ∩ W(t)) ∖ g(λ), i.e. the clipped complement K_λ ∩ {ξ ≤ t}.
class LiftedFamily {
 public:
  const CoconvexFamily& base() const { return state_->base; }
  const Vector& xi() const { return state_->xi; }
  const Rational& t0() const { return state_->t0; }
  const Rational& t1() const { return state_->t1; }
  const std::vector<LiftedPoint>& lifted_marked() const { return state_->marked; }
  /// Vol(C ∩ {ξ ≤ 1}).
  const Rational& c() const { return state_->c; }
  /// c·s_1⋯s_{d−2}, the t² coefficient of the lifted quadratic form.
  Rational c_prime() const;

  Eigen::Index dim() const { return base().dim(); }
  int size() const { return base().size(); }

  /// Vol_α in the n + 1 variables (λ, t), from materialized lifted bodies.
  const Polynomial& volume_polynomial() const;
  /// Vol_β of the base family by interpolation.
  const Polynomial& base_volume_polynomial() const;

 private:
  struct State {
    explicit State(CoconvexFamily fam) : base(std::move(fam)) {}
    CoconvexFamily base;
    Vector xi;
    Rational t0;
    Rational t1;
    std::vector<LiftedPoint> marked;
    Rational c;
    mutable std::once_flag alpha_once;
    mutable std::optional<Polynomial> alpha;
    mutable std::once_flag beta_once;
    mutable std::optional<Polynomial> beta;
  };
  explicit LiftedFamily(std::shared_ptr<State> state) : state_(std::move(state)) {}
  friend LiftedFamily lift(const CoconvexFamily&, const std::optional<std::vector<Rational>>&);

  std::shared_ptr<State> state_;
};

/// ξ is the cone certificate, t0 the largest generator threshold, t1 = t0 + 2
/// and s_i = t0 + 1 unless `heights` overrides them (each must lie in (t0, t1)).
LiftedFamily lift(const CoconvexFamily& fam, const std::optional<std::vector<Rational>>& heights = std::nullopt);

/// max ξ over the vertices of K_λ; (λ, t) is a valid sample when t exceeds it.
Rational lifted_threshold(const LiftedFamily& lf, const Vector& lambda);
/// clip(K_λ, ξ ≤ t). Throws InputError unless λ > 0 and t > lifted_threshold.
Polyhedron lifted_body(const LiftedFamily& lf, const Vector& lambda, const Rational& t);

/// Vol_β recovered from Vol_α as c·t^d − Vol_α; throws std::logic_error if
/// the difference still depends on t.
Polynomial co_volume_polynomial_from_lift(const LiftedFamily& lf);

struct LiftSample {
  Vector lambda;
  Rational t;
};

/// Five valid samples with positive λ and t above the per-sample threshold.
std::vector<LiftSample> default_samples(const LiftedFamily& lf);

struct IdentityReport {
  std::string identity;
  bool ok = true;
  int samples = 0;
  Json counterexample;
  Json details = Json::object();
};

/// Vol(lifted_body(λ, t)) = c·t^d − Vol_β(λ) at every sample, with Vol_β from
/// interpolation; also checks Vol_α(λ, t) from the lifted polynomial, the
/// agreement of both Vol_β paths and, for d ≤ 3, Minkowski linearity of the
/// lifted bodies on consecutive samples.
IdentityReport verify_identity_V(const LiftedFamily& lf, const std::vector<LiftSample>& samples);
IdentityReport verify_identity_V(const LiftedFamily& lf);
/// Hessian of Q_α equals blockdiag(−Hessian(Q^C_β), 2c′) entry-wise.
IdentityReport verify_identity_Q(const LiftedFamily& lf);
/// sig(Q_α) = sig(c′t²) + sig(−Q^C_β), sig(c′t²) = (1,0,0), pos(Q_α) = 1 and
/// hence neg(Q^C_β) = 0.
IdentityReport verify_signature_argument(const LiftedFamily& lf);

Json to_json(const LiftedFamily& lf);
Json to_json(const IdentityReport& report);

}  // namespace coaf

#endif  // COAF_LIFT_HPP

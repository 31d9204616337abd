#ifndef COAF_COROLLARY_HPP
#define COAF_COROLLARY_HPP

#include "coaf/io.hpp"
#include "coaf/polynomial.hpp"

#include <optional>
#include <vector>

namespace coaf {

/// coeff · radicand^(1/k) with radicand ≥ 0.
struct RootTerm {
  Rational coeff;
  Rational radicand;
};

/// The rational k-th root of x ≥ 0, if it is rational.
std::optional<Rational> exact_root(const Rational& x, unsigned k);

/// Exact sign of Σ coeff_i · radicand_i^(1/k).
///
/// Terms whose radicands differ by a rational k-th power are merged exactly.
/// k-th roots of radicands in distinct classes are linearly independent over
/// the rationals, so a nonzero merged sum is separated from 0 by interval
/// refinement. Returns nullopt only if `max_bits` of precision do not suffice.
std::optional<int> root_sum_sign(const std::vector<RootTerm>& terms, unsigned k, unsigned max_bits = 4096);

struct CheckResult {
  bool ok = true;
  Json counterexample;
};

/// Vol_β(t u + (1−t) v)^(1/d) ≤ t Vol_β(u)^(1/d) + (1−t) Vol_β(v)^(1/d) for
/// each t in `ts`.
CheckResult check_reversed_bm(const Polynomial& vol, const Vector& u, const Vector& v, const std::vector<Rational>& ts);

/// f = L_{w_1} … L_{w_k} Vol_β: f((u+v)/2)^(1/(d−k)) ≤ ½ f(u)^(1/(d−k)) + ½ f(v)^(1/(d−k)).
CheckResult check_generalized_reversed_bm(const Polynomial& vol, const std::vector<Vector>& directions,
                                          const Vector& u, const Vector& v);

/// ((1/d!) L_u L_v^(d−1) Vol_β)^d ≤ Vol_β(u) · Vol_β(v)^(d−1).
CheckResult check_first_reversed_minkowski(const Polynomial& vol, const Vector& u, const Vector& v);

/// With every marked point equal to u: B^C(u,v)² ≤ Vol_β(u) · B^C(v,v).
CheckResult check_second_reversed_minkowski(const Polynomial& vol, const Vector& u, const Vector& v);

}  // namespace coaf

#endif  // COAF_COROLLARY_HPP

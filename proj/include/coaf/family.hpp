#ifndef COAF_FAMILY_HPP
#define COAF_FAMILY_HPP

#include "coaf/coconvex.hpp"
#include "coaf/forms.hpp"
#include "coaf/polynomial.hpp"

#include <vector>

namespace coaf {

/// Linear family λ ↦ Σ λ_i K_i over the positive orthant, with d − 2 marked
/// coefficient vectors.
struct ConvexFamily {
  std::vector<Polyhedron> generators;
  std::vector<Vector> marked;

  Eigen::Index dim() const { return generators.front().dim(); }
  int size() const { return static_cast<int>(generators.size()); }
};

/// Linear family λ ↦ ⊕ λ_i A_i of C-coconvex bodies.
struct CoconvexFamily {
  Cone cone;
  std::vector<CoconvexBody> generators;
  std::vector<Vector> marked;

  Eigen::Index dim() const { return cone.dim(); }
  int size() const { return static_cast<int>(generators.size()); }
};

/// Validates generator dimensions, boundedness and marked-point positivity.
ConvexFamily make_convex_family(std::vector<Polyhedron> generators, std::vector<Vector> marked);
CoconvexFamily make_coconvex_family(const Cone& cone, std::vector<CoconvexBody> generators,
                                    std::vector<Vector> marked);

/// Σ λ_i K_i for λ ≥ 0 with at least one positive entry.
Polyhedron combination(const ConvexFamily& fam, const Vector& lambda);
/// ⊕ λ_i A_i, validated as a coconvex body.
CoconvexBody combination(const CoconvexFamily& fam, const Vector& lambda);

/// MV(K_1, …, K_d) by inclusion-exclusion over the 2^d − 1 partial sums.
Rational mixed_volume(const std::vector<Polyhedron>& bodies);

/// Vol(Σ λ_i K_i) as a polynomial; the coefficient of λ^a is
/// (d!/a!)·MV(K with multiplicities a).
Polynomial volume_polynomial(const ConvexFamily& fam);
Polynomial volume_polynomial(const std::vector<Polyhedron>& generators);

/// Vol_β by exact interpolation of co_volume on a positive lattice.
Polynomial co_volume_polynomial(const CoconvexFamily& fam);

/// The Aleksandrov-Fenchel forms of a volume polynomial and marked points.
///
/// `bilinear` is B(u1,u2) = (1/d!) L_u1 L_u2 L_v1 … L_v(d-2) Vol. The
/// quadratic form Q = (2/d!) L_v1 … L_v(d-2) Vol is kept both as a polynomial
/// and as its Hessian matrix `quadratic`, so Q(u) = ½ uᵀ·quadratic·u = B(u,u)
/// and quadratic = 2·bilinear.
struct AfForms {
  Form bilinear;
  Form quadratic;
  Polynomial quadratic_polynomial;
};

AfForms af_forms(const Polynomial& volume_poly, const std::vector<Vector>& marked);
AfForms af_form(const ConvexFamily& fam);
AfForms co_af_form(const CoconvexFamily& fam);

Rational factorial(int n);

}  // namespace coaf

#endif  // COAF_FAMILY_HPP

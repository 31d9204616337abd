#ifndef COAF_COCONVEX_HPP
#define COAF_COCONVEX_HPP

#include "coaf/polytope.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace coaf {

/// Violations of the cone / coconvex-body invariants.
class GeometryError : public std::runtime_error {
 public:
  enum class Kind {
    NotStrictlyConvex,
    NotFullDimensional,
    ComplementNotInCone,
    ComplementNotCompact,
    EmptyInterior,
    ConeMismatch,
    InvalidTruncation,
    NonPositiveScale,
  };

  GeometryError(Kind kind, const std::string& what);
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

const char* to_string(GeometryError::Kind kind);

/// Strictly convex, full-dimensional polyhedral cone with apex 0.
///
/// Carries a certificate xi with xi·r > 0 for every generator r.
class Cone {
 public:
  Eigen::Index dim() const { return body_.dim(); }
  /// Extreme rays as primitive integer vectors, sorted lexicographically.
  const std::vector<Vector>& rays() const { return body_.rays(); }
  const Vector& xi() const { return xi_; }
  /// The cone as the polyhedron {0} + cone(rays).
  const Polyhedron& polyhedron() const { return body_; }

  /// Whether xi·r > 0 for every extreme ray.
  bool is_interior_functional(const Vector& xi) const;

  /// Same cone; the certificates may differ.
  friend bool operator==(const Cone& a, const Cone& b) { return a.body_ == b.body_; }

 private:
  Cone(Polyhedron body, Vector xi) : body_(std::move(body)), xi_(std::move(xi)) {}
  friend Cone make_cone(const std::vector<Vector>&, const std::optional<Vector>&);

  Polyhedron body_;
  Vector xi_;
};

/// Builds a cone from generators. When `xi` is omitted the certificate is the
/// primitive integer sum of the extreme rays of the dual cone.
Cone make_cone(const std::vector<Vector>& rays, const std::optional<Vector>& xi = std::nullopt);

/// The truncating halfspace W(t) = { x : xi·x ≤ t }.
struct Truncation {
  Vector xi;
  Rational t;

  Halfspace halfspace() const { return {xi, t}; }
};

/// A compact C-coconvex body A, stored through its convex complement
/// K = closure(C ∖ A). A itself is never materialized.
class CoconvexBody {
 public:
  const Cone& cone() const { return cone_; }
  const Polyhedron& complement() const { return complement_; }
  Eigen::Index dim() const { return cone_.dim(); }

  /// max xi·v over the complement's vertices; A ⊆ W(t) for every t above it.
  Rational threshold(const Vector& xi) const;
  /// Truncation along the cone certificate at threshold + 1.
  Truncation default_truncation() const;

  friend bool operator==(const CoconvexBody& a, const CoconvexBody& b) {
    return a.cone_ == b.cone_ && a.complement_ == b.complement_;
  }

 private:
  CoconvexBody(Cone cone, Polyhedron complement) : cone_(std::move(cone)), complement_(std::move(complement)) {}
  friend CoconvexBody make_coconvex(const Cone&, const Polyhedron&);
  friend CoconvexBody co_scale(const Rational&, const CoconvexBody&);

  Cone cone_;
  Polyhedron complement_;
};

/// Validates K ⊆ C, compactness of C ∖ K and a positive volume of A.
CoconvexBody make_coconvex(const Cone& cone, const Polyhedron& complement);

/// A ⊕ B: the body whose complement is the Minkowski sum of the complements.
CoconvexBody co_sum(const CoconvexBody& a, const CoconvexBody& b);

/// λA for λ > 0 (the complement is scaled by λ).
CoconvexBody co_scale(const Rational& factor, const CoconvexBody& body);

/// Vol(C ∩ W(t)) − Vol(K ∩ W(t)); synthesizes the default truncation when omitted.
Rational co_volume(const CoconvexBody& body, const std::optional<Truncation>& trunc = std::nullopt);

/// Vol(C ∩ W(1)) for an interior functional xi; Vol(C ∩ W(t)) = c·t^d.
Rational sector_constant(const Cone& cone, const Vector& xi);

}  // namespace coaf

#endif  // COAF_COCONVEX_HPP

#include "coaf/coconvex.hpp"

#include "coaf/double_description.hpp"
#include "coaf/linalg.hpp"

#include <algorithm>

namespace coaf {

GeometryError::GeometryError(Kind kind, const std::string& what)
    : std::runtime_error(std::string(coaf::to_string(kind)) + ": " + what), kind_(kind) {}

const char* to_string(GeometryError::Kind kind) {
  switch (kind) {
    case GeometryError::Kind::NotStrictlyConvex: return "NotStrictlyConvex";
    case GeometryError::Kind::NotFullDimensional: return "NotFullDimensional";
    case GeometryError::Kind::ComplementNotInCone: return "ComplementNotInCone";
    case GeometryError::Kind::ComplementNotCompact: return "ComplementNotCompact";
    case GeometryError::Kind::EmptyInterior: return "EmptyInterior";
    case GeometryError::Kind::ConeMismatch: return "ConeMismatch";
    case GeometryError::Kind::InvalidTruncation: return "InvalidTruncation";
    case GeometryError::Kind::NonPositiveScale: return "NonPositiveScale";
  }
  return "GeometryError";
}

bool Cone::is_interior_functional(const Vector& xi) const {
  if (xi.size() != dim()) return false;
  for (const auto& r : rays()) {
    if (xi.dot(r) <= 0) return false;
  }
  return true;
}

Cone make_cone(const std::vector<Vector>& rays, const std::optional<Vector>& xi) {
  using Kind = GeometryError::Kind;
  if (rays.empty()) throw InputError("make_cone: no generators");
  const Eigen::Index d = rays.front().size();
  for (const auto& r : rays) {
    if (r.size() != d) throw InputError("make_cone: dimension mismatch");
  }
  if (rank(rays, d) != d) throw GeometryError(Kind::NotFullDimensional, "generators do not span the space");

  // Rays span R^d, so the dual cone is pointed; its extreme rays sum to an
  // interior point of the dual exactly when the cone contains no line.
  const ConeGenerators dual = cone_generators(rays, d);
  Vector certificate = Vector::Zero(d);
  for (const auto& y : dual.rays) certificate += y;
  certificate = primitive(certificate);
  for (const auto& r : rays) {
    if (certificate.dot(r) <= 0) throw GeometryError(Kind::NotStrictlyConvex, "cone contains a line");
  }

  Polyhedron body = convex_hull({Vector::Zero(d)}, rays);
  Cone cone(std::move(body), certificate);
  if (xi) {
    if (!cone.is_interior_functional(*xi)) throw InputError("make_cone: xi is not strictly positive on the cone");
    cone.xi_ = *xi;
  }
  return cone;
}

Rational CoconvexBody::threshold(const Vector& xi) const {
  Rational best = xi.dot(complement_.vertices().front());
  for (const auto& v : complement_.vertices()) best = std::max(best, Rational(xi.dot(v)));
  return best;
}

Truncation CoconvexBody::default_truncation() const {
  return {cone_.xi(), threshold(cone_.xi()) + 1};
}

CoconvexBody make_coconvex(const Cone& cone, const Polyhedron& complement) {
  using Kind = GeometryError::Kind;
  if (complement.dim() != cone.dim()) throw InputError("make_coconvex: dimension mismatch");
  if (complement.is_empty()) throw GeometryError(Kind::ComplementNotCompact, "empty complement");
  if (!contains(cone.polyhedron(), complement)) {
    throw GeometryError(Kind::ComplementNotInCone, "complement is not contained in the cone");
  }
  const auto& krays = complement.rays();
  if (krays.size() != cone.rays().size() ||
      !std::equal(krays.begin(), krays.end(), cone.rays().begin(), [](const Vector& a, const Vector& b) { return equal(a, b); })) {
    throw GeometryError(Kind::ComplementNotCompact, "recession cone of the complement differs from the cone");
  }
  // C ∩ {xi ≥ t} ⊆ K for large t iff no facet of K parallel to an extreme ray
  // of C separates that ray from the origin side.
  for (const auto& h : to_halfspaces(complement)) {
    if (h.bound >= 0) continue;
    for (const auto& r : cone.rays()) {
      if (h.normal.dot(r) == 0) {
        throw GeometryError(Kind::ComplementNotCompact, "complement misses a neighbourhood of ray " + to_string(r));
      }
    }
  }
  CoconvexBody body(cone, complement);
  if (co_volume(body) <= 0) throw GeometryError(Kind::EmptyInterior, "coconvex body has zero volume");
  return body;
}

CoconvexBody co_sum(const CoconvexBody& a, const CoconvexBody& b) {
  if (!(a.cone() == b.cone())) throw GeometryError(GeometryError::Kind::ConeMismatch, "co_sum over different cones");
  return make_coconvex(a.cone(), minkowski_sum(a.complement(), b.complement()));
}

CoconvexBody co_scale(const Rational& factor, const CoconvexBody& body) {
  if (factor <= 0) throw GeometryError(GeometryError::Kind::NonPositiveScale, "scale factor must be positive");
  return CoconvexBody(body.cone(), scale(body.complement(), factor));
}

Rational co_volume(const CoconvexBody& body, const std::optional<Truncation>& trunc) {
  const Truncation tr = trunc ? *trunc : body.default_truncation();
  if (!body.cone().is_interior_functional(tr.xi)) {
    throw GeometryError(GeometryError::Kind::InvalidTruncation, "xi is not strictly positive on the cone");
  }
  if (tr.t <= body.threshold(tr.xi)) {
    throw GeometryError(GeometryError::Kind::InvalidTruncation,
                        "t = " + to_string(tr.t) + " does not exceed the complement threshold");
  }
  const Halfspace w = tr.halfspace();
  return volume(clip(body.cone().polyhedron(), w)) - volume(clip(body.complement(), w));
}

Rational sector_constant(const Cone& cone, const Vector& xi) {
  if (!cone.is_interior_functional(xi)) {
    throw GeometryError(GeometryError::Kind::InvalidTruncation, "xi is not strictly positive on the cone");
  }
  return volume(clip(cone.polyhedron(), {xi, 1}));
}

}  // namespace coaf

#ifndef COAF_POLYTOPE_HPP
#define COAF_POLYTOPE_HPP

#include "coaf/rational.hpp"

#include <boost/dynamic_bitset.hpp>

#include <memory>
#include <mutex>
#include <vector>

namespace coaf {

using Point = Vector;

/// The closed halfspace { x : normal·x ≤ bound }.
struct Halfspace {
  Vector normal;
  Rational bound;

  bool contains(const Point& x) const;
  friend bool operator==(const Halfspace& a, const Halfspace& b);
};

/// Facet data of a polyhedron, in homogenized form y = (y0, y'):
/// equations y0 + y'·x = 0 span the affine hull, facets y0 + y'·x ≥ 0.
struct FacetData {
  std::vector<Vector> equations;
  std::vector<Vector> facets;
  /// Facet-vertex incidences, one bitset over vertex indices per facet.
  std::vector<boost::dynamic_bitset<>> incidence;
};

/// Pointed polyhedron conv(vertices) + cone(rays) with exact rational data.
///
/// Always canonical: vertices are exactly the extreme points, sorted
/// lexicographically; rays are the extreme rays of the recession cone as
/// primitive integer vectors, sorted lexicographically. Structural equality is
/// therefore set equality. Values are immutable and safe to share across threads.
class Polyhedron {
 public:
  /// The empty subset of R^dim.
  static Polyhedron empty(Eigen::Index dim);

  Eigen::Index dim() const { return state_->dim; }
  const std::vector<Point>& vertices() const { return state_->vertices; }
  const std::vector<Vector>& rays() const { return state_->rays; }

  bool is_empty() const { return state_->vertices.empty(); }
  bool is_bounded() const { return state_->rays.empty(); }
  /// Dimension of the affine hull (-1 when empty).
  Eigen::Index affine_dim() const;
  bool is_full_dimensional() const { return affine_dim() == dim(); }

  /// Irredundant facet description, computed once on first use.
  const FacetData& facet_data() const;

  friend bool operator==(const Polyhedron& a, const Polyhedron& b);

 private:
  struct State {
    Eigen::Index dim = 0;
    std::vector<Point> vertices;
    std::vector<Vector> rays;
    mutable std::once_flag facets_once;
    mutable FacetData facets;
  };

  explicit Polyhedron(std::shared_ptr<const State> state) : state_(std::move(state)) {}
  static Polyhedron from_canonical(Eigen::Index dim, std::vector<Point> vertices, std::vector<Vector> rays);

  friend Polyhedron convex_hull(const std::vector<Point>&, const std::vector<Vector>&);
  friend Polyhedron translate(const Polyhedron&, const Vector&);
  friend Polyhedron scale(const Polyhedron&, const Rational&);

  std::shared_ptr<const State> state_;
};

/// Canonical V-representation of conv(points) + cone(rays).
/// Throws InputError on an empty point set, mismatched dimensions, or when the
/// result would contain a line.
Polyhedron convex_hull(const std::vector<Point>& points, const std::vector<Vector>& rays = {});

Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q);

Polyhedron translate(const Polyhedron& p, const Vector& offset);

/// λ·P for λ > 0.
Polyhedron scale(const Polyhedron& p, const Rational& factor);

/// Exact d-volume of a bounded polyhedron; 0 when not full-dimensional.
Rational volume(const Polyhedron& p);

/// P ∩ H. An empty intersection yields Polyhedron::empty.
Polyhedron clip(const Polyhedron& p, const Halfspace& h);

/// Irredundant H-representation. Affine-hull equations appear as pairs of
/// opposite halfspaces. Facets are primitive integer (normal, bound) vectors.
std::vector<Halfspace> to_halfspaces(const Polyhedron& p);

/// V-representation of the intersection of halfspaces in R^dim.
/// An infeasible system yields Polyhedron::empty.
Polyhedron from_halfspaces(Eigen::Index dim, const std::vector<Halfspace>& halfspaces);

/// Q ⊆ P.
bool contains(const Polyhedron& p, const Polyhedron& q);

/// The axis-parallel box Π [lo_i, hi_i].
Polyhedron box(const Vector& lo, const Vector& hi);

}  // namespace coaf

#endif  // COAF_POLYTOPE_HPP

#include "coaf/polytope.hpp"

#include "coaf/double_description.hpp"
#include "coaf/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace coaf {

namespace {

using Bits = boost::dynamic_bitset<>;

Rational dot(const Vector& a, const Vector& b) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

Vector homogenize(const Rational& lead, const Vector& v) {
  Vector out(v.size() + 1);
  out[0] = lead;
  out.tail(v.size()) = v;
  return out;
}

struct HullCore {
  std::vector<bool> extreme;  // per input generator (points first, then rays)
  FacetData facets;           // incidence indexed by input point
};

// Facets and extreme generators of conv(points) + cone(rays) through the
// homogenized cone generated by (1, p) and (0, r).
HullCore hull_core(Eigen::Index dim, const std::vector<Point>& points, const std::vector<Vector>& rays) {
  const Eigen::Index m = dim + 1;
  std::vector<Vector> gens;
  gens.reserve(points.size() + rays.size());
  for (const auto& p : points) gens.push_back(homogenize(1, p));
  for (const auto& r : rays) gens.push_back(homogenize(0, r));

  const ConeGenerators polar = cone_generators(gens, m);
  {
    std::vector<Vector> all = polar.lineality;
    all.insert(all.end(), polar.rays.begin(), polar.rays.end());
    if (rank(all, m) != m) throw InputError("polyhedron contains a line");
  }

  HullCore core;
  core.extreme.assign(gens.size(), false);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    std::vector<Vector> normals = polar.lineality;
    for (std::size_t j = 0; j < polar.rays.size(); ++j) {
      if (polar.tight[j].test(g)) normals.push_back(polar.rays[j]);
    }
    core.extreme[g] = rank(normals, m) == m - 1;
  }

  if (!polar.lineality.empty()) {
    Matrix eq(static_cast<Eigen::Index>(polar.lineality.size()), m);
    for (std::size_t i = 0; i < polar.lineality.size(); ++i) {
      eq.row(static_cast<Eigen::Index>(i)) = polar.lineality[i].transpose();
    }
    const auto pivots = rref(eq);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      core.facets.equations.push_back(primitive(Vector(eq.row(static_cast<Eigen::Index>(i)).transpose())));
    }
  }

  struct Entry {
    Vector facet;
    Bits incidence;
  };
  std::vector<Entry> entries;
  for (std::size_t j = 0; j < polar.rays.size(); ++j) {
    Bits inc(points.size());
    for (std::size_t p = 0; p < points.size(); ++p) {
      if (polar.tight[j].test(p)) inc.set(p);
    }
    // A facet of the homogenized cone that touches no point is the face at
    // infinity; it is not a facet of the polyhedron.
    if (inc.none()) continue;
    entries.push_back({polar.rays[j], std::move(inc)});
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return lex_less(a.facet, b.facet); });
  for (auto& e : entries) {
    core.facets.facets.push_back(std::move(e.facet));
    core.facets.incidence.push_back(std::move(e.incidence));
  }
  return core;
}

void check_dims(Eigen::Index dim, const std::vector<Vector>& vs) {
  for (const auto& v : vs) {
    if (v.size() != dim) throw InputError("dimension mismatch");
  }
}

}  // namespace

bool Halfspace::contains(const Point& x) const { return dot(normal, x) <= bound; }

bool operator==(const Halfspace& a, const Halfspace& b) {
  return equal(a.normal, b.normal) && a.bound == b.bound;
}

Polyhedron Polyhedron::empty(Eigen::Index dim) {
  auto state = std::make_shared<State>();
  state->dim = dim;
  return Polyhedron(std::move(state));
}

Polyhedron Polyhedron::from_canonical(Eigen::Index dim, std::vector<Point> vertices, std::vector<Vector> rays) {
  auto state = std::make_shared<State>();
  state->dim = dim;
  state->vertices = std::move(vertices);
  state->rays = std::move(rays);
  return Polyhedron(std::move(state));
}

Eigen::Index Polyhedron::affine_dim() const {
  if (is_empty()) return -1;
  std::vector<Vector> dirs;
  for (std::size_t i = 1; i < vertices().size(); ++i) dirs.push_back(vertices()[i] - vertices()[0]);
  dirs.insert(dirs.end(), rays().begin(), rays().end());
  return rank(dirs, dim());
}

const FacetData& Polyhedron::facet_data() const {
  std::call_once(state_->facets_once, [this] {
    if (is_empty()) return;
    state_->facets = hull_core(dim(), vertices(), rays()).facets;
  });
  return state_->facets;
}

bool operator==(const Polyhedron& a, const Polyhedron& b) {
  if (a.dim() != b.dim() || a.vertices().size() != b.vertices().size() || a.rays().size() != b.rays().size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.vertices().size(); ++i) {
    if (!equal(a.vertices()[i], b.vertices()[i])) return false;
  }
  for (std::size_t i = 0; i < a.rays().size(); ++i) {
    if (!equal(a.rays()[i], b.rays()[i])) return false;
  }
  return true;
}

Polyhedron convex_hull(const std::vector<Point>& points, const std::vector<Vector>& rays) {
  if (points.empty()) throw InputError("convex hull of an empty point set");
  const Eigen::Index dim = points.front().size();
  if (dim < 1) throw InputError("dimension must be at least 1");
  check_dims(dim, points);
  check_dims(dim, rays);

  std::vector<Point> pts = points;
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end(), equal), pts.end());
  std::vector<Vector> dirs;
  for (const auto& r : rays) {
    if (!r.isZero()) dirs.push_back(primitive(r));
  }
  std::sort(dirs.begin(), dirs.end(), lex_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end(), equal), dirs.end());

  HullCore core = hull_core(dim, pts, dirs);

  std::vector<Point> vertices;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (core.extreme[i]) {
      vertices.push_back(pts[i]);
      keep.push_back(i);
    }
  }
  std::vector<Vector> extreme_rays;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    if (core.extreme[pts.size() + i]) extreme_rays.push_back(dirs[i]);
  }
  for (auto& inc : core.facets.incidence) {
    Bits remapped(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) {
      if (inc.test(keep[k])) remapped.set(k);
    }
    inc = std::move(remapped);
  }

  Polyhedron result = Polyhedron::from_canonical(dim, std::move(vertices), std::move(extreme_rays));
  std::call_once(result.state_->facets_once, [&] { result.state_->facets = std::move(core.facets); });
  return result;
}

Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q) {
  if (p.dim() != q.dim()) throw InputError("minkowski_sum: dimension mismatch");
  if (p.is_empty() || q.is_empty()) return Polyhedron::empty(p.dim());
  std::vector<Point> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  }
  std::vector<Vector> rays = p.rays();
  rays.insert(rays.end(), q.rays().begin(), q.rays().end());
  return convex_hull(sums, rays);
}

Polyhedron translate(const Polyhedron& p, const Vector& offset) {
  if (offset.size() != p.dim()) throw InputError("translate: dimension mismatch");
  std::vector<Point> vs;
  vs.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) vs.push_back(v + offset);
  return Polyhedron::from_canonical(p.dim(), std::move(vs), p.rays());
}

Polyhedron scale(const Polyhedron& p, const Rational& factor) {
  if (factor <= 0) throw InputError("scale: factor must be positive");
  std::vector<Point> vs;
  vs.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) vs.push_back(factor * v);
  return Polyhedron::from_canonical(p.dim(), std::move(vs), p.rays());
}

namespace {

// Pulling triangulation of the face with vertex set `face` and dimension k.
// Its facets are the k-1 dimensional intersections with facets of the polytope.
void triangulate(const std::vector<Point>& vertices, const std::vector<Bits>& facets, const Bits& face,
                 Eigen::Index k, std::vector<std::size_t>& prefix, std::vector<std::vector<std::size_t>>& out) {
  const std::size_t apex = face.find_first();
  if (k == 0) {
    prefix.push_back(apex);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  std::vector<Bits> subfaces;
  for (const auto& f : facets) {
    Bits sub = face & f;
    if (sub == face || sub.count() < static_cast<std::size_t>(k) || sub.test(apex)) continue;
    if (std::find(subfaces.begin(), subfaces.end(), sub) != subfaces.end()) continue;
    std::vector<Point> pts;
    for (auto i = sub.find_first(); i != Bits::npos; i = sub.find_next(i)) pts.push_back(vertices[i]);
    if (affine_dimension(pts) != k - 1) continue;
    subfaces.push_back(std::move(sub));
  }
  prefix.push_back(apex);
  for (const auto& sub : subfaces) triangulate(vertices, facets, sub, k - 1, prefix, out);
  prefix.pop_back();
}

}  // namespace

Rational volume(const Polyhedron& p) {
  if (!p.is_bounded()) throw InputError("volume of an unbounded polyhedron");
  if (p.is_empty() || !p.is_full_dimensional()) return 0;
  const Eigen::Index d = p.dim();
  const auto& verts = p.vertices();
  const FacetData& fd = p.facet_data();

  Bits all(verts.size());
  all.set();
  std::vector<std::size_t> prefix;
  std::vector<std::vector<std::size_t>> simplices;
  triangulate(verts, fd.incidence, all, d, prefix, simplices);

  Rational total = 0;
  Matrix m(d, d);
  for (const auto& s : simplices) {
    for (Eigen::Index i = 0; i < d; ++i) m.col(i) = verts[s[static_cast<std::size_t>(i) + 1]] - verts[s[0]];
    total += abs(determinant(m));
  }
  Rational fact = 1;
  for (Eigen::Index i = 2; i <= d; ++i) fact *= i;
  return total / fact;
}

std::vector<Halfspace> to_halfspaces(const Polyhedron& p) {
  if (p.is_empty()) throw InputError("to_halfspaces of the empty polyhedron");
  const FacetData& fd = p.facet_data();
  const Eigen::Index d = p.dim();
  std::vector<Halfspace> out;
  for (const auto& e : fd.equations) {
    Vector tail = e.tail(d);
    out.push_back({-tail, e[0]});
    out.push_back({tail, -e[0]});
  }
  for (const auto& f : fd.facets) out.push_back({-Vector(f.tail(d)), f[0]});
  return out;
}

Polyhedron from_halfspaces(Eigen::Index dim, const std::vector<Halfspace>& halfspaces) {
  std::vector<Vector> constraints;
  constraints.reserve(halfspaces.size() + 1);
  for (const auto& h : halfspaces) {
    if (h.normal.size() != dim) throw InputError("halfspace dimension mismatch");
    constraints.push_back(homogenize(h.bound, -h.normal));
  }
  Vector positive = Vector::Zero(dim + 1);
  positive[0] = 1;
  constraints.push_back(positive);

  const ConeGenerators gens = cone_generators(constraints, dim + 1);
  std::vector<Point> vertices;
  std::vector<Vector> rays;
  for (const auto& r : gens.rays) {
    if (r[0] > 0) {
      vertices.push_back(Vector(r.tail(dim)) / r[0]);
    } else {
      rays.push_back(r.tail(dim));
    }
  }
  if (vertices.empty()) return Polyhedron::empty(dim);
  for (const auto& l : gens.lineality) {
    if (!l.tail(dim).isZero()) throw InputError("halfspace system contains a line");
  }
  return convex_hull(vertices, rays);
}

Polyhedron clip(const Polyhedron& p, const Halfspace& h) {
  if (h.normal.size() != p.dim()) throw InputError("clip: dimension mismatch");
  if (p.is_empty()) return p;
  // Fast paths: the halfspace contains P, or misses it entirely.
  bool all_inside = true;
  for (const auto& r : p.rays()) {
    if (dot(h.normal, r) > 0) all_inside = false;
  }
  for (const auto& v : p.vertices()) {
    if (!h.contains(v)) all_inside = false;
  }
  if (all_inside) return p;
  auto hs = to_halfspaces(p);
  hs.push_back(h);
  return from_halfspaces(p.dim(), hs);
}

bool contains(const Polyhedron& p, const Polyhedron& q) {
  if (p.dim() != q.dim()) throw InputError("contains: dimension mismatch");
  if (q.is_empty()) return true;
  if (p.is_empty()) return false;
  for (const auto& h : to_halfspaces(p)) {
    for (const auto& v : q.vertices()) {
      if (!h.contains(v)) return false;
    }
    for (const auto& r : q.rays()) {
      if (dot(h.normal, r) > 0) return false;
    }
  }
  return true;
}

Polyhedron box(const Vector& lo, const Vector& hi) {
  if (lo.size() != hi.size()) throw InputError("box: dimension mismatch");
  const Eigen::Index d = lo.size();
  std::vector<Point> corners;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    Point c(d);
    for (Eigen::Index i = 0; i < d; ++i) c[i] = (mask >> i) & 1U ? hi[i] : lo[i];
    corners.push_back(std::move(c));
  }
  return convex_hull(corners);
}

}  // namespace coaf

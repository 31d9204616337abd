#include "coaf/random.hpp"

#include "coaf/linalg.hpp"

namespace coaf {

namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<Vector> dual_rays(const Cone& cone) {
  std::vector<Vector> out;
  for (const auto& h : to_halfspaces(cone.polyhedron())) out.push_back(-h.normal);
  return out;
}

}  // namespace

SplitMix64 SplitMix64::stream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(mix(seed ^ mix(index + kGamma)));
}

std::uint64_t SplitMix64::next() {
  state_ += kGamma;
  return mix(state_);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
  const std::uint64_t limit = -n % n;  // 2^64 mod n
  while (true) {
    const std::uint64_t x = next();
    if (x >= limit) return x % n;
  }
}

std::int64_t SplitMix64::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rational SplitMix64::rational(std::int64_t bound) {
  const std::int64_t p = between(-bound, bound);
  const std::int64_t q = between(1, bound);
  return Rational(p, q);
}

Rational SplitMix64::positive_rational(std::int64_t bound) {
  const std::int64_t p = between(1, bound);
  const std::int64_t q = between(1, bound);
  return Rational(p, q);
}

Polyhedron gen_convex_body(SplitMix64& rng, Eigen::Index d, std::int64_t bound) {
  if (d < 1) throw InputError("gen_convex_body: d must be positive");
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const auto count = static_cast<std::size_t>(d + 1 + static_cast<Eigen::Index>(rng.below(3)));
    std::vector<Point> pts;
    for (std::size_t i = 0; i < count; ++i) {
      Point p(d);
      for (Eigen::Index k = 0; k < d; ++k) p[k] = rng.rational(bound);
      pts.push_back(std::move(p));
    }
    Polyhedron body = convex_hull(pts);
    if (body.is_full_dimensional() && body.vertices().size() <= kMaxVertices) return body;
  }
  throw GenerationError("gen_convex_body: resample budget exhausted");
}

Cone gen_cone(SplitMix64& rng, Eigen::Index d, std::int64_t bound) {
  if (d < 2) throw InputError("gen_cone: d must be at least 2");
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const Eigen::Index count = d + (d >= 3 ? static_cast<Eigen::Index>(rng.below(2)) : 0);
    std::vector<Vector> rays;
    for (Eigen::Index i = 0; i < count; ++i) {
      Vector r(d);
      // the last coordinate is positive, so e_d certifies strict convexity
      for (Eigen::Index k = 0; k + 1 < d; ++k) r[k] = rng.between(-bound, bound);
      r[d - 1] = rng.between(1, bound);
      rays.push_back(std::move(r));
    }
    if (rank(rays, d) < d) continue;
    Cone c = make_cone(rays);
    if (static_cast<Eigen::Index>(c.rays().size()) >= d) return c;
  }
  throw GenerationError("gen_cone: resample budget exhausted");
}

CoconvexBody gen_coconvex_body(SplitMix64& rng, const Cone& cone, std::int64_t bound) {
  const Eigen::Index d = cone.dim();
  const auto duals = dual_rays(cone);
  std::vector<Halfspace> cone_facets = to_halfspaces(cone.polyhedron());
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto hs = cone_facets;
    const int cuts = 1 + static_cast<int>(rng.below(3));
    for (int j = 0; j < cuts; ++j) {
      Vector xi = Vector::Zero(d);
      for (const auto& u : duals) xi += Rational(rng.between(1, bound)) * u;
      hs.push_back({-xi, -rng.positive_rational(bound)});
    }
    const Polyhedron k = from_halfspaces(d, hs);
    if (k.vertices().size() > kMaxVertices) continue;
    try {
      return make_coconvex(cone, k);
    } catch (const GeometryError&) {
      continue;
    }
  }
  throw GenerationError("gen_coconvex_body: resample budget exhausted");
}

Vector gen_positive_vector(SplitMix64& rng, int n, std::int64_t bound) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.positive_rational(bound);
  return v;
}

Vector gen_vector(SplitMix64& rng, int n, std::int64_t bound) {
  while (true) {
    Vector v(n);
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
      v[i] = rng.rational(bound);
      nonzero = nonzero || v[i] != 0;
    }
    if (nonzero) return v;
  }
}

ConvexFamily gen_convex_family(SplitMix64& rng, Eigen::Index d, int n, std::int64_t bound) {
  std::vector<Polyhedron> gens;
  for (int i = 0; i < n; ++i) gens.push_back(gen_convex_body(rng, d, bound));
  std::vector<Vector> marked;
  for (Eigen::Index i = 0; i + 2 < d; ++i) marked.push_back(gen_positive_vector(rng, n, bound));
  return make_convex_family(std::move(gens), std::move(marked));
}

CoconvexFamily gen_coconvex_family(SplitMix64& rng, Eigen::Index d, int n, std::int64_t bound) {
  const Cone cone = gen_cone(rng, d, bound);
  std::vector<CoconvexBody> gens;
  for (int i = 0; i < n; ++i) gens.push_back(gen_coconvex_body(rng, cone, bound));
  std::vector<Vector> marked;
  for (Eigen::Index i = 0; i + 2 < d; ++i) marked.push_back(gen_positive_vector(rng, n, bound));
  return make_coconvex_family(cone, std::move(gens), std::move(marked));
}

}  // namespace coaf

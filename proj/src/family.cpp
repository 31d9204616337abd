#include "coaf/family.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace coaf {

namespace {

void check_marked(const std::vector<Vector>& marked, int n, Eigen::Index d) {
  if (static_cast<Eigen::Index>(marked.size()) != std::max<Eigen::Index>(0, d - 2)) {
    throw InputError("family needs exactly d - 2 = " + std::to_string(std::max<Eigen::Index>(0, d - 2)) +
                     " marked points, got " + std::to_string(marked.size()));
  }
  for (const auto& v : marked) {
    if (v.size() != n) throw InputError("marked point has wrong length");
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (v[i] <= 0) throw InputError("marked point " + to_string(v) + " is not strictly positive");
    }
  }
}

void check_lambda(const Vector& lambda, int n) {
  if (lambda.size() != n) throw InputError("coefficient vector has wrong length");
  bool any = false;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (lambda[i] < 0) throw InputError("coefficients must be nonnegative: " + to_string(lambda));
    any = any || lambda[i] > 0;
  }
  if (!any) throw InputError("coefficient vector is zero");
}

// Memoized partial sums Σ c_i K_i for count vectors c.
class PartialSums {
 public:
  explicit PartialSums(const std::vector<Polyhedron>& generators) : gens_(generators) {}

  const Polyhedron& sum(const std::vector<int>& counts) {
    auto it = sums_.find(counts);
    if (it != sums_.end()) return it->second;
    std::size_t last = counts.size();
    while (last > 0 && counts[last - 1] == 0) --last;
    const Polyhedron& k = gens_[last - 1];
    auto prev = counts;
    --prev[last - 1];
    Polyhedron s = std::all_of(prev.begin(), prev.end(), [](int c) { return c == 0; })
                       ? k
                       : minkowski_sum(sum(prev), k);
    return sums_.emplace(counts, std::move(s)).first->second;
  }

  const Rational& vol(const std::vector<int>& counts) {
    auto it = vols_.find(counts);
    if (it != vols_.end()) return it->second;
    return vols_.emplace(counts, volume(sum(counts))).first->second;
  }

 private:
  const std::vector<Polyhedron>& gens_;
  std::map<std::vector<int>, Polyhedron> sums_;
  std::map<std::vector<int>, Rational> vols_;
};

Integer binomial(int n, int k) {
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Σ_{0 ≠ c ≤ a} Π C(a_i, c_i) (−1)^{d−|c|} Vol(Σ c_i K_i)  =  d!·MV(a).
Rational polarization(PartialSums& sums, const std::vector<int>& a, int d) {
  Rational total = 0;
  std::vector<int> c(a.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int size, Integer weight) -> void {
    if (i == a.size()) {
      if (size == 0) return;
      const Rational& v = sums.vol(c);
      if (v == 0) return;
      Rational term = Rational(weight) * v;
      total += ((d - size) % 2 == 0) ? term : -term;
      return;
    }
    for (int k = 0; k <= a[i]; ++k) {
      c[i] = k;
      self(self, i + 1, size + k, weight * binomial(a[i], k));
    }
    c[i] = 0;
  };
  rec(rec, 0, 0, Integer(1));
  return total;
}

void check_bodies(const std::vector<Polyhedron>& bodies) {
  if (bodies.empty()) throw InputError("no bodies");
  const Eigen::Index d = bodies.front().dim();
  for (const auto& b : bodies) {
    if (b.dim() != d) throw InputError("bodies have different dimensions");
    if (!b.is_bounded()) throw InputError("mixed volumes need bounded bodies");
    if (b.is_empty()) throw InputError("empty body");
  }
}

}  // namespace

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

ConvexFamily make_convex_family(std::vector<Polyhedron> generators, std::vector<Vector> marked) {
  check_bodies(generators);
  const Eigen::Index d = generators.front().dim();
  for (const auto& g : generators) {
    if (!g.is_full_dimensional()) throw InputError("family generators must be full-dimensional");
  }
  check_marked(marked, static_cast<int>(generators.size()), d);
  return {std::move(generators), std::move(marked)};
}

CoconvexFamily make_coconvex_family(const Cone& cone, std::vector<CoconvexBody> generators,
                                    std::vector<Vector> marked) {
  if (generators.empty()) throw InputError("coconvex family without generators");
  for (const auto& g : generators) {
    if (!(g.cone() == cone)) throw GeometryError(GeometryError::Kind::ConeMismatch, "generator over another cone");
  }
  check_marked(marked, static_cast<int>(generators.size()), cone.dim());
  return {cone, std::move(generators), std::move(marked)};
}

Polyhedron combination(const ConvexFamily& fam, const Vector& lambda) {
  check_lambda(lambda, fam.size());
  std::optional<Polyhedron> acc;
  for (int i = 0; i < fam.size(); ++i) {
    if (lambda[i] == 0) continue;
    Polyhedron term = scale(fam.generators[static_cast<std::size_t>(i)], lambda[i]);
    acc = acc ? minkowski_sum(*acc, term) : term;
  }
  return *acc;
}

CoconvexBody combination(const CoconvexFamily& fam, const Vector& lambda) {
  check_lambda(lambda, fam.size());
  std::optional<Polyhedron> acc;
  for (int i = 0; i < fam.size(); ++i) {
    if (lambda[i] == 0) continue;
    Polyhedron term = scale(fam.generators[static_cast<std::size_t>(i)].complement(), lambda[i]);
    acc = acc ? minkowski_sum(*acc, term) : term;
  }
  return make_coconvex(fam.cone, *acc);
}

Rational mixed_volume(const std::vector<Polyhedron>& bodies) {
  check_bodies(bodies);
  const auto d = static_cast<int>(bodies.front().dim());
  if (static_cast<int>(bodies.size()) != d) {
    throw InputError("mixed_volume needs exactly d = " + std::to_string(d) + " bodies");
  }
  PartialSums sums(bodies);
  return polarization(sums, std::vector<int>(bodies.size(), 1), d) / factorial(d);
}

Polynomial volume_polynomial(const std::vector<Polyhedron>& generators) {
  check_bodies(generators);
  const auto d = static_cast<int>(generators.front().dim());
  const auto n = static_cast<int>(generators.size());
  PartialSums sums(generators);
  Polynomial p(n, d);
  for (const auto& a : monomial_exponents(n, d)) {
    Rational a_fact = 1;
    for (int k : a) a_fact *= factorial(k);
    // coefficient = (d!/a!)·MV(a) = polarization(a)/a!
    p.add_term(a, polarization(sums, a, d) / a_fact);
  }
  return p;
}

Polynomial volume_polynomial(const ConvexFamily& fam) { return volume_polynomial(fam.generators); }

Polynomial co_volume_polynomial(const CoconvexFamily& fam) {
  const auto d = static_cast<int>(fam.dim());
  const int n = fam.size();
  const auto points = interpolation_points<Rational>(n, d);
  std::vector<Rational> values;
  values.reserve(points.size());
  for (const auto& lambda : points) values.push_back(co_volume(combination(fam, lambda)));
  return interpolate(n, d, points, values);
}

AfForms af_forms(const Polynomial& volume_poly, const std::vector<Vector>& marked) {
  const int d = volume_poly.degree();
  if (static_cast<int>(marked.size()) != std::max(0, d - 2)) {
    throw InputError("af_forms: need exactly d - 2 marked points");
  }
  Polynomial reduced = volume_poly;
  for (const auto& v : marked) reduced = directional_derivative(reduced, v);
  if (reduced.degree() != 2) throw InputError("af_forms: volume polynomial must have degree ≥ 2");
  Polynomial quadratic = (Rational(2) / factorial(d)) * reduced;
  Matrix h = hessian(quadratic);
  Matrix b = h / Rational(2);
  return {Form(std::move(b)), Form(std::move(h)), std::move(quadratic)};
}

AfForms af_form(const ConvexFamily& fam) { return af_forms(volume_polynomial(fam), fam.marked); }

AfForms co_af_form(const CoconvexFamily& fam) { return af_forms(co_volume_polynomial(fam), fam.marked); }

}  // namespace coaf

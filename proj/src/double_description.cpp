#include "coaf/double_description.hpp"

#include "coaf/linalg.hpp"

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

// Projects v onto the orthogonal complement of span(basis).
Vector project_out(const Vector& v, const std::vector<Vector>& basis) {
  if (basis.empty()) return v;
  const auto k = static_cast<Eigen::Index>(basis.size());
  Matrix gram(k, k);
  Vector rhs(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) gram(i, j) = dot(basis[i], basis[j]);
    rhs[i] = dot(basis[i], v);
  }
  const auto coeffs = solve(gram, rhs);
  Vector out = v;
  for (Eigen::Index i = 0; i < k; ++i) out -= (*coeffs)[i] * basis[i];
  return out;
}

}  // namespace

ConeGenerators cone_generators(const std::vector<Vector>& constraints, Eigen::Index dim) {
  const std::size_t m = constraints.size();
  std::vector<Vector> lineality;
  for (Eigen::Index i = 0; i < dim; ++i) {
    Vector e = Vector::Zero(dim);
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<Vector> rays;
  std::vector<Bits> tight;

  for (std::size_t k = 0; k < m; ++k) {
    const Vector& a = constraints[k];
    if (a.size() != dim) throw InputError("constraint dimension mismatch");

    // A lineality direction not orthogonal to a becomes a ray.
    std::size_t pick = lineality.size();
    for (std::size_t i = 0; i < lineality.size(); ++i) {
      if (dot(a, lineality[i]) != 0) {
        pick = i;
        break;
      }
    }
    if (pick < lineality.size()) {
      Vector l = lineality[pick];
      Rational al = dot(a, l);
      if (al < 0) {
        l = -l;
        al = -al;
      }
      std::vector<Vector> rest;
      for (std::size_t i = 0; i < lineality.size(); ++i) {
        if (i == pick) continue;
        Vector v = lineality[i] - (dot(a, lineality[i]) / al) * l;
        rest.push_back(primitive(v));
      }
      lineality = std::move(rest);
      for (std::size_t j = 0; j < rays.size(); ++j) {
        rays[j] = primitive(Vector(rays[j] - (dot(a, rays[j]) / al) * l));
        tight[j].resize(m);
        tight[j].set(k);
      }
      Bits z(m);
      for (std::size_t i = 0; i < k; ++i) z.set(i);
      rays.push_back(primitive(l));
      tight.push_back(std::move(z));
      continue;
    }

    std::vector<Rational> value(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Vector> next_rays;
    std::vector<Bits> next_tight;
    for (std::size_t j = 0; j < rays.size(); ++j) {
      tight[j].resize(m);
      value[j] = dot(a, rays[j]);
      if (value[j] > 0) pos.push_back(j);
      if (value[j] < 0) neg.push_back(j);
    }
    for (std::size_t j = 0; j < rays.size(); ++j) {
      if (value[j] < 0) continue;
      next_rays.push_back(rays[j]);
      Bits z = tight[j];
      if (value[j] == 0) z.set(k);
      next_tight.push_back(std::move(z));
    }
    // The face spanned by two adjacent rays has codimension 1 in the pointed
    // quotient cone, so they share at least (dim - |lineality| - 2) tight constraints.
    const auto min_common = static_cast<std::size_t>(
        std::max<Eigen::Index>(0, dim - static_cast<Eigen::Index>(lineality.size()) - 2));
    for (auto p : pos) {
      for (auto q : neg) {
        Bits common = tight[p] & tight[q];
        if (common.count() < min_common) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(tight[r])) adjacent = false;
        }
        if (!adjacent) continue;
        Vector combo = value[p] * rays[q] - value[q] * rays[p];
        common.set(k);
        next_rays.push_back(primitive(combo));
        next_tight.push_back(std::move(common));
      }
    }
    rays = std::move(next_rays);
    tight = std::move(next_tight);
  }

  ConeGenerators out;
  for (auto& t : tight) t.resize(m);
  if (!lineality.empty()) {
    for (auto& r : rays) r = primitive(project_out(r, lineality));
  }
  out.lineality = std::move(lineality);
  out.rays = std::move(rays);
  out.tight = std::move(tight);
  return out;
}

}  // namespace coaf

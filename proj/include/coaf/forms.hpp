#ifndef COAF_FORMS_HPP
#define COAF_FORMS_HPP

#include "coaf/rational.hpp"

#include <string>
#include <vector>

namespace coaf {

/// Exact symmetric matrix, read as the bilinear form (u, v) ↦ uᵀ M v.
template <typename Scalar>
class SymmetricForm {
 public:
  explicit SymmetricForm(MatrixX<Scalar> m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw InputError("symmetric form: matrix is not square");
    for (Eigen::Index i = 0; i < m_.rows(); ++i) {
      for (Eigen::Index j = i + 1; j < m_.cols(); ++j) {
        if (m_(i, j) != m_(j, i)) throw InputError("symmetric form: matrix is not symmetric");
      }
    }
  }

  Eigen::Index size() const { return m_.rows(); }
  const MatrixX<Scalar>& matrix() const { return m_; }
  const Scalar& operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  Scalar apply(const VectorX<Scalar>& u, const VectorX<Scalar>& v) const {
    if (u.size() != size() || v.size() != size()) throw InputError("symmetric form: vector has wrong length");
    Scalar s(0);
    for (Eigen::Index i = 0; i < size(); ++i) {
      if (u[i] == Scalar(0)) continue;
      for (Eigen::Index j = 0; j < size(); ++j) {
        if (v[j] != Scalar(0) && m_(i, j) != Scalar(0)) s += u[i] * m_(i, j) * v[j];
      }
    }
    return s;
  }
  Scalar apply(const VectorX<Scalar>& u) const { return apply(u, u); }

  friend bool operator==(const SymmetricForm& a, const SymmetricForm& b) {
    if (a.size() != b.size()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      for (Eigen::Index j = 0; j < a.size(); ++j) {
        if (a.m_(i, j) != b.m_(i, j)) return false;
      }
    }
    return true;
  }

 private:
  MatrixX<Scalar> m_;
};

/// Inertia (positives, negatives, zeros) of a real symmetric form.
struct Signature {
  int pos = 0;
  int neg = 0;
  int zero = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

inline std::string to_string(const Signature& s) {
  return "(" + std::to_string(s.pos) + "," + std::to_string(s.neg) + "," + std::to_string(s.zero) + ")";
}

/// Exact signature by Lagrange's congruence reduction.
///
/// Pivots on the first nonzero diagonal entry; when the remaining diagonal is
/// zero but some entry M(i,j) is not, the basis change e_i ← e_i + e_j makes
/// the diagonal entry 2·M(i,j) nonzero. Sylvester's law of inertia makes the
/// result independent of these choices.
template <typename Scalar>
Signature signature(const SymmetricForm<Scalar>& form) {
  MatrixX<Scalar> m = form.matrix();
  std::vector<Eigen::Index> active(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) active[static_cast<std::size_t>(i)] = i;
  Signature sig;
  while (!active.empty()) {
    std::size_t pivot = active.size();
    for (std::size_t a = 0; a < active.size(); ++a) {
      if (m(active[a], active[a]) != Scalar(0)) {
        pivot = a;
        break;
      }
    }
    if (pivot == active.size()) {
      bool found = false;
      for (std::size_t a = 0; a < active.size() && !found; ++a) {
        for (std::size_t b = a + 1; b < active.size() && !found; ++b) {
          const Eigen::Index i = active[a], j = active[b];
          if (m(i, j) == Scalar(0)) continue;
          // congruence by e_i ← e_i + e_j
          for (Eigen::Index k : active) m(i, k) += m(j, k);
          for (Eigen::Index k : active) m(k, i) += m(k, j);
          pivot = a;
          found = true;
        }
      }
      if (!found) {
        sig.zero += static_cast<int>(active.size());
        break;
      }
    }
    const Eigen::Index p = active[pivot];
    const Scalar d = m(p, p);
    if (d > Scalar(0)) {
      ++sig.pos;
    } else {
      ++sig.neg;
    }
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot));
    for (Eigen::Index i : active) {
      if (m(i, p) == Scalar(0)) continue;
      const Scalar f = m(i, p) / d;
      for (Eigen::Index j : active) m(i, j) -= f * m(p, j);
    }
  }
  return sig;
}

/// B(u,v)² ≤ B(u,u)·B(v,v), compared exactly.
template <typename Scalar>
bool cs_check(const SymmetricForm<Scalar>& b, const VectorX<Scalar>& u, const VectorX<Scalar>& v) {
  const Scalar uv = b.apply(u, v);
  return uv * uv <= b.apply(u) * b.apply(v);
}

/// B(u,v)² ≥ B(u,u)·B(v,v); requires B(v,v) > 0.
template <typename Scalar>
bool reversed_cs_check(const SymmetricForm<Scalar>& b, const VectorX<Scalar>& u, const VectorX<Scalar>& v) {
  const Scalar vv = b.apply(v);
  if (vv <= Scalar(0)) throw InputError("reversed_cs_check: requires B(v,v) > 0");
  const Scalar uv = b.apply(u, v);
  return uv * uv >= b.apply(u) * vv;
}

using Form = SymmetricForm<Rational>;

}  // namespace coaf

#endif  // COAF_FORMS_HPP

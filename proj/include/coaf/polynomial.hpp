#ifndef COAF_POLYNOMIAL_HPP
#define COAF_POLYNOMIAL_HPP

#include "coaf/linalg.hpp"
#include "coaf/rational.hpp"

#include <map>
#include <numeric>
#include <vector>

namespace coaf {

/// Homogeneous polynomial in `nvars` variables with exact coefficients.
///
/// Terms are kept in a sparse map from exponent vectors (each summing to the
/// degree) to nonzero coefficients.
template <typename Scalar>
class HomogeneousPolynomial {
 public:
  using Exponent = std::vector<int>;

  HomogeneousPolynomial(int nvars, int degree) : nvars_(nvars), degree_(degree) {
    if (nvars < 1 || degree < 0) throw InputError("polynomial: need nvars ≥ 1 and degree ≥ 0");
  }

  /// Σ coeffs[i] x_i.
  static HomogeneousPolynomial linear_form(const VectorX<Scalar>& coeffs) {
    HomogeneousPolynomial p(static_cast<int>(coeffs.size()), 1);
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
      Exponent e(static_cast<std::size_t>(coeffs.size()), 0);
      e[static_cast<std::size_t>(i)] = 1;
      p.add_term(e, coeffs[i]);
    }
    return p;
  }

  /// The constant 1 viewed as a degree-0 polynomial in nvars variables.
  static HomogeneousPolynomial one(int nvars) {
    HomogeneousPolynomial p(nvars, 0);
    p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), Scalar(1));
    return p;
  }

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const std::map<Exponent, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(const Exponent& e, const Scalar& c) {
    if (static_cast<int>(e.size()) != nvars_) throw InputError("polynomial: exponent length mismatch");
    if (std::accumulate(e.begin(), e.end(), 0) != degree_) throw InputError("polynomial: term of wrong degree");
    for (int a : e) {
      if (a < 0) throw InputError("polynomial: negative exponent");
    }
    if (c == Scalar(0)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Scalar(0)) terms_.erase(it);
    }
  }

  Scalar evaluate(const VectorX<Scalar>& x) const {
    if (x.size() != nvars_) throw InputError("polynomial: point has wrong length");
    Scalar total(0);
    for (const auto& [e, c] : terms_) {
      Scalar term = c;
      for (int i = 0; i < nvars_; ++i) {
        for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) term *= x[i];
      }
      total += term;
    }
    return total;
  }

  HomogeneousPolynomial& operator+=(const HomogeneousPolynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  HomogeneousPolynomial& operator-=(const HomogeneousPolynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  HomogeneousPolynomial& operator*=(const Scalar& s) {
    if (s == Scalar(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend HomogeneousPolynomial operator+(HomogeneousPolynomial a, const HomogeneousPolynomial& b) { return a += b; }
  friend HomogeneousPolynomial operator-(HomogeneousPolynomial a, const HomogeneousPolynomial& b) { return a -= b; }
  friend HomogeneousPolynomial operator*(const Scalar& s, HomogeneousPolynomial p) { return p *= s; }

  friend HomogeneousPolynomial operator*(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
    if (a.nvars_ != b.nvars_) throw InputError("polynomial: variable count mismatch");
    HomogeneousPolynomial out(a.nvars_, a.degree_ + b.degree_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const HomogeneousPolynomial& a, const HomogeneousPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const HomogeneousPolynomial& o) const {
    if (o.nvars_ != nvars_ || o.degree_ != degree_) throw InputError("polynomial: incompatible operands");
  }

  int nvars_;
  int degree_;
  std::map<Exponent, Scalar> terms_;
};

/// Directional derivative L_v P = Σ v_i ∂P/∂x_i.
template <typename Scalar>
HomogeneousPolynomial<Scalar> directional_derivative(const HomogeneousPolynomial<Scalar>& p,
                                                     const VectorX<Scalar>& v) {
  if (v.size() != p.nvars()) throw InputError("directional_derivative: direction has wrong length");
  if (p.degree() == 0) return HomogeneousPolynomial<Scalar>(p.nvars(), 0);
  HomogeneousPolynomial<Scalar> out(p.nvars(), p.degree() - 1);
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < p.nvars(); ++i) {
      const int a = e[static_cast<std::size_t>(i)];
      if (a == 0 || v[i] == Scalar(0)) continue;
      auto lowered = e;
      --lowered[static_cast<std::size_t>(i)];
      out.add_term(lowered, c * Scalar(a) * v[i]);
    }
  }
  return out;
}

/// Hessian matrix of a quadratic form.
template <typename Scalar>
MatrixX<Scalar> hessian(const HomogeneousPolynomial<Scalar>& q) {
  if (q.degree() != 2) throw InputError("hessian: polynomial is not quadratic");
  const int n = q.nvars();
  MatrixX<Scalar> h = MatrixX<Scalar>::Zero(n, n);
  for (const auto& [e, c] : q.terms()) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) idx.push_back(i);
    }
    if (idx[0] == idx[1]) {
      h(idx[0], idx[0]) += Scalar(2) * c;
    } else {
      h(idx[0], idx[1]) += c;
      h(idx[1], idx[0]) += c;
    }
  }
  return h;
}

/// P(M y): substitutes x = M y, where M is nvars × m. The result has m variables.
template <typename Scalar>
HomogeneousPolynomial<Scalar> substitute_linear(const HomogeneousPolynomial<Scalar>& p, const MatrixX<Scalar>& m) {
  if (m.rows() != p.nvars()) throw InputError("substitute_linear: matrix has wrong row count");
  const int out_vars = static_cast<int>(m.cols());
  std::vector<HomogeneousPolynomial<Scalar>> rows;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    rows.push_back(HomogeneousPolynomial<Scalar>::linear_form(VectorX<Scalar>(m.row(i).transpose())));
  }
  HomogeneousPolynomial<Scalar> out(out_vars, p.degree());
  for (const auto& [e, c] : p.terms()) {
    auto term = HomogeneousPolynomial<Scalar>::one(out_vars);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term = term * rows[i];
    }
    out += c * term;
  }
  return out;
}

/// All exponent vectors of total degree `degree` in `nvars` variables, in
/// descending lexicographic order (x_1^d first).
inline std::vector<std::vector<int>> monomial_exponents(int nvars, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      e[static_cast<std::size_t>(var)] = remaining;
      out.push_back(e);
      return;
    }
    for (int a = remaining; a >= 0; --a) {
      e[static_cast<std::size_t>(var)] = a;
      self(self, var + 1, remaining - a);
    }
  };
  rec(rec, 0, degree);
  return out;
}

/// Positive integer points on which a homogeneous polynomial of the given
/// degree is uniquely determined: (b_1 + 1, …, b_{n-1} + 1, 1) for b ∈ N^{n-1}
/// with |b| ≤ degree (a translated principal lattice after dehomogenization).
template <typename Scalar>
std::vector<VectorX<Scalar>> interpolation_points(int nvars, int degree) {
  std::vector<VectorX<Scalar>> pts;
  for (int total = 0; total <= degree; ++total) {
    if (nvars == 1) {
      if (total == 0) pts.push_back(VectorX<Scalar>::Ones(1));
      continue;
    }
    for (const auto& b : monomial_exponents(nvars - 1, total)) {
      VectorX<Scalar> x(nvars);
      for (int i = 0; i < nvars - 1; ++i) x[i] = Scalar(b[static_cast<std::size_t>(i)] + 1);
      x[nvars - 1] = Scalar(1);
      pts.push_back(std::move(x));
    }
  }
  return pts;
}

/// Exact interpolation of a homogeneous polynomial from its values.
/// Throws InputError when the points do not determine the polynomial.
template <typename Scalar>
HomogeneousPolynomial<Scalar> interpolate(int nvars, int degree, const std::vector<VectorX<Scalar>>& points,
                                          const std::vector<Scalar>& values) {
  const auto exps = monomial_exponents(nvars, degree);
  const auto n = static_cast<Eigen::Index>(exps.size());
  if (static_cast<Eigen::Index>(points.size()) != n || values.size() != points.size()) {
    throw InputError("interpolate: need exactly one point per monomial");
  }
  MatrixX<Scalar> vander(n, n);
  VectorX<Scalar> rhs(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      Scalar m(1);
      for (int i = 0; i < nvars; ++i) {
        for (int k = 0; k < exps[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)]; ++k) m *= points[static_cast<std::size_t>(r)][i];
      }
      vander(r, c) = m;
    }
    rhs[r] = values[static_cast<std::size_t>(r)];
  }
  const auto coeffs = solve(vander, rhs);
  if (!coeffs) throw InputError("interpolate: points are not unisolvent");
  HomogeneousPolynomial<Scalar> p(nvars, degree);
  for (Eigen::Index c = 0; c < n; ++c) p.add_term(exps[static_cast<std::size_t>(c)], (*coeffs)[c]);
  return p;
}

/// Views P as a polynomial in `nvars` ≥ P.nvars() variables (extra variables appended).
template <typename Scalar>
HomogeneousPolynomial<Scalar> embed(const HomogeneousPolynomial<Scalar>& p, int nvars) {
  if (nvars < p.nvars()) throw InputError("embed: cannot drop variables");
  HomogeneousPolynomial<Scalar> out(nvars, p.degree());
  for (const auto& [e, c] : p.terms()) {
    auto wide = e;
    wide.resize(static_cast<std::size_t>(nvars), 0);
    out.add_term(wide, c);
  }
  return out;
}

using Polynomial = HomogeneousPolynomial<Rational>;

}  // namespace coaf

#endif  // COAF_POLYNOMIAL_HPP

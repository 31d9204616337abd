#include "coaf/corollary.hpp"

#include "coaf/family.hpp"

#include <gmp.h>

namespace coaf {

namespace {

std::optional<Integer> exact_int_root(const Integer& x, unsigned k) {
  Integer r;
  if (mpz_root(r.backend().data(), x.backend().data(), k) == 0) return std::nullopt;
  return r;
}

Integer floor_root(const Integer& x, unsigned k) {
  Integer r;
  mpz_root(r.backend().data(), x.backend().data(), k);
  return r;
}

Integer ipow(const Integer& base, unsigned e) {
  Integer r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

// [lo, hi] containing (p/q)^(1/k) with width 1/(q·2^bits).
std::pair<Rational, Rational> root_bounds(const Rational& x, unsigned k, unsigned bits) {
  const Integer p = numerator(x);
  const Integer q = denominator(x);
  const Integer scale = Integer(1) << bits;
  const Integer r = floor_root(p * ipow(q, k - 1) * ipow(scale, k), k);
  const Integer den = q * scale;
  return {Rational(r, den), Rational(r + 1, den)};
}

Rational scalar(const Polynomial& p) {
  if (p.degree() != 0) throw std::logic_error("expected a constant polynomial");
  return p.evaluate(Vector::Zero(p.nvars()));
}

Polynomial derive(Polynomial p, const std::vector<Vector>& directions) {
  for (const auto& w : directions) p = directional_derivative(p, w);
  return p;
}

Json pair_data(const Vector& u, const Vector& v) { return Json{{"u", to_json(u)}, {"v", to_json(v)}}; }

// a^(1/m) ≤ Σ c_i b_i^(1/m), exactly.
std::optional<bool> root_leq(const Rational& a, const std::vector<std::pair<Rational, Rational>>& rhs, unsigned m) {
  std::vector<RootTerm> terms{{Rational(1), a}};
  for (const auto& [c, b] : rhs) terms.push_back({-c, b});
  const auto s = root_sum_sign(terms, m);
  if (!s) return std::nullopt;
  return *s <= 0;
}

}  // namespace

std::optional<Rational> exact_root(const Rational& x, unsigned k) {
  if (x < 0) throw InputError("exact_root: negative radicand");
  const auto p = exact_int_root(numerator(x), k);
  if (!p) return std::nullopt;
  const auto q = exact_int_root(denominator(x), k);
  if (!q) return std::nullopt;
  return Rational(*p, *q);
}

std::optional<int> root_sum_sign(const std::vector<RootTerm>& terms, unsigned k, unsigned max_bits) {
  if (k == 0) throw InputError("root_sum_sign: k must be positive");
  struct Class {
    Rational base;
    Rational net;
  };
  std::vector<Class> classes;
  for (const auto& t : terms) {
    if (t.radicand < 0) throw InputError("root_sum_sign: negative radicand " + to_string(t.radicand));
    if (t.radicand == 0 || t.coeff == 0) continue;
    bool merged = false;
    for (auto& c : classes) {
      if (const auto ratio = exact_root(t.radicand / c.base, k)) {
        c.net += t.coeff * *ratio;
        merged = true;
        break;
      }
    }
    if (!merged) classes.push_back({t.radicand, t.coeff});
  }
  std::erase_if(classes, [](const Class& c) { return c.net == 0; });
  if (classes.empty()) return 0;
  if (classes.size() == 1) return classes.front().net.sign();
  for (unsigned bits = 32; bits <= max_bits; bits *= 2) {
    Rational lo = 0, hi = 0;
    for (const auto& c : classes) {
      const auto [rlo, rhi] = root_bounds(c.base, k, bits);
      if (c.net > 0) {
        lo += c.net * rlo;
        hi += c.net * rhi;
      } else {
        lo += c.net * rhi;
        hi += c.net * rlo;
      }
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
  return std::nullopt;
}

CheckResult check_reversed_bm(const Polynomial& vol, const Vector& u, const Vector& v, const std::vector<Rational>& ts) {
  const auto d = static_cast<unsigned>(vol.degree());
  const Rational vu = vol.evaluate(u), vv = vol.evaluate(v);
  for (const auto& t : ts) {
    const Rational vw = vol.evaluate(Vector(t * u + (1 - t) * v));
    const auto holds = root_leq(vw, {{t, vu}, {1 - t, vv}}, d);
    if (!holds || !*holds) {
      Json ce = pair_data(u, v);
      ce["t"] = to_string(t);
      ce["vol_w"] = to_string(vw);
      ce["vol_u"] = to_string(vu);
      ce["vol_v"] = to_string(vv);
      ce["undecided"] = !holds.has_value();
      return {false, ce};
    }
  }
  return {};
}

CheckResult check_generalized_reversed_bm(const Polynomial& vol, const std::vector<Vector>& directions,
                                          const Vector& u, const Vector& v) {
  const Polynomial f = derive(vol, directions);
  const auto m = static_cast<unsigned>(f.degree());
  const Rational fu = f.evaluate(u), fv = f.evaluate(v);
  const Rational fw = f.evaluate(Vector((u + v) / 2));
  Json ce = pair_data(u, v);
  ce["k"] = directions.size();
  Json dirs = Json::array();
  for (const auto& w : directions) dirs.push_back(to_json(w));
  ce["directions"] = dirs;
  ce["f_u"] = to_string(fu);
  ce["f_v"] = to_string(fv);
  ce["f_mid"] = to_string(fw);
  if (fu < 0 || fv < 0 || fw < 0) return {false, ce};
  const auto holds = root_leq(fw, {{Rational(1, 2), fu}, {Rational(1, 2), fv}}, m);
  if (!holds || !*holds) {
    ce["undecided"] = !holds.has_value();
    return {false, ce};
  }
  return {};
}

CheckResult check_first_reversed_minkowski(const Polynomial& vol, const Vector& u, const Vector& v) {
  const int d = vol.degree();
  std::vector<Vector> dirs{u};
  for (int i = 0; i + 1 < d; ++i) dirs.push_back(v);
  const Rational mv = scalar(derive(vol, dirs)) / factorial(d);
  const Rational lhs = pow(mv, static_cast<unsigned>(d));
  const Rational rhs = vol.evaluate(u) * pow(vol.evaluate(v), static_cast<unsigned>(d - 1));
  if (mv < 0 || lhs > rhs) {
    Json ce = pair_data(u, v);
    ce["mixed"] = to_string(mv);
    ce["lhs"] = to_string(lhs);
    ce["rhs"] = to_string(rhs);
    return {false, ce};
  }
  return {};
}

CheckResult check_second_reversed_minkowski(const Polynomial& vol, const Vector& u, const Vector& v) {
  const int d = vol.degree();
  const auto forms = af_forms(vol, std::vector<Vector>(static_cast<std::size_t>(std::max(0, d - 2)), u));
  const Rational buv = forms.bilinear.apply(u, v);
  const Rational lhs = buv * buv;
  const Rational rhs = vol.evaluate(u) * forms.bilinear.apply(v);
  if (lhs > rhs || forms.bilinear.apply(u) != vol.evaluate(u)) {
    Json ce = pair_data(u, v);
    ce["b_uv"] = to_string(buv);
    ce["lhs"] = to_string(lhs);
    ce["rhs"] = to_string(rhs);
    return {false, ce};
  }
  return {};
}

}  // namespace coaf

#pragma once

// Dense univariate polynomials over a Field (Q or Q(t)).

#include "planecurve/algebra.hpp"

namespace planecurve {

class KPoly {
 public:
  KPoly() = default;
  KPoly(Field f, std::vector<Scalar> c) : f_(std::move(f)), c_(std::move(c)) {
    for (auto& a : c_) a = a.in_field(f_);
    trim();
  }
  static KPoly from_poly(const Poly& p, int v) {
    std::vector<Scalar> c(std::max(0, p.degree_in(v) + 1), Scalar(p.field(), 0));
    for (auto& [m, a] : p.terms()) {
      for (int i = 0; i < kMaxVars; ++i)
        if (i != v && m[i]) throw std::invalid_argument("polynomial is not univariate");
      c[m[v]] = a;
    }
    return KPoly(p.field(), std::move(c));
  }

  const Field& field() const { return f_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Scalar& lc() const { return c_.back(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int k) const { return k >= 0 && k <= degree() ? c_[k] : Scalar(f_, 0); }
  bool has_rational_coeffs() const {
    for (auto& a : c_)
      if (!a.is_rational()) return false;
    return true;
  }
  UPolyQ to_rational() const {
    std::vector<mpq_class> c;
    for (auto& a : c_) c.push_back(a.rational());
    return UPolyQ(std::move(c));
  }
  Poly to_poly(const Ring& r, int v) const {
    Poly p(r);
    for (int k = 0; k <= degree(); ++k) {
      Mono m;
      m[v] = k;
      p.add_term(m, c_[k]);
    }
    return p;
  }

  Scalar eval(const Scalar& x) const {
    Scalar r(f_, 0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  KPoly monic() const {
    if (is_zero()) return *this;
    Scalar inv = lc().inverse();
    std::vector<Scalar> c;
    for (auto& a : c_) c.push_back(a * inv);
    return KPoly(f_, std::move(c));
  }
  KPoly derivative() const {
    std::vector<Scalar> d;
    for (int i = 1; i <= degree(); ++i) d.push_back(c_[i] * Scalar(i));
    return KPoly(f_, std::move(d));
  }
  friend KPoly operator-(const KPoly& a, const KPoly& b) {
    Field f = a.f_.is_rational() ? b.f_ : a.f_;
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(f, 0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return KPoly(f, std::move(c));
  }
  static std::pair<KPoly, KPoly> divmod(const KPoly& a, const KPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Scalar> r = a.c_;
    int db = b.degree();
    if (a.degree() < db) return {KPoly(a.f_, {}), a};
    std::vector<Scalar> q(a.degree() - db + 1, Scalar(a.f_, 0));
    Scalar il = b.lc().inverse();
    for (int k = a.degree(); k >= db; --k) {
      if (r[k].is_zero()) continue;
      Scalar t = r[k] * il;
      q[k - db] = t;
      for (int j = 0; j <= db; ++j) r[k - db + j] -= t * b.c_[j];
    }
    return {KPoly(a.f_, std::move(q)), KPoly(a.f_, std::move(r))};
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  Field f_;
  std::vector<Scalar> c_;
};

inline KPoly gcd(KPoly a, KPoly b) {
  while (!b.is_zero()) {
    KPoly r = KPoly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline KPoly squarefree_part(const KPoly& f) {
  if (f.degree() <= 0) return KPoly(f.field(), {Scalar(f.field(), 1)});
  return KPoly::divmod(f, gcd(f, f.derivative())).first.monic();
}

}  // namespace planecurve

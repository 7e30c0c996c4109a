#pragma once

// Coefficient fields: Q or a simple extension Q[t]/(m).

#include "planecurve/upoly.hpp"

#include <memory>
#include <sstream>

namespace planecurve {

class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }

  // m must be irreducible over Q of degree >= 2; it is made monic.
  static Field extension(const UPolyQ& m) {
    if (m.degree() < 2) throw std::invalid_argument("extension modulus must have degree >= 2");
    if (!is_irreducible(m)) throw std::invalid_argument("extension modulus is reducible: " + m.to_string("t"));
    Field f;
    f.d_ = std::make_shared<const UPolyQ>(m.monic());
    return f;
  }

  int degree() const { return d_ ? d_->degree() : 1; }
  bool is_rational() const { return !d_; }
  const UPolyQ& modulus() const {
    static const UPolyQ x = UPolyQ::x();
    return d_ ? *d_ : x;
  }

  friend bool operator==(const Field& a, const Field& b) {
    if (a.d_ == b.d_) return true;
    if (!a.d_ || !b.d_) return false;
    return *a.d_ == *b.d_;
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  std::shared_ptr<const UPolyQ> d_;
};

// Element of a Field; coordinates in the power basis of the generator.
class Scalar {
 public:
  Scalar() : c_(1) {}
  Scalar(long v) : c_(1) { c_[0] = v; }  // NOLINT implicit
  Scalar(const mpq_class& v) : c_(1) { c_[0] = v; }  // NOLINT implicit
  Scalar(const Field& f, const mpq_class& v) : f_(f), c_(f.degree()) { c_[0] = v; }

  static Scalar generator(const Field& f) {
    if (f.is_rational()) throw std::invalid_argument("rational field has no generator");
    Scalar s(f, 0);
    s.c_[1] = 1;
    return s;
  }
  static Scalar from_poly(const Field& f, const UPolyQ& p) {
    UPolyQ r = f.is_rational() ? p : p % f.modulus();
    Scalar s(f, 0);
    if (f.is_rational()) {
      if (r.degree() > 0) throw std::invalid_argument("non-constant value in rational field");
      s.c_[0] = r.coeff(0);
      return s;
    }
    for (int i = 0; i < f.degree(); ++i) s.c_[i] = r.coeff(i);
    return s;
  }

  const Field& field() const { return f_; }
  const std::vector<mpq_class>& coords() const { return c_; }
  UPolyQ as_poly() const { return UPolyQ(c_); }

  bool is_zero() const {
    for (auto& a : c_)
      if (a != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  bool is_one() const { return is_rational() && c_[0] == 1; }
  const mpq_class& rational() const {
    if (!is_rational()) throw std::domain_error("scalar is not rational");
    return c_[0];
  }

  Scalar in_field(const Field& f) const {
    if (f_ == f) return *this;
    if (!is_rational()) throw std::invalid_argument("cannot move algebraic scalar to another field");
    return Scalar(f, c_[0]);
  }

  Scalar operator-() const {
    Scalar r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  Scalar& operator+=(const Scalar& b) {
    unify(b);
    if (b.f_ == f_) {
      for (size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    } else {
      c_[0] += b.c_[0];
    }
    return *this;
  }
  Scalar& operator-=(const Scalar& b) { return *this += -b; }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.f_.is_rational() && b.f_.is_rational()) return Scalar(a.c_[0] * b.c_[0]);
    if (a.f_.is_rational()) return b.scaled(a.c_[0]);
    if (b.f_.is_rational()) return a.scaled(b.c_[0]);
    if (a.f_ != b.f_) throw std::invalid_argument("field mismatch");
    int n = a.f_.degree();
    std::vector<mpq_class> prod(2 * n - 1);
    for (int i = 0; i < n; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; j < n; ++j) prod[i + j] += a.c_[i] * b.c_[j];
    }
    const auto& m = a.f_.modulus().coeffs();
    for (int k = 2 * n - 2; k >= n; --k) {
      if (prod[k] == 0) continue;
      mpq_class t = prod[k];
      for (int j = 0; j <= n; ++j) prod[k - n + j] -= t * m[j];
    }
    Scalar r(a.f_, 0);
    for (int i = 0; i < n; ++i) r.c_[i] = prod[i];
    return r;
  }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (f_.is_rational()) return Scalar(1 / c_[0]);
    return from_poly(f_, inverse_mod(as_poly(), f_.modulus()));
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar pow(unsigned e) const {
    Scalar r = Scalar(f_, 1), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.f_ == b.f_) return a.c_ == b.c_;
    return a.is_rational() && b.is_rational() && a.c_[0] == b.c_[0];
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // "3/2" or "(2*@^2 - 1)"
  std::string to_string() const {
    if (is_rational()) return c_[0].get_str();
    return "(" + as_poly().to_string("@") + ")";
  }

 private:
  Scalar scaled(const mpq_class& s) const {
    Scalar r = *this;
    for (auto& a : r.c_) a *= s;
    return r;
  }
  void unify(const Scalar& b) {
    if (f_ == b.f_) return;
    if (f_.is_rational()) {
      if (!b.f_.is_rational()) *this = in_field(b.f_);
    } else if (!b.f_.is_rational()) {
      throw std::invalid_argument("field mismatch");
    }
  }

  Field f_;
  std::vector<mpq_class> c_;
};

}  // namespace planecurve

#pragma once

// Sparse multivariate polynomials in at most three variables.

#include "planecurve/field.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>

namespace planecurve {

constexpr int kMaxVars = 3;

struct Mono {
  std::array<int, kMaxVars> e{};
  int deg() const { return e[0] + e[1] + e[2]; }
  int operator[](int i) const { return e[i]; }
  int& operator[](int i) { return e[i]; }
  friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
  friend bool operator!=(const Mono& a, const Mono& b) { return a.e != b.e; }
  friend Mono operator+(Mono a, const Mono& b) {
    for (int i = 0; i < kMaxVars; ++i) a.e[i] += b.e[i];
    return a;
  }
  bool divides(const Mono& b) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > b.e[i]) return false;
    return true;
  }
  friend Mono operator-(Mono a, const Mono& b) {
    for (int i = 0; i < kMaxVars; ++i) a.e[i] -= b.e[i];
    return a;
  }
};

// Degree-reverse-lexicographic, largest first.
struct DegRevLexGreater {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = a.deg(), db = b.deg();
    if (da != db) return da > db;
    for (int i = kMaxVars - 1; i >= 0; --i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
  }
};

class Ring {
 public:
  Ring() : d_(std::make_shared<const Data>()) {}
  Ring(Field f, std::vector<std::string> vars) {
    if (vars.size() > kMaxVars) throw std::invalid_argument("at most three variables supported");
    d_ = std::make_shared<const Data>(Data{std::move(f), std::move(vars)});
  }
  const Field& field() const { return d_->field; }
  const std::vector<std::string>& vars() const { return d_->vars; }
  int nvars() const { return static_cast<int>(d_->vars.size()); }
  int index(const std::string& v) const {
    for (int i = 0; i < nvars(); ++i)
      if (d_->vars[i] == v) return i;
    throw std::invalid_argument("unknown variable: " + v);
  }
  Ring with_field(const Field& f) const { return Ring(f, vars()); }
  friend bool operator==(const Ring& a, const Ring& b) {
    return a.d_ == b.d_ || (a.d_->field == b.d_->field && a.d_->vars == b.d_->vars);
  }
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

 private:
  struct Data {
    Field field;
    std::vector<std::string> vars;
  };
  std::shared_ptr<const Data> d_;
};

class Poly {
 public:
  using Terms = std::map<Mono, Scalar, DegRevLexGreater>;

  Poly() = default;
  explicit Poly(Ring r) : ring_(std::move(r)) {}
  Poly(Ring r, const Scalar& c) : ring_(std::move(r)) {
    if (!c.is_zero()) t_.emplace(Mono{}, c.in_field(ring_.field()));
  }
  static Poly var(const Ring& r, int i) {
    Poly p(r);
    Mono m;
    m[i] = 1;
    p.t_.emplace(m, Scalar(r.field(), 1));
    return p;
  }
  static Poly var(const Ring& r, const std::string& name) { return var(r, r.index(name)); }
  static Poly term(const Ring& r, const Mono& m, const Scalar& c) {
    Poly p(r);
    p.add_term(m, c);
    return p;
  }

  const Ring& ring() const { return ring_; }
  const Field& field() const { return ring_.field(); }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.deg() == 0); }
  Scalar constant_term() const {
    auto it = t_.find(Mono{});
    return it == t_.end() ? Scalar(field(), 0) : it->second;
  }
  Scalar coeff(const Mono& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Scalar(field(), 0) : it->second;
  }
  const Mono& lead_mono() const { return t_.begin()->first; }
  const Scalar& lead_coeff() const { return t_.begin()->second; }

  void add_term(const Mono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(m, c.in_field(field()));
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  int total_degree() const { return t_.empty() ? -1 : t_.begin()->first.deg(); }
  // lowest total degree of a term; -1 for zero
  int ord() const {
    int o = -1;
    for (auto& [m, c] : t_)
      if (o < 0 || m.deg() < o) o = m.deg();
    return o;
  }
  int degree_in(int v) const {
    int d = -1;
    for (auto& [m, c] : t_) d = std::max(d, m[v]);
    return d;
  }
  bool involves(int v) const { return degree_in(v) > 0; }
  bool is_homogeneous() const {
    if (t_.empty()) return true;
    int d = t_.begin()->first.deg();
    for (auto& [m, c] : t_)
      if (m.deg() != d) return false;
    return true;
  }
  Poly homogeneous_part(int k) const {
    Poly p(ring_);
    for (auto& [m, c] : t_)
      if (m.deg() == k) p.t_.emplace(m, c);
    return p;
  }
  bool has_rational_coeffs() const {
    for (auto& [m, c] : t_)
      if (!c.is_rational()) return false;
    return true;
  }

  Poly operator-() const {
    Poly p = *this;
    for (auto& [m, c] : p.t_) c = -c;
    return p;
  }
  Poly& operator+=(const Poly& b) {
    check(b);
    for (auto& [m, c] : b.t_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& b) {
    check(b);
    for (auto& [m, c] : b.t_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    Poly p(a.ring_);
    for (auto& [ma, ca] : a.t_)
      for (auto& [mb, cb] : b.t_) p.add_term(ma + mb, ca * cb);
    return p;
  }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend Poly operator*(const Scalar& s, const Poly& a) {
    Poly p(a.ring_);
    if (s.is_zero()) return p;
    for (auto& [m, c] : a.t_) p.t_.emplace(m, c * s);
    return p;
  }
  Poly mul_term(const Mono& mm, const Scalar& s) const {
    Poly p(ring_);
    if (s.is_zero()) return p;
    for (auto& [m, c] : t_) p.t_.emplace(m + mm, c * s);
    return p;
  }
  Poly pow(unsigned e) const {
    Poly r(ring_, Scalar(field(), 1)), b = *this;
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.ring_ == b.ring_ && a.t_ == b.t_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative(int v) const {
    Poly p(ring_);
    for (auto& [m, c] : t_) {
      if (m[v] == 0) continue;
      Mono n = m;
      n[v] -= 1;
      p.add_term(n, c * Scalar(m[v]));
    }
    return p;
  }
  Poly derivative(const std::string& v) const { return derivative(ring_.index(v)); }

  // Substitute variable i by images[i] (all in ring `target`).
  Poly substitute(const std::vector<Poly>& images, const Ring& target) const {
    if (static_cast<int>(images.size()) != ring_.nvars()) throw std::invalid_argument("substitution arity mismatch");
    std::vector<std::vector<Poly>> powers(images.size());
    Poly out(target);
    for (auto& [m, c] : t_) {
      Poly t(target, c);
      for (size_t i = 0; i < images.size(); ++i) {
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(Poly(target, Scalar(target.field(), 1)));
        while (static_cast<int>(pw.size()) <= m[i]) pw.push_back(pw.back() * images[i]);
        if (m[i]) t *= pw[m[i]];
      }
      out += t;
    }
    return out;
  }
  Poly substitute(const std::map<std::string, Poly>& assign) const {
    std::vector<Poly> imgs;
    Ring target = assign.empty() ? ring_ : assign.begin()->second.ring();
    for (int i = 0; i < ring_.nvars(); ++i) {
      auto it = assign.find(ring_.vars()[i]);
      if (it != assign.end()) {
        imgs.push_back(it->second);
      } else {
        imgs.push_back(Poly::var(target, target.index(ring_.vars()[i])));
      }
    }
    return substitute(imgs, target);
  }

  Scalar evaluate(const std::vector<Scalar>& pt) const {
    Field f = field();
    for (auto& s : pt)
      if (!s.field().is_rational()) f = s.field();
    Scalar r(f, 0);
    for (auto& [m, c] : t_) {
      Scalar t = c.in_field(c.is_rational() ? f : c.field());
      for (int i = 0; i < ring_.nvars(); ++i)
        if (m[i]) t *= pt[i].pow(m[i]);
      r += t;
    }
    return r;
  }

  // Same terms read in another ring with the same variable count (embedding of coefficients).
  Poly in_ring(const Ring& r) const {
    if (r.nvars() != ring_.nvars()) throw std::invalid_argument("ring arity mismatch");
    Poly p(r);
    for (auto& [m, c] : t_) p.t_.emplace(m, c.in_field(r.field()));
    return p;
  }

  // Coefficients with respect to variable v: result[k] has no v.
  std::vector<Poly> coeffs_in(int v) const {
    std::vector<Poly> out(std::max(0, degree_in(v) + 1), Poly(ring_));
    for (auto& [m, c] : t_) {
      Mono n = m;
      n[v] = 0;
      out[m[v]].t_.emplace(n, c);
    }
    return out;
  }
  Poly lc_in(int v) const {
    auto cs = coeffs_in(v);
    return cs.empty() ? Poly(ring_) : cs.back();
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return lead_coeff().inverse() * *this;
  }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto& [m, c] : t_) {
      std::string mono;
      for (int i = 0; i < ring_.nvars(); ++i) {
        if (!m[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += ring_.vars()[i];
        if (m[i] > 1) mono += "^" + std::to_string(m[i]);
      }
      bool neg = c.is_rational() && c.rational() < 0;
      Scalar a = neg ? -c : c;
      std::string cs;
      if (!(a.is_one() && !mono.empty())) cs = a.to_string();
      if (s.empty()) {
        s += neg ? "-" : "";
      } else {
        s += neg ? " - " : " + ";
      }
      s += cs;
      if (!cs.empty() && !mono.empty()) s += "*";
      s += mono;
    }
    return s;
  }

 private:
  void check(const Poly& b) const {
    if (ring_ != b.ring_) {
      if (ring_.vars() != b.ring_.vars()) throw std::invalid_argument("variable mismatch");
      throw std::invalid_argument("field mismatch");
    }
  }

  Ring ring_;
  Terms t_;
};

// Exact quotient a / b, or nullopt if b does not divide a.
inline std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  Poly q(a.ring()), r = a;
  Scalar il = b.lead_coeff().inverse();
  const Mono& lb = b.lead_mono();
  while (!r.is_zero()) {
    const Mono& lr = r.lead_mono();
    if (!lb.divides(lr)) return std::nullopt;
    Mono d = lr - lb;
    Scalar c = r.lead_coeff() * il;
    q.add_term(d, c);
    r -= b.mul_term(d, c);
  }
  return q;
}

inline Poly divide_or_throw(const Poly& a, const Poly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("inexact polynomial division");
  return *q;
}

}  // namespace planecurve

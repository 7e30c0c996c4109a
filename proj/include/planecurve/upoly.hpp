#pragma once

// Dense univariate polynomials over Q and Z/p, and factorization over Q.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace planecurve {

// Coefficients low to high, no trailing zeros.
class UPolyQ {
 public:
  UPolyQ() = default;
  explicit UPolyQ(std::vector<mpq_class> c) : c_(std::move(c)) { trim(); }
  static UPolyQ constant(const mpq_class& a) { return UPolyQ(std::vector<mpq_class>{a}); }
  static UPolyQ monomial(const mpq_class& a, int k) {
    std::vector<mpq_class> c(k + 1);
    c[k] = a;
    return UPolyQ(std::move(c));
  }
  static UPolyQ x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const mpq_class& lc() const { return c_.back(); }
  mpq_class coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : mpq_class(0); }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  mpq_class eval(const mpq_class& a) const {
    mpq_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * a + *it;
    return r;
  }

  UPolyQ operator-() const {
    UPolyQ r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  friend UPolyQ operator+(const UPolyQ& a, const UPolyQ& b) {
    std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UPolyQ(std::move(c));
  }
  friend UPolyQ operator-(const UPolyQ& a, const UPolyQ& b) { return a + (-b); }
  friend UPolyQ operator*(const UPolyQ& a, const UPolyQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UPolyQ(std::move(c));
  }
  friend UPolyQ operator*(const mpq_class& s, const UPolyQ& a) {
    if (s == 0) return {};
    UPolyQ r = a;
    for (auto& x : r.c_) x *= s;
    return r;
  }
  friend bool operator==(const UPolyQ& a, const UPolyQ& b) { return a.c_ == b.c_; }

  static std::pair<UPolyQ, UPolyQ> divmod(const UPolyQ& a, const UPolyQ& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<mpq_class> r = a.c_;
    int db = b.degree();
    if (a.degree() < db) return {UPolyQ(), a};
    std::vector<mpq_class> q(a.degree() - db + 1);
    for (int k = a.degree(); k >= db; --k) {
      if (r[k] == 0) continue;
      mpq_class t = r[k] / b.lc();
      q[k - db] = t;
      for (int j = 0; j <= db; ++j) r[k - db + j] -= t * b.c_[j];
    }
    return {UPolyQ(std::move(q)), UPolyQ(std::move(r))};
  }
  friend UPolyQ operator/(const UPolyQ& a, const UPolyQ& b) { return divmod(a, b).first; }
  friend UPolyQ operator%(const UPolyQ& a, const UPolyQ& b) { return divmod(a, b).second; }

  UPolyQ monic() const { return is_zero() ? *this : (1 / lc()) * *this; }

  UPolyQ derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<mpq_class> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return UPolyQ(std::move(d));
  }

  // a(x) -> a(x + s)
  UPolyQ shift(const mpq_class& s) const {
    UPolyQ r;
    UPolyQ lin(std::vector<mpq_class>{s, 1});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + constant(*it);
    return r;
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      if (c_[k] == 0) continue;
      mpq_class a = c_[k];
      bool neg = a < 0;
      if (neg) a = -a;
      s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      bool one = a == 1;
      if (!one || k == 0) s += a.get_str();
      if (k > 0) {
        if (!one) s += "*";
        s += var;
        if (k > 1) s += "^" + std::to_string(k);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<mpq_class> c_;
};

inline UPolyQ gcd(UPolyQ a, UPolyQ b) {
  while (!b.is_zero()) {
    UPolyQ r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Returns (g, s, t) with s*a + t*b = g monic.
inline std::tuple<UPolyQ, UPolyQ, UPolyQ> xgcd(const UPolyQ& a, const UPolyQ& b) {
  UPolyQ r0 = a, r1 = b, s0 = UPolyQ::constant(1), s1, t0, t1 = UPolyQ::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = UPolyQ::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPolyQ s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  mpq_class inv = 1 / r0.lc();
  return {inv * r0, inv * s0, inv * t0};
}

// Inverse of a modulo m; throws if not coprime.
inline UPolyQ inverse_mod(const UPolyQ& a, const UPolyQ& m) {
  auto [g, s, t] = xgcd(a % m, m);
  if (g.degree() != 0) throw std::domain_error("element not invertible modulo polynomial");
  return s % m;
}

// Yun's algorithm: returns (a_i, i) with f = lc * prod a_i^i, a_i monic squarefree.
inline std::vector<std::pair<UPolyQ, int>> squarefree_decomposition(const UPolyQ& f) {
  std::vector<std::pair<UPolyQ, int>> out;
  if (f.degree() <= 0) return out;
  UPolyQ fp = f.derivative();
  UPolyQ a0 = gcd(f, fp);
  UPolyQ b = f / a0, c = fp / a0;
  UPolyQ d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    UPolyQ a = gcd(b, d);
    b = b / a;
    c = d / a;
    d = c - b.derivative();
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
  }
  return out;
}

inline UPolyQ squarefree_part(const UPolyQ& f) {
  if (f.degree() <= 0) return UPolyQ::constant(1);
  return (f / gcd(f, f.derivative())).monic();
}

namespace detail {

using ZVec = std::vector<mpz_class>;

inline void ztrim(ZVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

inline mpz_class zcontent(const ZVec& v) {
  mpz_class g = 0;
  for (auto& a : v) g = gcd(g, a);
  return g;
}

// Primitive integer multiple with positive leading coefficient.
inline ZVec primitive_integer(const UPolyQ& f) {
  mpz_class l = 1;
  for (auto& a : f.coeffs()) l = lcm(l, a.get_den());
  ZVec v;
  for (auto& a : f.coeffs()) v.push_back(mpz_class(a * l));
  mpz_class g = zcontent(v);
  if (g != 0) {
    if (v.back() < 0) g = -g;
    for (auto& a : v) a /= g;
  }
  return v;
}

inline UPolyQ to_q(const ZVec& v) {
  std::vector<mpq_class> c;
  for (auto& a : v) c.emplace_back(a);
  return UPolyQ(std::move(c));
}

// ---- arithmetic over Z/p, p < 2^31 ----
using PVec = std::vector<std::uint64_t>;

struct ModP {
  std::uint64_t p;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }

  static void trim(PVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  }
  static int deg(const PVec& v) { return static_cast<int>(v.size()) - 1; }

  PVec reduce(const ZVec& v) const {
    PVec r;
    mpz_class pp = static_cast<unsigned long>(p);
    for (auto& a : v) {
      mpz_class m = a % pp;
      if (m < 0) m += pp;
      r.push_back(m.get_ui());
    }
    trim(r);
    return r;
  }
  PVec mulp(const PVec& a, const PVec& b) const {
    if (a.empty() || b.empty()) return {};
    PVec c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    trim(c);
    return c;
  }
  PVec subp(PVec a, const PVec& b) const {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = sub(a[i], b[i]);
    trim(a);
    return a;
  }
  PVec addp(PVec a, const PVec& b) const {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = add(a[i], b[i]);
    trim(a);
    return a;
  }
  PVec scale(PVec a, std::uint64_t s) const {
    for (auto& x : a) x = mul(x, s);
    trim(a);
    return a;
  }
  std::pair<PVec, PVec> divmod(PVec a, const PVec& b) const {
    if (b.empty()) throw std::domain_error("division by zero mod p");
    int db = deg(b);
    if (deg(a) < db) return {{}, a};
    std::uint64_t il = inv(b.back());
    PVec q(deg(a) - db + 1, 0);
    for (int k = deg(a); k >= db; --k) {
      if (!a[k]) continue;
      std::uint64_t t = mul(a[k], il);
      q[k - db] = t;
      for (int j = 0; j <= db; ++j) a[k - db + j] = sub(a[k - db + j], mul(t, b[j]));
    }
    trim(a);
    trim(q);
    return {q, a};
  }
  PVec rem(const PVec& a, const PVec& b) const { return divmod(a, b).second; }
  PVec monic(const PVec& a) const { return a.empty() ? a : scale(a, inv(a.back())); }
  PVec gcd(PVec a, PVec b) const {
    while (!b.empty()) {
      PVec r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // (g, s, t) with s a + t b = g monic
  std::tuple<PVec, PVec, PVec> xgcd(const PVec& a, const PVec& b) const {
    PVec r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      PVec s2 = subp(s0, mulp(q, s1)), t2 = subp(t0, mulp(q, t1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    std::uint64_t il = inv(r0.back());
    return {scale(r0, il), scale(s0, il), scale(t0, il)};
  }
  PVec deriv(const PVec& a) const {
    PVec d;
    for (size_t i = 1; i < a.size(); ++i) d.push_back(mul(a[i], i % p));
    trim(d);
    return d;
  }
  PVec powmod(PVec base, mpz_class e, const PVec& m) const {
    PVec r{1};
    base = rem(base, m);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = rem(mulp(r, base), m);
      base = rem(mulp(base, base), m);
      e >>= 1;
    }
    return r;
  }
};

// Distinct-degree factorization of a monic squarefree polynomial.
inline std::vector<std::pair<PVec, int>> ddf(const ModP& F, PVec f) {
  std::vector<std::pair<PVec, int>> out;
  PVec x{0, 1};
  PVec h = x;
  mpz_class pz = static_cast<unsigned long>(F.p);
  for (int i = 1; 2 * i <= ModP::deg(f); ++i) {
    h = F.powmod(h, pz, f);
    PVec g = F.gcd(F.subp(h, x), f);
    if (ModP::deg(g) > 0) {
      out.emplace_back(g, i);
      f = F.divmod(f, g).first;
      h = F.rem(h, f);
    }
  }
  if (ModP::deg(f) > 0) out.emplace_back(f, ModP::deg(f));
  return out;
}

// Equal-degree splitting (Cantor-Zassenhaus), p odd.
inline void edf(const ModP& F, const PVec& f, int d, std::mt19937_64& rng, std::vector<PVec>& out) {
  int n = ModP::deg(f);
  if (n == d) {
    out.push_back(F.monic(f));
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, d);
  e = (e - 1) / 2;
  for (;;) {
    PVec a(n);
    for (auto& c : a) c = rng() % F.p;
    ModP::trim(a);
    if (ModP::deg(a) < 1) continue;
    PVec b = F.subp(F.powmod(a, e, f), PVec{1});
    PVec g = F.gcd(b, f);
    int dg = ModP::deg(g);
    if (dg > 0 && dg < n) {
      edf(F, g, d, rng, out);
      edf(F, F.divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

inline std::vector<PVec> factor_mod_p(const ModP& F, const PVec& f) {
  std::mt19937_64 rng(0x5eed1234u + F.p);
  std::vector<PVec> out;
  for (auto& [g, d] : ddf(F, F.monic(f))) edf(F, g, d, rng, out);
  return out;
}

inline ZVec zmul(const ZVec& a, const ZVec& b) {
  if (a.empty() || b.empty()) return {};
  ZVec c(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  ztrim(c);
  return c;
}

// Symmetric residue modulo m.
inline ZVec zmods(ZVec v, const mpz_class& m) {
  mpz_class h = m / 2;
  for (auto& a : v) {
    a %= m;
    if (a < 0) a += m;
    if (a > h) a -= m;
  }
  ztrim(v);
  return v;
}

inline PVec to_pvec(const ZVec& v, const ModP& F) { return F.reduce(v); }

inline ZVec from_pvec(const PVec& v) {
  ZVec z;
  for (auto a : v) z.emplace_back(static_cast<unsigned long>(a));
  return z;
}

// Lift f = lc(f) * prod(facs) mod p (facs monic) to modulus p^k; returns monic lifts mod p^k.
inline std::vector<ZVec> hensel_lift(const ZVec& f, const std::vector<PVec>& facs, const ModP& F, int k) {
  if (facs.size() == 1) {
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), F.p, k);
    mpz_class linv;
    mpz_class l = f.back();
    mpz_invert(linv.get_mpz_t(), l.get_mpz_t(), pk.get_mpz_t());
    ZVec g = f;
    for (auto& a : g) a = a * linv;
    return {zmods(g, pk)};
  }
  size_t half = facs.size() / 2;
  PVec gp{1}, hp{1};
  for (size_t i = 0; i < half; ++i) gp = F.mulp(gp, facs[i]);
  for (size_t i = half; i < facs.size(); ++i) hp = F.mulp(hp, facs[i]);
  auto [one, s, t] = F.xgcd(gp, hp);
  ZVec g = from_pvec(gp), h = from_pvec(hp);
  mpz_class L = f.back();
  mpz_class pz = static_cast<unsigned long>(F.p);
  mpz_class m = pz;
  std::uint64_t Linv;
  {
    mpz_class lm = L % pz;
    if (lm < 0) lm += pz;
    Linv = F.inv(lm.get_ui());
  }
  for (int j = 1; j < k; ++j) {
    ZVec prod = zmul(g, h);
    ZVec e = f;
    for (size_t i = 0; i < prod.size(); ++i) {
      if (i >= e.size()) e.resize(i + 1);
      e[i] -= L * prod[i];
    }
    ztrim(e);
    for (auto& a : e) a /= m;
    PVec ep = F.scale(F.reduce(e), Linv);
    PVec dg = F.rem(F.mulp(t, ep), gp);
    PVec dh = F.divmod(F.subp(ep, F.mulp(hp, dg)), gp).first;
    ZVec dgz = from_pvec(dg), dhz = from_pvec(dh);
    for (size_t i = 0; i < dgz.size(); ++i) g[i] += m * dgz[i];
    for (size_t i = 0; i < dhz.size(); ++i) h[i] += m * dhz[i];
    m *= pz;
    // keep g, h symmetric mod m to bound growth
    g = zmods(g, m);
    h = zmods(h, m);
    // monic leading coefficient survives symmetric reduction only if m > 2
    g.resize(gp.size());
    h.resize(hp.size());
    g.back() = 1;
    h.back() = 1;
  }
  std::vector<PVec> left(facs.begin(), facs.begin() + half), right(facs.begin() + half, facs.end());
  auto a = hensel_lift(g, left, F, k);
  auto b = hensel_lift(h, right, F, k);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Exact division over Z; returns false if not divisible.
inline bool zdivides(const ZVec& a, const ZVec& b, ZVec& q) {
  ZVec r = a;
  int db = static_cast<int>(b.size()) - 1;
  int da = static_cast<int>(r.size()) - 1;
  if (da < db) return r.empty();
  q.assign(da - db + 1, 0);
  for (int k = da; k >= db; --k) {
    if (r[k] == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), b.back().get_mpz_t())) return false;
    mpz_class t = r[k] / b.back();
    q[k - db] = t;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= t * b[j];
  }
  ztrim(r);
  ztrim(q);
  return r.empty();
}

inline bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Irreducible factors of a primitive squarefree integer polynomial of degree >= 1.
inline std::vector<ZVec> zassenhaus(const ZVec& f) {
  int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};
  // choose a prime with few modular factors
  std::vector<PVec> best;
  ModP bestF{0};
  int tried = 0;
  for (std::uint64_t p = 3; tried < 6 && p < (1ull << 30); p += 2) {
    if (!is_small_prime(p)) continue;
    ModP F{p};
    mpz_class pz = static_cast<unsigned long>(p);
    if (mpz_divisible_p(f.back().get_mpz_t(), pz.get_mpz_t())) continue;
    PVec fp = F.reduce(f);
    if (ModP::deg(F.gcd(fp, F.deriv(fp))) > 0) continue;
    auto facs = factor_mod_p(F, fp);
    ++tried;
    if (bestF.p == 0 || facs.size() < best.size()) {
      best = facs;
      bestF = F;
    }
    if (best.size() == 1) break;
  }
  if (bestF.p == 0) throw std::runtime_error("no suitable prime for factorization");
  if (best.size() == 1) return {f};
  // coefficient bound |lc| * 2^n * ||f||_2
  mpz_class norm2 = 0;
  for (auto& a : f) norm2 += a * a;
  mpz_class nrm = sqrt(norm2) + 1;
  mpz_class bound = 2 * abs(f.back()) * nrm;
  bound <<= n;
  int k = 1;
  mpz_class pk = static_cast<unsigned long>(bestF.p);
  while (pk <= bound) {
    pk *= static_cast<unsigned long>(bestF.p);
    ++k;
  }
  auto lifted = hensel_lift(f, best, bestF, k);
  std::vector<ZVec> result;
  ZVec rem = f;
  std::vector<size_t> idx(lifted.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  size_t s = 1;
  while (2 * s <= idx.size()) {
    bool found = false;
    std::vector<size_t> sel(s);
    for (size_t i = 0; i < s; ++i) sel[i] = i;
    for (;;) {
      ZVec cand{rem.back()};
      for (auto i : sel) cand = zmods(zmul(cand, lifted[idx[i]]), pk);
      mpz_class c = zcontent(cand);
      if (c != 0) {
        if (cand.back() < 0) c = -c;
        for (auto& a : cand) a /= c;
        ZVec q;
        if (zdivides(rem, cand, q)) {
          result.push_back(cand);
          rem = q;
          std::vector<size_t> nidx;
          for (size_t i = 0; i < idx.size(); ++i)
            if (std::find(sel.begin(), sel.end(), i) == sel.end()) nidx.push_back(idx[i]);
          idx = nidx;
          found = true;
          break;
        }
      }
      // next combination
      int i = static_cast<int>(s) - 1;
      while (i >= 0 && sel[i] == idx.size() - s + i) --i;
      if (i < 0) break;
      ++sel[i];
      for (size_t j = i + 1; j < s; ++j) sel[j] = sel[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rem.size() > 1) {
    if (rem.back() < 0)
      for (auto& a : rem) a = -a;
    result.push_back(rem);
  }
  return result;
}

}  // namespace detail

// Irreducible factors over Q with multiplicities; factors primitive integral with positive leading coefficient.
inline std::vector<std::pair<UPolyQ, int>> factor_univariate(const UPolyQ& f) {
  std::vector<std::pair<UPolyQ, int>> out;
  for (auto& [a, m] : squarefree_decomposition(f)) {
    for (auto& g : detail::zassenhaus(detail::primitive_integer(a))) out.emplace_back(detail::to_q(g), m);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.to_string() < b.first.to_string();
  });
  return out;
}

inline bool is_irreducible(const UPolyQ& f) {
  if (f.degree() < 1) return false;
  auto fs = factor_univariate(f);
  return fs.size() == 1 && fs[0].second == 1;
}

}  // namespace planecurve

#pragma once

// Resultants, gcds, squarefree decomposition and factorization over Q.

#include "planecurve/poly.hpp"

#include <set>

namespace planecurve {

// ---- univariate bridges ----

inline UPolyQ to_upoly(const Poly& p, int v) {
  std::vector<mpq_class> c(std::max(0, p.degree_in(v) + 1));
  for (auto& [m, a] : p.terms()) {
    for (int i = 0; i < kMaxVars; ++i)
      if (i != v && m[i]) throw std::invalid_argument("polynomial is not univariate");
    c[m[v]] = a.rational();
  }
  return UPolyQ(std::move(c));
}

inline Poly from_upoly(const UPolyQ& u, const Ring& r, int v) {
  Poly p(r);
  for (int k = 0; k <= u.degree(); ++k) {
    Mono m;
    m[v] = k;
    p.add_term(m, Scalar(u.coeff(k)));
  }
  return p;
}

// Variables that occur in p.
inline std::vector<int> support_vars(const Poly& p) {
  std::vector<int> out;
  for (int i = 0; i < p.ring().nvars(); ++i)
    if (p.involves(i)) out.push_back(i);
  return out;
}

// Scale a rational polynomial to primitive integer coefficients, positive leading coefficient.
inline Poly primitive_rational(const Poly& p) {
  if (p.is_zero()) return p;
  mpz_class l = 1, g = 0;
  for (auto& [m, c] : p.terms()) l = lcm(l, c.rational().get_den());
  for (auto& [m, c] : p.terms()) g = gcd(g, mpz_class(c.rational() * l));
  mpq_class s(l, g);
  if (p.lead_coeff().rational() < 0) s = -s;
  return Scalar(s) * p;
}

// Canonical associate: primitive integral over Q, monic otherwise.
inline Poly normalize_unit(const Poly& p) {
  if (p.is_zero()) return p;
  if (p.field().is_rational()) return primitive_rational(p);
  return p.monic();
}

// Pseudo-remainder of a by b with respect to variable v.
inline Poly prem(const Poly& a, const Poly& b, int v) {
  int db = b.degree_in(v);
  Poly lb = b.lc_in(v);
  Poly r = a;
  int da = a.degree_in(v);
  if (da < db) return r;
  int steps = 0;
  Mono xv;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    int dr = r.degree_in(v);
    Poly lr = r.lc_in(v);
    Mono s;
    s[v] = dr - db;
    r = lb * r - lr * b.mul_term(s, Scalar(r.field(), 1));
    ++steps;
  }
  int extra = da - db + 1 - steps;
  if (extra > 0) r = lb.pow(extra) * r;
  return r;
}

// Resultant with respect to variable v (subresultant PRS).
inline Poly resultant(const Poly& f, const Poly& g, int v) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
  Ring R = f.ring();
  Poly one(R, Scalar(R.field(), 1));
  Poly A = f, B = g;
  int s = 1;
  if (A.degree_in(v) < B.degree_in(v)) {
    std::swap(A, B);
    if ((A.degree_in(v) % 2) && (B.degree_in(v) % 2)) s = -s;
  }
  if (B.degree_in(v) == 0) return B.pow(A.degree_in(v));
  Poly gg = one, h = one;
  for (;;) {
    int da = A.degree_in(v), db = B.degree_in(v);
    int delta = da - db;
    if ((da % 2) && (db % 2)) s = -s;
    Poly R1 = prem(A, B, v);
    if (R1.is_zero()) return Poly(R);
    A = B;
    B = divide_or_throw(R1, gg * h.pow(delta));
    gg = A.lc_in(v);
    if (delta == 0) {
    } else if (delta == 1) {
      h = gg;
    } else {
      h = divide_or_throw(gg.pow(delta), h.pow(delta - 1));
    }
    if (B.degree_in(v) == 0) break;
  }
  int da = A.degree_in(v);
  Poly res = da == 0 ? one : divide_or_throw(B.pow(da), h.pow(da - 1));
  return s < 0 ? -res : res;
}

inline Poly resultant(const Poly& f, const Poly& g, const std::string& v) { return resultant(f, g, f.ring().index(v)); }

Poly poly_gcd(const Poly& a, const Poly& b);

// gcd of the coefficients of p with respect to v.
inline Poly content_in(const Poly& p, int v) {
  Poly c(p.ring());
  for (auto& k : p.coeffs_in(v)) {
    if (k.is_zero()) continue;
    c = c.is_zero() ? normalize_unit(k) : poly_gcd(c, k);
    if (c.is_constant()) break;
  }
  return c;
}

inline Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalize_unit(b);
  if (b.is_zero()) return normalize_unit(a);
  Ring R = a.ring();
  int v = -1;
  for (int i = R.nvars() - 1; i >= 0 && v < 0; --i)
    if (a.involves(i) || b.involves(i)) v = i;
  Poly one(R, Scalar(R.field(), 1));
  if (v < 0) return one;
  if (!a.involves(v)) return poly_gcd(a, content_in(b, v));
  if (!b.involves(v)) return poly_gcd(content_in(a, v), b);
  Poly ca = content_in(a, v), cb = content_in(b, v);
  Poly gc = poly_gcd(ca, cb);
  Poly pa = divide_or_throw(a, ca), pb = divide_or_throw(b, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  for (;;) {
    Poly r = prem(pa, pb, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      pb = one;
      break;
    }
    pa = pb;
    pb = divide_or_throw(r, content_in(r, v)).monic();
  }
  return normalize_unit(gc * divide_or_throw(pb, content_in(pb, v)));
}

struct SquarefreeFactor {
  Poly factor;
  int multiplicity;
};

namespace detail {

inline void squarefree_rec(const Poly& f, std::vector<SquarefreeFactor>& out) {
  if (f.is_constant()) return;
  int v = support_vars(f).back();
  Poly c = content_in(f, v);
  Poly p = divide_or_throw(f, c);
  squarefree_rec(c, out);
  Poly dp = p.derivative(v);
  Poly a0 = poly_gcd(p, dp);
  Poly b = divide_or_throw(p, a0), cc = divide_or_throw(dp, a0);
  Poly d = cc - b.derivative(v);
  for (int i = 1; b.degree_in(v) > 0; ++i) {
    Poly a = poly_gcd(b, d);
    b = divide_or_throw(b, a);
    cc = divide_or_throw(d, a);
    d = cc - b.derivative(v);
    if (!a.is_constant()) out.push_back({normalize_unit(a), i});
  }
}

}  // namespace detail

// f = c * prod g_i^{e_i}, g_i squarefree pairwise coprime; one entry per multiplicity, descending.
inline std::vector<SquarefreeFactor> squarefree_factor(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_factor of zero");
  std::vector<SquarefreeFactor> raw;
  detail::squarefree_rec(f, raw);
  std::map<int, Poly> merged;
  for (auto& [g, e] : raw) {
    auto it = merged.find(e);
    if (it == merged.end()) {
      merged.emplace(e, g);
    } else {
      it->second = normalize_unit(it->second * g);
    }
  }
  std::vector<SquarefreeFactor> out;
  for (auto it = merged.rbegin(); it != merged.rend(); ++it) out.push_back({it->second, it->first});
  return out;
}

inline bool is_squarefree(const Poly& f) {
  for (auto& s : squarefree_factor(f))
    if (s.multiplicity > 1) return false;
  return true;
}

namespace detail {

using Series = std::vector<UPolyQ>;  // coefficients of x^k, entries polynomials in y

inline Series series_mul(const Series& a, const Series& b, size_t n) {
  Series c(std::min(n, a.size() + b.size() - 1));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size() && i + j < c.size(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
  return c;
}

// Factor a homogeneous trivariate rational polynomial (ring with three variables).
inline std::vector<Poly> factor_homogeneous(const Poly& F) {
  const Ring& R = F.ring();
  int d = F.total_degree();
  if (d <= 1) return {primitive_rational(F)};
  Poly X = Poly::var(R, 0), Y = Poly::var(R, 1), Z = Poly::var(R, 2);
  // linear change making Y^d appear
  long ci = 0, cj = 0;
  {
    bool ok = false;
    for (long s = 0; !ok; ++s)
      for (long i = -s; i <= s && !ok; ++i)
        for (long j : {s - std::labs(i), -(s - std::labs(i))}) {
          if (F.evaluate({Scalar(i), Scalar(1), Scalar(j)}).is_zero()) continue;
          ci = i;
          cj = j;
          ok = true;
          break;
        }
  }
  Poly FA = F.substitute({X + Scalar(ci) * Y, Y, Z + Scalar(cj) * Y}, R);
  Ring R2(Field(), {"x", "y"});
  Poly x2 = Poly::var(R2, 0), y2 = Poly::var(R2, 1);
  Poly f = FA.substitute({x2, y2, Poly(R2, Scalar(1))}, R2);
  Mono yd;
  yd[1] = d;
  f = f.coeff(yd).inverse() * f;
  // shift x so that f(a, y) is squarefree
  long a = 0;
  for (long s = 0;; ++s) {
    bool found = false;
    for (long cand : {s, -s}) {
      UPolyQ fa = to_upoly(f.substitute({Poly(R2, Scalar(cand)), y2}, R2), 1);
      if (gcd(fa, fa.derivative()).degree() == 0) {
        a = cand;
        found = true;
        break;
      }
    }
    if (found) break;
  }
  Poly ft = f.substitute({x2 + Poly(R2, Scalar(a)), y2}, R2);
  auto cs = ft.coeffs_in(0);
  Series fs;
  for (auto& c : cs) fs.push_back(to_upoly(c, 1));
  std::vector<UPolyQ> g;
  for (auto& [h, m] : factor_univariate(fs[0])) g.push_back(h.monic());
  if (g.size() == 1) return {primitive_rational(F)};
  size_t r = g.size();
  size_t N = static_cast<size_t>(d) + 1;
  std::vector<UPolyQ> sInv(r);
  for (size_t i = 0; i < r; ++i) {
    UPolyQ P = UPolyQ::constant(1);
    for (size_t j = 0; j < r; ++j)
      if (j != i) P = P * g[j];
    sInv[i] = inverse_mod(P, g[i]);
  }
  std::vector<Series> G(r);
  for (size_t i = 0; i < r; ++i) G[i] = Series{g[i]};
  for (size_t k = 1; k < N; ++k) {
    Series prod{UPolyQ::constant(1)};
    for (size_t i = 0; i < r; ++i) prod = series_mul(prod, G[i], k + 1);
    UPolyQ e = (k < fs.size() ? fs[k] : UPolyQ()) - (k < prod.size() ? prod[k] : UPolyQ());
    for (size_t i = 0; i < r; ++i) G[i].push_back((e * sInv[i]) % g[i]);
  }
  auto to_poly = [&](const Series& s) {
    Poly p(R2);
    for (size_t k = 0; k < s.size(); ++k)
      for (int j = 0; j <= s[k].degree(); ++j) {
        Mono m;
        m[0] = static_cast<int>(k);
        m[1] = j;
        p.add_term(m, Scalar(s[k].coeff(j)));
      }
    return p;
  };
  std::vector<Poly> found;
  Poly rem = ft;
  std::vector<size_t> idx(r);
  for (size_t i = 0; i < r; ++i) idx[i] = i;
  size_t s = 1;
  while (2 * s <= idx.size()) {
    bool hit = false;
    std::vector<size_t> sel(s);
    for (size_t i = 0; i < s; ++i) sel[i] = i;
    for (;;) {
      Series prod{UPolyQ::constant(1)};
      int dy = 0;
      for (auto i : sel) {
        prod = series_mul(prod, G[idx[i]], N);
        dy += g[idx[i]].degree();
      }
      Poly H = to_poly(prod);
      bool plausible = true;
      for (auto& [m, c] : H.terms())
        if (m.deg() > dy) plausible = false;
      if (plausible) {
        if (auto q = divide_exact(rem, H)) {
          found.push_back(H);
          rem = *q;
          std::vector<size_t> nidx;
          for (size_t i = 0; i < idx.size(); ++i)
            if (std::find(sel.begin(), sel.end(), i) == sel.end()) nidx.push_back(idx[i]);
          idx = nidx;
          hit = true;
          break;
        }
      }
      int i = static_cast<int>(s) - 1;
      while (i >= 0 && sel[i] == idx.size() - s + i) --i;
      if (i < 0) break;
      ++sel[i];
      for (size_t j = i + 1; j < s; ++j) sel[j] = sel[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (!rem.is_constant()) found.push_back(rem);
  std::vector<Poly> out;
  for (auto& h : found) {
    Poly hx = h.substitute({x2 - Poly(R2, Scalar(a)), y2}, R2);
    int e = hx.total_degree();
    Poly HA(R);
    for (auto& [m, c] : hx.terms()) {
      Mono n;
      n[0] = m[0];
      n[1] = m[1];
      n[2] = e - m[0] - m[1];
      HA.add_term(n, c);
    }
    Poly H = HA.substitute({X - Scalar(ci) * Y, Y, Z - Scalar(cj) * Y}, R);
    out.push_back(primitive_rational(H));
  }
  return out;
}

}  // namespace detail

inline void sort_factors(std::vector<Poly>& fs) {
  std::sort(fs.begin(), fs.end(), [](const Poly& a, const Poly& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree();
    return a.to_string() < b.to_string();
  });
}

// Irreducible factors over Q of a squarefree rational polynomial; primitive integral, sorted.
// Supports univariate, bivariate, and homogeneous trivariate input.
inline std::vector<Poly> factor_rational(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("factor_rational of zero");
  if (!f.field().is_rational()) throw std::invalid_argument("factorization over an extension field is unsupported");
  auto vs = support_vars(f);
  std::vector<Poly> out;
  if (vs.empty()) return out;
  if (!is_squarefree(f)) throw std::invalid_argument("factor_rational requires squarefree input");
  const Ring& R = f.ring();
  if (vs.size() == 1) {
    for (auto& [u, m] : factor_univariate(to_upoly(f, vs[0]))) out.push_back(primitive_rational(from_upoly(u, R, vs[0])));
  } else if (vs.size() == 3 || (vs.size() == 2 && f.is_homogeneous() && R.nvars() == 3)) {
    if (!f.is_homogeneous()) throw std::invalid_argument("trivariate factorization requires a homogeneous polynomial");
    out = detail::factor_homogeneous(f);
  } else {
    Ring R3(Field(), {"a", "b", "c"});
    int e = f.total_degree();
    Poly H(R3);
    for (auto& [m, c] : f.terms()) {
      Mono n;
      n[0] = m[vs[0]];
      n[1] = m[vs[1]];
      n[2] = e - n[0] - n[1];
      H.add_term(n, c);
    }
    for (auto& h : detail::factor_homogeneous(H)) {
      Poly back(R);
      for (auto& [m, c] : h.terms()) {
        Mono n;
        n[vs[0]] = m[0];
        n[vs[1]] = m[1];
        back.add_term(n, c);
      }
      if (!back.is_constant()) out.push_back(primitive_rational(back));
    }
  }
  sort_factors(out);
  return out;
}

}  // namespace planecurve

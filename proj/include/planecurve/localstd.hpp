#pragma once

// Standard bases for local orderings in two variables (tangent cone algorithm).

#include "planecurve/poly.hpp"

#include <optional>

namespace planecurve {

enum class OrderKind { NegDegRevLex, NegDegLex, Weighted };

struct LocalOrdering {
  OrderKind kind = OrderKind::NegDegRevLex;
  long w1 = 1, w2 = 1;

  static LocalOrdering negdegrevlex() { return {}; }
  static LocalOrdering negdeglex() { return {OrderKind::NegDegLex, 1, 1}; }
  static LocalOrdering weighted(long a, long b) {
    if (a <= 0 || b <= 0) throw std::invalid_argument("weights must be positive");
    return {OrderKind::Weighted, a, b};
  }

  long deg(const Mono& m) const { return kind == OrderKind::Weighted ? w1 * m[0] + w2 * m[1] : m[0] + m[1]; }

  // a > b; the constant monomial is the largest.
  bool greater(const Mono& a, const Mono& b) const {
    long da = deg(a), db = deg(b);
    if (da != db) return da < db;
    if (kind == OrderKind::NegDegLex) return a[0] > b[0];
    return a[1] < b[1];
  }

  std::string name() const {
    switch (kind) {
      case OrderKind::NegDegRevLex:
        return "negdegrevlex";
      case OrderKind::NegDegLex:
        return "negdeglex";
      default:
        return "weighted(" + std::to_string(w1) + "," + std::to_string(w2) + ")";
    }
  }
};

namespace detail {

struct Term {
  Mono m;
  Scalar c;
};

// Terms sorted by the local ordering, largest first.
struct LPoly {
  std::vector<Term> t;
  bool zero() const { return t.empty(); }
  const Mono& lm() const { return t.front().m; }
  const Scalar& lc() const { return t.front().c; }
};

inline LPoly to_lpoly(const Poly& p, const LocalOrdering& o) {
  LPoly r;
  for (auto& [m, c] : p.terms()) r.t.push_back({m, c});
  std::sort(r.t.begin(), r.t.end(), [&](const Term& a, const Term& b) { return o.greater(a.m, b.m); });
  return r;
}

inline Poly from_lpoly(const LPoly& p, const Ring& r) {
  Poly q(r);
  for (auto& t : p.t) q.add_term(t.m, t.c);
  return q;
}

inline long ecart(const LPoly& p, const LocalOrdering& o) {
  long mx = 0;
  for (auto& t : p.t) mx = std::max(mx, o.deg(t.m));
  return mx - o.deg(p.lm());
}

// h - c * x^s * g, dropping terms with ordering degree >= cut (cut < 0: keep all).
inline LPoly sub_mul(const LPoly& h, const Scalar& c, const Mono& s, const LPoly& g, const LocalOrdering& o,
                     long cut) {
  LPoly r;
  r.t.reserve(h.t.size() + g.t.size());
  size_t i = 0, j = 0;
  while (i < h.t.size() || j < g.t.size()) {
    if (j >= g.t.size()) {
      r.t.push_back(h.t[i++]);
      continue;
    }
    Mono gm = g.t[j].m + s;
    if (i >= h.t.size() || o.greater(gm, h.t[i].m)) {
      if (cut < 0 || o.deg(gm) < cut) r.t.push_back({gm, -(c * g.t[j].c)});
      ++j;
    } else if (o.greater(h.t[i].m, gm)) {
      r.t.push_back(h.t[i++]);
    } else {
      Scalar v = h.t[i].c - c * g.t[j].c;
      if (!v.is_zero()) r.t.push_back({gm, v});
      ++i;
      ++j;
    }
  }
  if (cut >= 0) {
    std::vector<Term> kept;
    for (auto& t : r.t)
      if (o.deg(t.m) < cut) kept.push_back(t);
    r.t.swap(kept);
  }
  return r;
}

inline void make_monic(LPoly& p) {
  if (p.zero() || p.lc().is_one()) return;
  Scalar inv = p.lc().inverse();
  for (auto& t : p.t) t.c = t.c * inv;
}

inline LPoly spoly(const LPoly& f, const LPoly& g, const LocalOrdering& o, long cut) {
  Mono l;
  for (int i = 0; i < kMaxVars; ++i) l[i] = std::max(f.lm()[i], g.lm()[i]);
  LPoly a;
  Mono sf = l - f.lm();
  for (auto& t : f.t) {
    Mono m = t.m + sf;
    if (cut < 0 || o.deg(m) < cut) a.t.push_back({m, t.c / f.lc()});
  }
  return sub_mul(a, g.lc().inverse(), l - g.lm(), g, o, cut);
}

// Minimal generators of a monomial ideal in two variables, sorted by u-exponent.
inline std::vector<Mono> minimize_monomials(std::vector<Mono> ms) {
  std::vector<Mono> out;
  for (size_t i = 0; i < ms.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < ms.size() && !redundant; ++j) {
      if (i == j) continue;
      if (ms[j].divides(ms[i]) && (ms[j] != ms[i] || j < i)) redundant = true;
    }
    if (!redundant) out.push_back(ms[i]);
  }
  std::sort(out.begin(), out.end(), [](const Mono& a, const Mono& b) { return a[0] < b[0]; });
  return out;
}

// Monomials outside a monomial ideal (minimal generators sorted by u-exponent); nullopt if infinite.
inline std::optional<std::vector<Mono>> staircase(const std::vector<Mono>& gens) {
  if (gens.empty() || gens.front()[0] != 0 || gens.back()[1] != 0) return std::nullopt;
  std::vector<Mono> out;
  int amax = gens.back()[0];
  for (int a = 0; a < amax; ++a) {
    int h = -1;
    for (auto& g : gens)
      if (g[0] <= a && (h < 0 || g[1] < h)) h = g[1];
    for (int b = 0; b < h; ++b) {
      Mono m;
      m[0] = a;
      m[1] = b;
      out.push_back(m);
    }
  }
  return out;
}

}  // namespace detail

class StdBasis {
 public:
  StdBasis(Ring r, LocalOrdering o) : ring_(std::move(r)), ord_(o) {}

  const Ring& ring() const { return ring_; }
  const LocalOrdering& ordering() const { return ord_; }
  std::vector<Poly> generators() const {
    std::vector<Poly> out;
    for (auto& g : gens_) out.push_back(detail::from_lpoly(g, ring_));
    return out;
  }
  const std::vector<Mono>& leading_ideal() const { return lead_; }
  bool is_unit_ideal() const { return lead_.size() == 1 && lead_[0].deg() == 0; }

  // ordering degree from which every monomial lies in the ideal; -1 if none
  long corner() const { return corner_; }

  const std::vector<detail::LPoly>& lgens() const { return gens_; }

 private:
  friend StdBasis std_basis(const std::vector<Poly>&, const LocalOrdering&);
  friend StdBasis make_std_basis(Ring, LocalOrdering, std::vector<detail::LPoly>);

  Ring ring_;
  LocalOrdering ord_;
  std::vector<detail::LPoly> gens_;
  std::vector<Mono> lead_;
  long corner_ = -1;
};

namespace detail {

inline long corner_of(const std::vector<Mono>& lead, const LocalOrdering& o) {
  auto st = staircase(minimize_monomials(lead));
  if (!st) return -1;
  long k = 0;
  for (auto& m : *st) k = std::max(k, o.deg(m) + 1);
  return k;
}

// Mora's weak normal form of h with respect to T (T may grow).
inline LPoly nf_mora(LPoly h, std::vector<LPoly> T, const LocalOrdering& o, long cut) {
  while (!h.zero()) {
    long best = -1;
    size_t bi = 0;
    for (size_t i = 0; i < T.size(); ++i) {
      if (!T[i].lm().divides(h.lm())) continue;
      long e = ecart(T[i], o);
      if (best < 0 || e < best) {
        best = e;
        bi = i;
      }
    }
    if (best < 0) return h;
    if (best > ecart(h, o)) T.push_back(h);
    const LPoly& g = T[bi];
    LPoly nh = sub_mul(h, h.lc() / g.lc(), h.lm() - g.lm(), g, o, cut);
    h = std::move(nh);
  }
  return h;
}

// Full reduction of all terms, valid once every monomial of degree >= cut lies in the ideal.
inline LPoly nf_truncated(LPoly h, const std::vector<LPoly>& G, const LocalOrdering& o, long cut) {
  LPoly done;
  std::vector<Term> kept;
  for (auto& t : h.t)
    if (o.deg(t.m) < cut) kept.push_back(t);
  h.t.swap(kept);
  while (!h.zero()) {
    const LPoly* red = nullptr;
    for (auto& g : G)
      if (g.lm().divides(h.lm())) {
        red = &g;
        break;
      }
    if (!red) {
      done.t.push_back(h.t.front());
      h.t.erase(h.t.begin());
      continue;
    }
    h = sub_mul(h, h.lc() / red->lc(), h.lm() - red->lm(), *red, o, cut);
  }
  return done;
}

}  // namespace detail

inline StdBasis make_std_basis(Ring r, LocalOrdering o, std::vector<detail::LPoly> gens) {
  StdBasis b(std::move(r), o);
  std::vector<Mono> lms;
  for (auto& g : gens) lms.push_back(g.lm());
  b.lead_ = detail::minimize_monomials(lms);
  for (auto& m : b.lead_) {
    for (auto& g : gens)
      if (g.lm() == m) {
        b.gens_.push_back(g);
        break;
      }
  }
  b.corner_ = detail::corner_of(b.lead_, o);
  return b;
}

inline StdBasis std_basis(const std::vector<Poly>& gens, const LocalOrdering& o) {
  if (gens.empty()) throw std::invalid_argument("std_basis needs at least one generator");
  Ring R = gens.front().ring();
  if (R.nvars() != 2) throw std::invalid_argument("std_basis works in two variables");
  std::vector<detail::LPoly> S;
  long cut = -1;
  auto refresh_cut = [&]() {
    std::vector<Mono> lms;
    for (auto& s : S) lms.push_back(s.lm());
    long c = detail::corner_of(lms, o);
    if (c >= 0 && (cut < 0 || c < cut)) cut = c;
  };
  for (auto& g : gens) {
    if (g.ring() != R) throw std::invalid_argument("generators in different rings");
    detail::LPoly l = detail::to_lpoly(g, o);
    if (l.zero()) continue;
    detail::make_monic(l);
    S.push_back(std::move(l));
  }
  if (S.empty()) return make_std_basis(R, o, {});
  refresh_cut();
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < S.size(); ++i)
    for (size_t j = i + 1; j < S.size(); ++j) pairs.emplace_back(i, j);
  auto lcm_deg = [&](const std::pair<size_t, size_t>& p) {
    Mono l;
    for (int k = 0; k < kMaxVars; ++k) l[k] = std::max(S[p.first].lm()[k], S[p.second].lm()[k]);
    return o.deg(l);
  };
  while (!pairs.empty()) {
    size_t bi = 0;
    for (size_t k = 1; k < pairs.size(); ++k)
      if (lcm_deg(pairs[k]) < lcm_deg(pairs[bi])) bi = k;
    auto [i, j] = pairs[bi];
    pairs.erase(pairs.begin() + static_cast<long>(bi));
    // coprime leading monomials: s-polynomial has a standard representation
    if ((S[i].lm()[0] == 0 || S[j].lm()[0] == 0) && (S[i].lm()[1] == 0 || S[j].lm()[1] == 0)) continue;
    detail::LPoly h = detail::spoly(S[i], S[j], o, cut);
    h = cut >= 0 ? detail::nf_truncated(h, S, o, cut) : detail::nf_mora(h, S, o, cut);
    if (h.zero()) continue;
    detail::make_monic(h);
    for (size_t k = 0; k < S.size(); ++k) pairs.emplace_back(k, S.size());
    S.push_back(std::move(h));
    refresh_cut();
  }
  return make_std_basis(R, o, std::move(S));
}

inline StdBasis std_basis(const std::vector<Poly>& gens) { return std_basis(gens, LocalOrdering::negdegrevlex()); }

// Number of monomials outside the leading ideal; nullopt if infinite.
inline std::optional<long> colength(const StdBasis& b) {
  auto st = detail::staircase(b.leading_ideal());
  if (!st) return std::nullopt;
  return static_cast<long>(st->size());
}

inline std::optional<long> colength(const std::vector<Poly>& gens) { return colength(std_basis(gens)); }

// Normal form: zero iff f lies in the ideal; canonical when the colength is finite.
inline Poly reduce(const Poly& f, const StdBasis& b) {
  detail::LPoly h = detail::to_lpoly(f, b.ordering());
  detail::LPoly r = b.corner() >= 0 ? detail::nf_truncated(h, b.lgens(), b.ordering(), b.corner())
                                    : detail::nf_mora(h, b.lgens(), b.ordering(), -1);
  return detail::from_lpoly(r, b.ring());
}

inline bool in_ideal(const Poly& f, const StdBasis& b) { return reduce(f, b).is_zero(); }

// Monomials under the staircase, largest first in the ordering.
inline std::vector<Mono> quotient_monomial_basis(const StdBasis& b) {
  auto st = detail::staircase(b.leading_ideal());
  if (!st) throw std::domain_error("quotient has infinite dimension");
  std::sort(st->begin(), st->end(), [&](const Mono& a, const Mono& c) { return b.ordering().greater(a, c); });
  return *st;
}

}  // namespace planecurve

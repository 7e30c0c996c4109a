#pragma once

// Local analytic and topological invariants of a germ: mu, tau, class tags, tau^es, modality.

#include "planecurve/germ.hpp"

#include <numeric>

namespace planecurve {

inline long mu(const CurveGerm& g) {
  auto c = colength(jacobian_generators(g));
  if (!c) throw std::invalid_argument("non-isolated singularity" + g.where());
  return *c;
}

inline std::vector<Poly> tjurina_generators(const CurveGerm& g) {
  return {g.equation(), g.equation().derivative(0), g.equation().derivative(1)};
}

inline long tau(const CurveGerm& g) {
  auto c = colength(tjurina_generators(g));
  if (!c) throw std::invalid_argument("non-isolated singularity" + g.where());
  return *c;
}

struct Weights {
  int w1 = 0, w2 = 0, d = 0;
  friend bool operator==(const Weights&, const Weights&) = default;
};

// Positive weights making f weighted homogeneous in the given coordinates, normalized to gcd(w1,w2) = 1.
inline std::optional<Weights> weighted_homogeneous(const Poly& f) {
  std::vector<Mono> pts;
  for (auto& [m, c] : f.terms()) pts.push_back(m);
  if (pts.size() < 2) return std::nullopt;
  const Mono& p0 = pts[0];
  const Mono* p1 = nullptr;
  for (auto& p : pts)
    if (p[0] != p0[0]) {
      p1 = &p;
      break;
    }
  if (!p1) return std::nullopt;
  long w1 = (*p1)[1] - p0[1], w2 = p0[0] - (*p1)[0];
  if (w2 < 0) {
    w1 = -w1;
    w2 = -w2;
  }
  if (w1 <= 0 || w2 <= 0) return std::nullopt;
  long g = std::gcd(w1, w2);
  w1 /= g;
  w2 /= g;
  long d = w1 * p0[0] + w2 * p0[1];
  for (auto& p : pts)
    if (w1 * p[0] + w2 * p[1] != d) return std::nullopt;
  return Weights{static_cast<int>(w1), static_cast<int>(w2), static_cast<int>(d)};
}

// Number of distinct tangent lines over the algebraic closure.
inline int distinct_tangents(const Poly& f) {
  int m = f.ord();
  const Field& K = f.field();
  std::vector<Scalar> phi(m + 1, Scalar(K, 0));
  for (auto& [mono, c] : f.terms())
    if (mono.deg() == m) phi[mono[1]] = c;
  KPoly p(K, phi);
  int n = p.degree() >= 1 ? squarefree_part(p).degree() : 0;
  return n + (phi[m].is_zero() ? 1 : 0);
}

enum class ClassKind { Smooth, ADE, BrieskornPQ, OrdinaryMultiple, QuasihomogeneousW, General };

struct ClassTag {
  ClassKind kind = ClassKind::General;
  char adeKind = 0;  // 'A', 'D', 'E' when simple
  int adeIndex = 0;
  int ordinary = 0;  // k for an ordinary k-fold point, k >= 2
  int p = 0, q = 0;  // literal a*u^p + b*v^q (or with u, v exchanged), p <= q
  std::optional<Weights> weights;
  bool quasihomogeneous = false;

  bool is_ade() const { return adeKind != 0; }
  bool is_brieskorn() const { return p > 0; }

  std::string to_string() const {
    switch (kind) {
      case ClassKind::Smooth:
        return "smooth";
      case ClassKind::ADE:
        return std::string(1, adeKind) + std::to_string(adeIndex);
      case ClassKind::BrieskornPQ:
        return "u^" + std::to_string(p) + "-v^" + std::to_string(q);
      case ClassKind::OrdinaryMultiple:
        return "ordinary " + std::to_string(ordinary) + "-fold point";
      case ClassKind::QuasihomogeneousW:
        return "quasihomogeneous w=(" + std::to_string(weights->w1) + "," + std::to_string(weights->w2) +
               ") d=" + std::to_string(weights->d);
      case ClassKind::General:
        return quasihomogeneous ? "general (quasihomogeneous)" : "general";
    }
    return "?";
  }
};

// Exponents (p on u, q on v) when f is a two-term binomial c1*u^p + c2*v^q.
inline std::optional<std::pair<int, int>> binomial_exponents(const Poly& f) {
  if (f.terms().size() != 2) return std::nullopt;
  int P = 0, Q = 0;
  for (auto& [m, c] : f.terms()) {
    if (m[0] > 0 && m[1] == 0) P = m[0];
    else if (m[1] > 0 && m[0] == 0) Q = m[1];
  }
  if (P < 2 || Q < 2) return std::nullopt;
  return std::make_pair(P, Q);
}

inline ClassTag classify(const CurveGerm& g, long mu_value, long tau_value) {
  ClassTag t;
  const Poly& f = g.equation();
  int m = multiplicity(g);
  t.quasihomogeneous = tau_value == mu_value;
  if (m <= 1) {
    t.kind = ClassKind::Smooth;
    return t;
  }
  int nt = distinct_tangents(f);
  if (m == 2) {
    t.adeKind = 'A';
    t.adeIndex = static_cast<int>(mu_value);
  } else if (m == 3 && nt >= 2) {
    t.adeKind = 'D';
    t.adeIndex = static_cast<int>(mu_value);
  } else if (m == 3 && mu_value >= 6 && mu_value <= 8) {
    t.adeKind = 'E';
    t.adeIndex = static_cast<int>(mu_value);
  }
  if (nt == m) t.ordinary = m;
  if (auto pq = binomial_exponents(f)) {
    t.p = std::min(pq->first, pq->second);
    t.q = std::max(pq->first, pq->second);
  }
  t.weights = weighted_homogeneous(f);
  if (m == 2) t.kind = ClassKind::ADE;
  else if (t.is_brieskorn()) t.kind = ClassKind::BrieskornPQ;
  else if (t.is_ade()) t.kind = ClassKind::ADE;
  else if (t.ordinary) t.kind = ClassKind::OrdinaryMultiple;
  else if (t.weights) t.kind = ClassKind::QuasihomogeneousW;
  else t.kind = ClassKind::General;
  return t;
}

inline ClassTag classify(const CurveGerm& g) { return classify(g, mu(g), tau(g)); }

// tau^es of u^p - v^q, p <= q, in closed form.
inline long tau_es_brieskorn_formula(long p, long q) {
  long eps = q % p == 0 ? 1 : 0;
  return ((p + 1) * (q + 1) - std::gcd(p, q) - 5) / 2 - q / p + eps;
}

// tau^es of an ordinary k-fold point in closed form.
inline long tau_es_ordinary_formula(long k) { return k * (k + 1) / 2 - 2; }

// Monomials of weighted degree >= d, minimal generators.
inline std::vector<Poly> weighted_monomials(const Ring& r, const Weights& w) {
  std::vector<Poly> out;
  for (int a = 0;; ++a) {
    int rest = w.d - w.w1 * a;
    int b = rest <= 0 ? 0 : (rest + w.w2 - 1) / w.w2;
    Mono m;
    m[0] = a;
    m[1] = b;
    out.push_back(Poly::term(r, m, Scalar(1)));
    if (b == 0) break;
  }
  return out;
}

struct EsIdeal {
  std::vector<Poly> generators;
  std::string source;
};

// Generators of I^es when they are available.
inline std::optional<EsIdeal> es_ideal(const CurveGerm& g, const ClassTag& t) {
  auto gens = tjurina_generators(g);
  if (t.kind == ClassKind::Smooth) return EsIdeal{{Poly(g.ring(), Scalar(1))}, "smooth"};
  if (t.is_ade()) return EsIdeal{gens, "simple singularity: I^es equals the Tjurina ideal"};
  if (t.weights) {
    for (auto& m : weighted_monomials(g.ring(), *t.weights)) gens.push_back(m);
    return EsIdeal{gens, "weighted homogeneous: Jacobian ideal plus monomials of weighted degree >= d"};
  }
  if (t.ordinary) {
    int k = t.ordinary;
    for (int a = 0; a <= k; ++a) {
      Mono m;
      m[0] = a;
      m[1] = k - a;
      gens.push_back(Poly::term(g.ring(), m, Scalar(1)));
    }
    auto c = colength(gens);
    if (c && *c == tau_es_ordinary_formula(k)) return EsIdeal{gens, "ordinary point: Tjurina ideal plus m^k"};
  }
  return std::nullopt;
}

struct TauEs {
  long value = 0;
  std::string source;
};

inline std::optional<TauEs> tau_es(const CurveGerm& g, const ClassTag& t, long mu_value) {
  if (t.kind == ClassKind::Smooth) return TauEs{0, "smooth"};
  if (t.is_ade()) return TauEs{mu_value, "simple singularity: tau^es = mu"};
  if (auto es = es_ideal(g, t)) {
    auto c = colength(es->generators);
    if (c) return TauEs{*c, es->source};
  }
  return std::nullopt;
}

inline std::optional<TauEs> tau_es(const CurveGerm& g) {
  long m = mu(g);
  return tau_es(g, classify(g, m, tau(g)), m);
}

// dim of (O/I^es) tensor O_{C_i}: colength of I^es + (f_i).
inline std::optional<long> tau_es_tensor_component(const CurveGerm& g, const ClassTag& t, const CurveGerm& comp) {
  auto es = es_ideal(g, t);
  if (!es) return std::nullopt;
  Ring R = g.field().is_rational() ? comp.ring() : g.ring();
  std::vector<Poly> gens;
  for (auto& p : es->generators) gens.push_back(p.in_ring(R));
  gens.push_back(comp.equation().in_ring(R));
  return colength(gens);
}

inline std::optional<long> tau_es_tensor_component(const CurveGerm& g, const CurveGerm& comp) {
  return tau_es_tensor_component(g, classify(g), comp);
}

struct SingularityRecord {
  CurveGerm germ;
  int m = 0;
  long mu = 0;
  long tau = 0;
  std::optional<long> tauEs;
  std::string tauEsSource;
  long delta = 0;
  long r = 0;
  ClassTag tag;
  std::optional<long> modality;
  TopType topType;
};

inline SingularityRecord analyze_germ(const CurveGerm& g) {
  SingularityRecord s;
  s.germ = g;
  s.m = multiplicity(g);
  s.mu = mu(g);
  s.tau = tau(g);
  s.tag = classify(g, s.mu, s.tau);
  if (auto te = tau_es(g, s.tag, s.mu)) {
    s.tauEs = te->value;
    s.tauEsSource = te->source;
    s.modality = s.mu - te->value;
  }
  auto tree = resolve(g);
  auto db = delta_branches(tree);
  s.delta = db.delta;
  s.r = db.r;
  s.topType = top_type(tree);
  return s;
}

inline std::optional<long> modality(const CurveGerm& g) {
  long m = mu(g);
  auto te = tau_es(g, classify(g, m, tau(g)), m);
  if (!te) return std::nullopt;
  return m - te->value;
}

}  // namespace planecurve

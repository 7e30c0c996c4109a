#pragma once

// Projective plane curves: components, singular points, generic polars and the smoothness criteria.

#include "planecurve/exactalg.hpp"
#include "planecurve/isod.hpp"

#include <array>
#include <future>
#include <random>

namespace planecurve {

class CurveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violations of the hypotheses on an auxiliary curve, one message per violated condition.
class ConditionError : public CurveError {
 public:
  explicit ConditionError(std::vector<std::string> v) : CurveError(join(v)), violations(std::move(v)) {}
  std::vector<std::string> violations;

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (auto& m : v) s += (s.empty() ? "" : "; ") + m;
    return s;
  }
};

struct ProjPoint {
  Field field;
  std::array<Scalar, 3> coords;
  int conj = 1;  // number of Galois conjugates represented

  // coordinate set to 1; the local germ lives in the complementary affine chart
  int chart() const {
    for (int i = 2; i >= 0; --i)
      if (!coords[i].is_zero()) return i;
    return -1;
  }
  std::string label() const {
    std::string s = "(" + coords[0].to_string() + ":" + coords[1].to_string() + ":" + coords[2].to_string() + ")";
    if (!field.is_rational()) s += " [" + field.modulus().to_string("@") + " = 0]";
    return s;
  }
};

inline ProjPoint make_point(const Field& K, const Scalar& x, const Scalar& y, const Scalar& z) {
  ProjPoint p;
  p.field = K;
  p.coords = {x.in_field(K), y.in_field(K), z.in_field(K)};
  int j = p.chart();
  if (j < 0) throw std::invalid_argument("(0:0:0) is not a point");
  Scalar inv = p.coords[j].inverse();
  for (auto& c : p.coords) c = c * inv;
  p.conj = K.degree();
  return p;
}

// Affine equation of F around p: the chart coordinate is set to 1, the others are shifted to u, v.
inline Poly local_equation(const Poly& F, const ProjPoint& p) {
  Ring L = detail::local_ring(p.field);
  int j = p.chart(), k = 0;
  std::vector<Poly> imgs;
  for (int i = 0; i < 3; ++i) {
    if (i == j) imgs.push_back(Poly(L, Scalar(p.field, 1)));
    else imgs.push_back(Poly::var(L, k++) + Poly(L, p.coords[i]));
  }
  return F.substitute(imgs, L);
}

struct CurveComponent {
  Poly F;
  int degree = 0;
};

struct SingularPoint {
  std::optional<ProjPoint> point;  // absent for abstract local data
  std::string label;
  long conj = 1;
  SingularityRecord record;
  nlohmann::json resolution;
  std::vector<int> components;  // components through the point
  std::vector<CurveGerm> componentGerms;
  std::vector<long> componentBranches;
  std::vector<long> componentTau;
};

struct ProjectiveCurve {
  Poly F;
  int degree = 0;
  std::vector<CurveComponent> components;
  std::vector<SingularPoint> singularPoints;
};

namespace detail {

inline void check_plane_equation(const Poly& F) {
  if (F.ring().nvars() != 3) throw CurveError("curve equation must have three variables");
  if (!F.field().is_rational()) throw CurveError("curve equation must have rational coefficients");
  if (F.is_zero() || F.total_degree() < 1) throw CurveError("curve equation must have positive degree");
  if (!F.is_homogeneous()) throw CurveError("curve equation is not homogeneous");
}

// f(x0, y) for f in Q[x, y].
inline KPoly specialize_first(const Poly& f, const Scalar& x0) {
  const Field& K = x0.field();
  int n = std::max(0, f.degree_in(1));
  std::vector<Scalar> c(n + 1, Scalar(K, 0));
  for (auto& [m, a] : f.terms()) c[m[1]] += a.in_field(K) * x0.pow(m[0]);
  return KPoly(K, std::move(c));
}

inline Scalar rational_root(const UPolyQ& linear) { return Scalar(mpq_class(-linear.coeff(0) / linear.coeff(1))); }

inline std::vector<ProjPoint> points_at_infinity(const Poly& F) {
  std::vector<ProjPoint> out;
  std::array<Poly, 3> d{F.derivative(0), F.derivative(1), F.derivative(2)};
  std::vector<Scalar> e{Scalar(1), Scalar(0), Scalar(0)};
  bool sing = true;
  for (auto& p : d) sing = sing && p.evaluate(e).is_zero();
  if (sing) out.push_back(make_point(Field(), 1, 0, 0));
  Ring T(Field(), {"t"});
  Poly t = Poly::var(T, 0), one(T, Scalar(1)), zero(T);
  UPolyQ g;
  bool any = false;
  for (auto& p : d) {
    Poly s = p.substitute({t, one, zero}, T);
    if (s.is_zero()) continue;
    UPolyQ u = to_upoly(s, 0);
    g = any ? gcd(g, u) : u;
    any = true;
  }
  if (!any) throw CurveError("positive-dimensional singular locus on the line Z = 0");
  if (g.degree() < 1) return out;
  for (auto& [phi, e2] : factor_univariate(squarefree_part(g))) {
    if (phi.degree() == 1) {
      out.push_back(make_point(Field(), rational_root(phi), 1, 0));
    } else {
      Field K = Field::extension(phi);
      out.push_back(make_point(K, Scalar::generator(K), 1, 0));
    }
  }
  return out;
}

// Singular points in Z != 0: eliminate y with resultants after a shear x -> x + s*y.
inline std::vector<ProjPoint> affine_points(const Poly& F) {
  Ring A(Field(), {"x", "y"});
  Poly x = Poly::var(A, 0), y = Poly::var(A, 1), one(A, Scalar(1));
  Poly f = F.substitute({x, y, one}, A);
  if (f.is_constant()) return {};
  std::string residual;
  for (long s : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 5L, -5L, 7L}) {
    Poly fs = f.substitute({x + Scalar(s) * y, y}, A);
    if (fs.degree_in(1) < 1 || !fs.lc_in(1).is_constant()) continue;
    Poly fx = fs.derivative(0), fy = fs.derivative(1);
    if (fy.is_constant()) return {};
    Poly r1 = resultant(fs, fy, 1);
    if (r1.is_zero()) throw CurveError("positive-dimensional singular locus");
    if (r1.is_constant()) return {};
    UPolyQ R = to_upoly(r1, 0);
    if (!fx.is_zero()) {
      Poly r2 = resultant(fs, fx, 1);
      if (!r2.is_zero()) R = r2.is_constant() ? UPolyQ::constant(1) : gcd(R, to_upoly(r2, 0));
    }
    std::vector<ProjPoint> pts;
    bool ok = true;
    if (R.degree() >= 1) {
      for (auto& [phi, e] : factor_univariate(squarefree_part(R))) {
        Field K = phi.degree() == 1 ? Field() : Field::extension(phi);
        Scalar x0 = phi.degree() == 1 ? rational_root(phi) : Scalar::generator(K);
        KPoly g = gcd(gcd(specialize_first(fs, x0), specialize_first(fx, x0)), specialize_first(fy, x0));
        if (g.degree() < 1) continue;
        KPoly h = squarefree_part(g);
        if (K.is_rational()) {
          for (auto& [psi, e2] : factor_univariate(h.to_rational())) {
            if (psi.degree() == 1) {
              Scalar y0 = rational_root(psi);
              pts.push_back(make_point(Field(), x0 + Scalar(s) * y0, y0, 1));
            } else {
              Field L = Field::extension(psi);
              Scalar eta = Scalar::generator(L);
              pts.push_back(make_point(L, x0.in_field(L) + Scalar(s) * eta, eta, 1));
            }
          }
        } else if (h.degree() == 1) {
          Scalar y0 = -h.coeff(0) / h.coeff(1);
          pts.push_back(make_point(K, x0 + Scalar(s) * y0, y0, 1));
        } else {
          ok = false;
          residual = "x: " + phi.to_string("x") + ", y over Q(x) of degree " + std::to_string(h.degree());
          break;
        }
      }
    }
    if (ok) return pts;
  }
  throw CurveError("singular points need a field tower; residual polynomial " + residual);
}

inline std::string point_order_key(const ProjPoint& p) { return std::to_string(p.conj) + "|" + p.label(); }

}  // namespace detail

inline ProjectiveCurve decompose(const Poly& F) {
  detail::check_plane_equation(F);
  for (auto& s : squarefree_factor(F))
    if (s.multiplicity > 1)
      throw CurveError("curve is not reduced: repeated factor (" + s.factor.to_string() + ")^" + std::to_string(s.multiplicity));
  ProjectiveCurve C;
  C.F = F;
  C.degree = F.total_degree();
  int sum = 0;
  for (auto& g : factor_rational(F)) {
    C.components.push_back({g, g.total_degree()});
    sum += g.total_degree();
  }
  if (sum != C.degree) throw std::logic_error("component degrees do not add up");
  return C;
}

inline std::vector<ProjPoint> singular_points(const ProjectiveCurve& C) {
  auto out = detail::points_at_infinity(C.F);
  for (auto& p : detail::affine_points(C.F)) out.push_back(p);
  std::sort(out.begin(), out.end(), [](const ProjPoint& a, const ProjPoint& b) {
    return detail::point_order_key(a) < detail::point_order_key(b);
  });
  return out;
}

inline bool is_singular_at(const Poly& F, const ProjPoint& p) {
  std::vector<Scalar> pt(p.coords.begin(), p.coords.end());
  for (int i = 0; i < 3; ++i)
    if (!F.derivative(i).evaluate(pt).is_zero()) return false;
  return true;
}

// Local data from the germs of the components through a point (component index, local equation).
inline SingularPoint make_local_point(std::string label, long conj, const std::vector<std::pair<int, Poly>>& comps) {
  if (comps.empty()) throw CurveError("no component passes through " + label);
  SingularPoint sp;
  sp.label = std::move(label);
  sp.conj = conj;
  Poly f = comps[0].second;
  for (size_t i = 1; i < comps.size(); ++i) f *= comps[i].second;
  CurveGerm g(f, sp.label);
  sp.record = analyze_germ(g);
  sp.resolution = resolve(g).to_json();
  for (auto& [i, e] : comps) {
    CurveGerm cg(e, sp.label, false);
    sp.components.push_back(i);
    sp.componentGerms.push_back(cg);
    sp.componentBranches.push_back(delta_branches(resolve(cg)).r);
    sp.componentTau.push_back(tau(cg));
  }
  return sp;
}

inline SingularPoint analyze_point(const ProjectiveCurve& C, const ProjPoint& p) {
  std::vector<std::pair<int, Poly>> comps;
  for (size_t i = 0; i < C.components.size(); ++i) {
    Poly e = local_equation(C.components[i].F, p);
    if (e.constant_term().is_zero()) comps.emplace_back(static_cast<int>(i), e);
  }
  SingularPoint sp = make_local_point(p.label(), p.conj, comps);
  sp.point = p;
  return sp;
}

// Full census; `points` bypasses the singular point search (each listed point is checked).
inline ProjectiveCurve analyze_curve(const Poly& F, const std::optional<std::vector<ProjPoint>>& points = std::nullopt) {
  ProjectiveCurve C = decompose(F);
  std::vector<ProjPoint> pts;
  if (points) {
    for (auto& p : *points)
      if (!is_singular_at(F, p)) throw CurveError("listed point " + p.label() + " is not a singular point of the curve");
    pts = *points;
  } else {
    pts = singular_points(C);
  }
  // points are independent; results are collected in census order
  std::vector<std::future<SingularPoint>> jobs;
  for (auto& p : pts) jobs.push_back(std::async(std::launch::async, [&C, p] { return analyze_point(C, p); }));
  for (auto& j : jobs) C.singularPoints.push_back(j.get());
  return C;
}

// ---------------------------------------------------------------- polar

struct PolarCurve {
  Poly G;
  std::array<long, 3> direction{0, 0, 0};  // (alpha, beta, gamma)
  int attempts = 0;
  std::vector<CurveGerm> germs;  // aligned with the singular points of C
  std::vector<std::string> caveats;
};

namespace detail {

inline bool concurrent_lines(const ProjectiveCurve& C) {
  if (C.degree < 3) return false;
  std::vector<std::array<mpq_class, 3>> rows;
  for (auto& c : C.components) {
    if (c.degree != 1) return false;
    std::array<mpq_class, 3> r{0, 0, 0};
    for (auto& [m, a] : c.F.terms())
      for (int i = 0; i < 3; ++i)
        if (m[i]) r[i] = a.rational();
    rows.push_back(r);
  }
  // rank <= 2 iff every 3x3 minor vanishes
  for (size_t a = 0; a < rows.size(); ++a)
    for (size_t b = a + 1; b < rows.size(); ++b)
      for (size_t c = b + 1; c < rows.size(); ++c) {
        auto& p = rows[a];
        auto& q = rows[b];
        auto& r = rows[c];
        mpq_class det = p[0] * (q[1] * r[2] - q[2] * r[1]) - p[1] * (q[0] * r[2] - q[2] * r[0]) + p[2] * (q[0] * r[1] - q[1] * r[0]);
        if (det != 0) return false;
      }
  return true;
}

inline Poly polar_of(const Poly& F, const std::array<long, 3>& dir) {
  Poly G(F.ring());
  for (int i = 0; i < 3; ++i)
    if (dir[i]) G += Scalar(dir[i]) * F.derivative(i);
  return G;
}

// Local structure the polar tables rely on; empty string when fine.
inline std::string polar_germ_defect(const SingularPoint& sp, const Poly& polar_local) {
  int m = sp.record.m;
  if (polar_local.is_zero()) return "polar contains the point's neighborhood";
  if (!polar_local.constant_term().is_zero()) return "polar misses the point";
  if (polar_local.ord() != m - 1) return "polar germ has multiplicity " + std::to_string(polar_local.ord());
  const ClassTag& t = sp.record.tag;
  if (t.is_brieskorn() && t.p == t.q && m >= 3 && distinct_tangents(polar_local) != m - 1)
    return "polar germ is not an ordinary point";
  return {};
}

inline bool irreducible_over_q(const Poly& G) {
  if (G.total_degree() <= 1) return true;
  if (!is_squarefree(G)) return false;
  return factor_rational(G).size() == 1;
}

}  // namespace detail

inline constexpr int kPolarRetryBudget = 16;

inline PolarCurve generic_polar(const ProjectiveCurve& C, std::uint64_t seed, int budget = kPolarRetryBudget) {
  if (detail::concurrent_lines(C)) throw CurveError("curve is a union of d >= 3 concurrent lines; its polars are reducible");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-9, 9);
  std::string last;
  for (int attempt = 1; attempt <= budget; ++attempt) {
    std::array<long, 3> dir{coef(rng), coef(rng), coef(rng)};
    if (dir[0] == 0 && dir[1] == 0 && dir[2] == 0) {
      last = "zero direction";
      continue;
    }
    PolarCurve P;
    P.G = detail::polar_of(C.F, dir);
    P.direction = dir;
    P.attempts = attempt;
    if (P.G.is_zero()) {
      last = "zero polar";
      continue;
    }
    bool ok = true;
    for (auto& sp : C.singularPoints) {
      Poly loc = local_equation(P.G, *sp.point);
      std::string why = detail::polar_germ_defect(sp, loc);
      if (!why.empty()) {
        last = why + " at " + sp.label;
        ok = false;
        break;
      }
      P.germs.emplace_back(loc, sp.label, false);
    }
    if (!ok) continue;
    if (!detail::irreducible_over_q(P.G)) {
      last = "polar is reducible over Q";
      continue;
    }
    P.caveats.push_back("polarAbsolutelyIrreducibleAssumed");
    return P;
  }
  throw CurveError("generic polar: retry budget exhausted (" + last + ")");
}

// ---------------------------------------------------------------- reports

enum class Verdict { SmoothCertified, NotDecided };

inline std::string to_string(Verdict v) { return v == Verdict::SmoothCertified ? "smoothCertified" : "notDecided"; }

struct TermEntry {
  std::string point;
  long conj = 1;
  long value = 0;
  std::string term;
  friend bool operator==(const TermEntry&, const TermEntry&) = default;
};

struct IsodEntry {
  std::string point;
  long conj = 1;
  IsodValue isod;
  friend bool operator==(const IsodEntry&, const IsodEntry&) = default;
};

struct ComponentCheck {
  int component = -1;  // -1 for the whole curve
  long lhs = 0;
  long fixed = 0;  // part of the right-hand side not attached to singular points
  std::vector<TermEntry> terms;
  std::vector<IsodEntry> isodSources;
  long rhs = 0;
  bool satisfied = false;

  void evaluate() {
    rhs = fixed;
    for (auto& t : terms) rhs += t.conj * t.value;
    for (auto& i : isodSources) rhs -= i.conj * i.isod.value;
    satisfied = lhs > rhs;
  }
  friend bool operator==(const ComponentCheck&, const ComponentCheck&) = default;
};

inline const std::string kRealizationConsequence =
    "every combination of local deformations of the singular points is realized by an embedded deformation of C";

struct CriterionReport {
  std::string criterion;
  std::string scheme;
  std::vector<ComponentCheck> perComponent;
  bool evaluable = true;
  Verdict verdict = Verdict::NotDecided;
  long expectedDimension = 0;
  std::optional<long> dimension;
  std::vector<std::string> caveats;
  std::vector<std::string> diagnostics;
  std::vector<std::string> consequences;

  bool certified() const { return verdict == Verdict::SmoothCertified; }

  void finalize() {
    bool all = evaluable;
    for (auto& c : perComponent) {
      c.evaluate();
      all = all && c.satisfied;
    }
    verdict = all ? Verdict::SmoothCertified : Verdict::NotDecided;
    dimension = all ? std::optional<long>(expectedDimension) : std::nullopt;
    consequences.clear();
    if (all && scheme == "H^ea") consequences.push_back(kRealizationConsequence);
  }
  friend bool operator==(const CriterionReport&, const CriterionReport&) = default;
};

inline std::string scheme_name(SchemeKind k) { return k == SchemeKind::ea ? "H^ea" : "H^es"; }

// ---------------------------------------------------------------- surface data

struct SurfaceData {
  std::vector<long> KC;                  // K_S . C_i
  std::vector<std::vector<long>> CC;     // C_i . C_j
  std::optional<long> C2;                // C^2, defaults to the sum of CC
  long pa = 0;                           // p_a(C)
  std::vector<std::optional<long>> paComponents;

  size_t size() const { return KC.size(); }
  long self_intersection() const {
    if (C2) return *C2;
    long s = 0;
    for (auto& r : CC)
      for (long v : r) s += v;
    return s;
  }
  long D_dot(size_t i) const {
    long s = 0;
    for (size_t j = 0; j < size(); ++j)
      if (j != i) s += CC[i][j];
    return s;
  }

  void validate() const {
    size_t n = size();
    if (n == 0) throw CurveError("surface data: no components");
    if (CC.size() != n) throw CurveError("surface data: intersection matrix has the wrong size");
    for (auto& r : CC)
      if (r.size() != n) throw CurveError("surface data: intersection matrix has the wrong size");
    if (!paComponents.empty() && paComponents.size() != n) throw CurveError("surface data: wrong number of component genera");
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (CC[i][j] != CC[j][i])
          throw CurveError("surface data: C" + std::to_string(i) + ".C" + std::to_string(j) + " is not symmetric");
    for (size_t i = 0; i < paComponents.size(); ++i)
      if (paComponents[i] && -KC[i] != CC[i][i] - 2 * *paComponents[i] + 2)
        throw CurveError("surface data: adjunction fails for component " + std::to_string(i) + ": -K.C = " +
                         std::to_string(-KC[i]) + " but C^2 - 2p_a + 2 = " + std::to_string(CC[i][i] - 2 * *paComponents[i] + 2));
    long sum = 0;
    for (auto& r : CC)
      for (long v : r) sum += v;
    if (C2 && *C2 != sum) throw CurveError("surface data: C^2 differs from the sum of C_i.C_j");
    long KdotC = 0;
    for (long k : KC) KdotC += k;
    if (2 * pa - 2 != sum + KdotC) throw CurveError("surface data: adjunction fails for C: 2p_a - 2 != C^2 + K.C");
  }

  static SurfaceData plane(const std::vector<int>& degrees) {
    SurfaceData S;
    long d = 0;
    for (int di : degrees) d += di;
    for (size_t i = 0; i < degrees.size(); ++i) {
      S.KC.push_back(-3L * degrees[i]);
      std::vector<long> row;
      for (size_t j = 0; j < degrees.size(); ++j) row.push_back(static_cast<long>(degrees[i]) * degrees[j]);
      S.CC.push_back(row);
      S.paComponents.push_back(static_cast<long>(degrees[i] - 1) * (degrees[i] - 2) / 2);
    }
    S.pa = (d - 1) * (d - 2) / 2;
    return S;
  }
};

// ---------------------------------------------------------------- criteria

namespace detail {

inline const std::string kTermTau = "tau(C_i,x)";
inline const std::string kTermTensor = "dim (O/I^es) (x) O_{C_i}";
inline const std::string kTermTauWhole = "tau(C,x)";
inline const std::string kTermTauEsWhole = "tau^es(C,x)";

// Totals over the points; false when some tau^es is unknown.
inline bool total_tau(const std::vector<SingularPoint>& pts, SchemeKind k, long& total, std::vector<std::string>& diag) {
  total = 0;
  bool ok = true;
  for (auto& sp : pts) {
    if (k == SchemeKind::ea) {
      total += sp.conj * sp.record.tau;
    } else if (sp.record.tauEs) {
      total += sp.conj * *sp.record.tauEs;
    } else {
      ok = false;
      diag.push_back("tau^es unknown at " + sp.label + " (class " + sp.record.tag.to_string() + ")");
    }
  }
  return ok;
}

// Point contributions to the inequality of component i (the surface/3d right-hand side).
inline bool add_component_terms(const std::vector<SingularPoint>& pts, int i, SchemeKind k, ComponentCheck& cc,
                                std::vector<std::string>& diag) {
  bool ok = true;
  for (auto& sp : pts) {
    auto it = std::find(sp.components.begin(), sp.components.end(), i);
    if (it == sp.components.end()) continue;
    size_t pos = it - sp.components.begin();
    const CurveGerm& g = sp.record.germ;
    const ClassTag& t = sp.record.tag;
    long b = sp.componentBranches[pos], r = sp.record.r;
    if (k == SchemeKind::ea) {
      cc.terms.push_back({sp.label, sp.conj, sp.componentTau[pos], kTermTau});
      cc.isodSources.push_back({sp.label, sp.conj, isod_ea_component(t, b, r)});
    } else {
      auto tens = tau_es_tensor_component(g, t, sp.componentGerms[pos]);
      if (!tens) {
        ok = false;
        diag.push_back("I^es unknown at " + sp.label + " (class " + t.to_string() + "); component " + std::to_string(i) +
                       " cannot be evaluated");
        continue;
      }
      cc.terms.push_back({sp.label, sp.conj, *tens, kTermTensor});
      cc.isodSources.push_back({sp.label, sp.conj, isod_es_component(g, t, b, r)});
    }
  }
  return ok;
}

inline std::string kind_suffix(SchemeKind k) { return "-" + to_string(k); }

}  // namespace detail

inline CriterionReport criterion_3d(const ProjectiveCurve& C, SchemeKind kind) {
  CriterionReport R;
  R.criterion = "3d" + detail::kind_suffix(kind);
  R.scheme = scheme_name(kind);
  long d = C.degree, total = 0;
  R.evaluable = detail::total_tau(C.singularPoints, kind, total, R.diagnostics);
  R.expectedDimension = d * (d + 3) / 2 - total;
  for (size_t i = 0; i < C.components.size(); ++i) {
    long di = C.components[i].degree;
    ComponentCheck cc;
    cc.component = static_cast<int>(i);
    cc.lhs = 3 * di;
    cc.fixed = kind == SchemeKind::ea ? di * (d - di) : 0;
    R.evaluable = detail::add_component_terms(C.singularPoints, static_cast<int>(i), kind, cc, R.diagnostics) && R.evaluable;
    R.perComponent.push_back(std::move(cc));
  }
  R.finalize();
  return R;
}

// Abstract version on a smooth surface: local data with component masks plus intersection numbers.
inline CriterionReport criterion_surface(const std::vector<SingularPoint>& pts, const SurfaceData& S, SchemeKind kind) {
  S.validate();
  for (auto& sp : pts)
    for (int i : sp.components)
      if (i < 0 || static_cast<size_t>(i) >= S.size())
        throw CurveError("point " + sp.label + " refers to component " + std::to_string(i) + " outside the surface data");
  CriterionReport R;
  R.criterion = "surface" + detail::kind_suffix(kind);
  R.scheme = scheme_name(kind);
  long total = 0;
  R.evaluable = detail::total_tau(pts, kind, total, R.diagnostics);
  R.expectedDimension = S.self_intersection() + 1 - S.pa - total;
  for (size_t i = 0; i < S.size(); ++i) {
    ComponentCheck cc;
    cc.component = static_cast<int>(i);
    cc.lhs = -S.KC[i];
    cc.fixed = kind == SchemeKind::ea ? S.D_dot(i) : 0;
    R.evaluable = detail::add_component_terms(pts, static_cast<int>(i), kind, cc, R.diagnostics) && R.evaluable;
    R.perComponent.push_back(std::move(cc));
  }
  R.finalize();
  return R;
}

inline CriterionReport criterion_surface(const ProjectiveCurve& C, const SurfaceData& S, SchemeKind kind) {
  if (S.size() != C.components.size()) throw CurveError("surface data has a different number of components than the curve");
  return criterion_surface(C.singularPoints, S, kind);
}

inline std::string polar_description(const PolarCurve& P) {
  return "generic polar " + std::to_string(P.direction[0]) + "*F_X + " + std::to_string(P.direction[1]) + "*F_Y + " +
         std::to_string(P.direction[2]) + "*F_Z (draw " + std::to_string(P.attempts) + ")";
}

inline CriterionReport criterion_4d(const ProjectiveCurve& C, SchemeKind kind, const PolarCurve& P) {
  CriterionReport R;
  R.criterion = "4d" + detail::kind_suffix(kind);
  R.scheme = scheme_name(kind);
  long d = C.degree, total = 0;
  R.evaluable = detail::total_tau(C.singularPoints, kind, total, R.diagnostics);
  R.expectedDimension = d * (d + 3) / 2 - total;
  R.caveats = P.caveats;
  R.diagnostics.push_back(polar_description(P));
  ComponentCheck cc;
  cc.lhs = 4 * d;
  cc.fixed = 4;
  for (auto& sp : C.singularPoints) {
    if (kind == SchemeKind::ea) {
      cc.terms.push_back({sp.label, sp.conj, sp.record.tau, detail::kTermTauWhole});
    } else if (sp.record.tauEs) {
      cc.terms.push_back({sp.label, sp.conj, *sp.record.tauEs, detail::kTermTauEsWhole});
    }
    cc.isodSources.push_back({sp.label, sp.conj, isod_polar(sp.record.tag, kind)});
  }
  R.perComponent.push_back(std::move(cc));
  R.finalize();
  return R;
}

inline CriterionReport criterion_4d(const ProjectiveCurve& C, SchemeKind kind, std::uint64_t seed) {
  return criterion_4d(C, kind, generic_polar(C, seed));
}

enum class PointRole { Analytic, Topological, Free };

inline std::string to_string(PointRole r) {
  switch (r) {
    case PointRole::Analytic:
      return "analytic";
    case PointRole::Topological:
      return "topological";
    case PointRole::Free:
      return "free";
  }
  return "?";
}

namespace detail {

// Coefficients c with target = sum c_k basis_k, if any.
inline std::optional<std::vector<mpq_class>> solve_span(const std::vector<Poly>& basis, const Poly& target) {
  std::vector<Mono> monos;
  auto collect = [&](const Poly& p) {
    for (auto& [m, c] : p.terms())
      if (std::find(monos.begin(), monos.end(), m) == monos.end()) monos.push_back(m);
  };
  for (auto& b : basis) collect(b);
  collect(target);
  size_t n = basis.size();
  std::vector<std::vector<mpq_class>> M;
  for (auto& m : monos) {
    std::vector<mpq_class> row;
    for (auto& b : basis) row.push_back(b.coeff(m).rational());
    row.push_back(target.coeff(m).rational());
    M.push_back(row);
  }
  std::vector<int> pivcol;
  size_t r = 0;
  for (size_t c = 0; c < n && r < M.size(); ++c) {
    size_t p = r;
    while (p < M.size() && M[p][c] == 0) ++p;
    if (p == M.size()) continue;
    std::swap(M[p], M[r]);
    for (size_t k = 0; k < M.size(); ++k) {
      if (k == r || M[k][c] == 0) continue;
      mpq_class f = M[k][c] / M[r][c];
      for (size_t j = c; j <= n; ++j) M[k][j] -= f * M[r][j];
    }
    pivcol.push_back(static_cast<int>(c));
    ++r;
  }
  for (size_t k = r; k < M.size(); ++k)
    if (M[k][n] != 0) return std::nullopt;
  std::vector<mpq_class> sol(n, 0);
  for (size_t k = 0; k < r; ++k) sol[pivcol[k]] = M[k][n] / M[k][pivcol[k]];
  return sol;
}

inline bool proportional(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return Scalar(b.terms().begin()->second) * a == Scalar(a.terms().begin()->second) * b;
}

}  // namespace detail

inline const std::string kAuxEqualsCurve = "auxiliary curve equals C; ";
inline const std::string kAuxPolar = "auxiliary curve is a polar of C; ";
inline const std::string kAuxSmooth = "auxiliary curve smooth at the point";
inline const std::string kAuxBound = "auxiliary curve: trivial lower bound";

// Mixed criterion: roles fix analytic type, topological type or nothing at each singular point.
inline CriterionReport criterion_mixed(const ProjectiveCurve& C, const std::vector<PointRole>& roles, const Poly& aux) {
  if (roles.size() != C.singularPoints.size()) throw CurveError("partition must assign a role to every singular point");
  detail::check_plane_equation(aux);
  if (aux.ring() != C.F.ring()) throw CurveError("auxiliary curve must use the variables of the curve");
  std::vector<std::string> violations;
  if (!detail::irreducible_over_q(aux)) violations.push_back("condition (a): auxiliary curve is reducible over Q");
  bool equalsC = detail::proportional(aux, C.F);
  bool isPolar = false;
  if (!equalsC && aux.total_degree() == C.degree - 1)
    isPolar = detail::solve_span({C.F.derivative(0), C.F.derivative(1), C.F.derivative(2)}, aux).has_value();

  CriterionReport R;
  R.criterion = "mixed";
  R.scheme = "H^{A,T}";
  R.caveats.push_back("auxiliaryAbsolutelyIrreducibleAssumed");
  long d = C.degree, dp = aux.total_degree();
  ComponentCheck cc;
  cc.lhs = dp * (d - dp + 3);
  long taup = 0;
  for (size_t k = 0; k < roles.size(); ++k) {
    const SingularPoint& sp = C.singularPoints[k];
    if (roles[k] == PointRole::Free) continue;
    Poly loc = local_equation(aux, *sp.point);
    if (!loc.constant_term().is_zero()) {
      violations.push_back("condition (b): auxiliary curve misses " + sp.label);
      continue;
    }
    const CurveGerm& g = sp.record.germ;
    const ClassTag& t = sp.record.tag;
    bool analytic = roles[k] == PointRole::Analytic;
    std::vector<Poly> gens;
    if (analytic) {
      gens = tjurina_generators(g);
    } else if (auto es = es_ideal(g, t)) {
      gens = es->generators;
    } else {
      R.evaluable = false;
      R.diagnostics.push_back("I^es unknown at " + sp.label + " (class " + t.to_string() + "); condition (c) and tau^es unavailable");
      continue;
    }
    if (!in_ideal(loc, std_basis(gens)))
      violations.push_back(std::string("condition (c): local equation of the auxiliary curve at ") + sp.label + " is not in " +
                           (analytic ? "the Tjurina ideal" : "I^es"));
    long tv = analytic ? sp.record.tau : *sp.record.tauEs;
    taup += sp.conj * tv;
    cc.terms.push_back({sp.label, sp.conj, tv, analytic ? detail::kTermTauWhole : detail::kTermTauEsWhole});
    IsodValue iv;
    SchemeKind sk = analytic ? SchemeKind::ea : SchemeKind::es;
    if (equalsC) {
      iv = analytic ? isod_ea(t) : isod_es(g, t);
      iv.source = kAuxEqualsCurve + iv.source;
    } else if (isPolar && detail::polar_germ_defect(sp, loc).empty()) {
      iv = isod_polar(t, sk);
      iv.source = kAuxPolar + iv.source;
    } else if (loc.ord() == 1) {
      iv = {0, Exactness::Exact, kAuxSmooth};
    } else {
      iv = {0, Exactness::LowerBound, kAuxBound};
    }
    cc.isodSources.push_back({sp.label, sp.conj, iv});
  }
  if (!violations.empty()) throw ConditionError(violations);
  R.expectedDimension = d * (d + 3) / 2 - taup;
  R.perComponent.push_back(std::move(cc));
  R.finalize();
  return R;
}

}  // namespace planecurve

#pragma once

// Isomorphism defects of the sheaves N^ea, N^es and of their polar analogues at a singular point.

#include "planecurve/invariants.hpp"

namespace planecurve {

enum class Exactness { Exact, LowerBound };

inline std::string to_string(Exactness e) { return e == Exactness::Exact ? "exact" : "lowerBound"; }

struct IsodValue {
  long value = 0;
  Exactness exactness = Exactness::LowerBound;
  std::string source;

  bool exact() const { return exactness == Exactness::Exact; }
  friend bool operator==(const IsodValue&, const IsodValue&) = default;
};

namespace isod_source {
inline const std::string kQuasihomogeneous = "quasihomogeneity criterion (Jacobian ideal vs maximal ideal)";
inline const std::string kComponentBound = "component lower bound (one per singular point)";
inline const std::string kSimple = "simple singularity table";
inline const std::string kOrdinary = "ordinary point formula r(r-1)/2-2";
inline const std::string kOrdinarySmoothBranch = "ordinary point, smooth branch: r-2";
inline const std::string kConductor = "conductor formula delta - dim(I^es/cond I^es)";
inline const std::string kBrieskornComponent = "u^p-v^q component formula";
inline const std::string kWholeGerm = "component carries the whole germ";
inline const std::string kPointBound = "lower bound at a singular point";
inline const std::string kPolarQuasihomogeneous = "polar: zero iff quasihomogeneous";
inline const std::string kPolarSimple = "polar: simple singularity table";
inline const std::string kPolarHomogeneous = "polar: homogeneous formula r(r-3)/2";
inline const std::string kPolarBrieskorn = "polar: u^p-v^q estimate";
inline const std::string kPolarBound = "polar: trivial lower bound";
}  // namespace isod_source

// Value data for u^P - c*v^Q. Branches are u = c_i t^Q', v = t^P'; everything is graded by the weights (Q', P').
struct SemigroupData {
  int P = 0, Q = 0, r = 0;
  int uWeight = 0, vWeight = 0, degree = 0;
  std::vector<int> branchGenerators;  // generators of the value semigroup of each branch
  // rank of the degree-n piece inside the r copies of t^n, up to the conductor
  struct IdealValues {
    std::vector<int> ranks;
    int conductor = 0;
    long colengthBelowConductor = 0;  // dim I / cond(I)
  };
  IdealValues O, jac, es;
  long delta = 0;

  std::vector<int> conductor_vector(const IdealValues& v) const { return std::vector<int>(r, v.conductor); }
};

namespace detail {

// Degree-n ranks of the image in O_C of a monomial ideal given by a membership test.
template <class InIdeal>
SemigroupData::IdealValues graded_ranks(const SemigroupData& s, InIdeal in_ideal) {
  SemigroupData::IdealValues v;
  int limit = 4 * s.P * s.Q + 2 * (s.P + s.Q) + 8;
  std::vector<int> ranks;
  for (int n = 0; n <= limit; ++n) {
    std::set<int> res;
    for (int a = 0; a * s.uWeight <= n; ++a) {
      int rest = n - a * s.uWeight;
      if (rest % s.vWeight) continue;
      int b = rest / s.vWeight;
      if (in_ideal(a, b)) res.insert(a % s.P);
    }
    ranks.push_back(static_cast<int>(res.size()));
  }
  int c = limit;
  while (c > 0 && ranks[c - 1] == s.r) --c;
  if (c + s.P * s.Q >= limit) throw std::logic_error("conductor search did not stabilize");
  v.conductor = c;
  v.ranks.assign(ranks.begin(), ranks.begin() + c);
  for (int n = 0; n < c; ++n) v.colengthBelowConductor += ranks[n];
  return v;
}

}  // namespace detail

inline std::optional<SemigroupData> semigroup_data(const CurveGerm& g) {
  auto pq = binomial_exponents(g.equation());
  if (!pq) return std::nullopt;
  SemigroupData s;
  s.P = pq->first;
  s.Q = pq->second;
  s.r = std::gcd(s.P, s.Q);
  s.uWeight = s.Q / s.r;
  s.vWeight = s.P / s.r;
  s.degree = s.P * s.uWeight;
  if (std::min(s.uWeight, s.vWeight) == 1) s.branchGenerators = {1};
  else s.branchGenerators = {std::min(s.uWeight, s.vWeight), std::max(s.uWeight, s.vWeight)};
  s.O = detail::graded_ranks(s, [](int, int) { return true; });
  s.jac = detail::graded_ranks(s, [&](int a, int b) { return a >= s.P - 1 || b >= s.Q - 1; });
  s.es = detail::graded_ranks(s, [&](int a, int b) {
    return a >= s.P - 1 || b >= s.Q - 1 || a * s.uWeight + b * s.vWeight >= s.degree;
  });
  for (int n = 0; n < s.O.conductor; ++n) s.delta += s.r - s.O.ranks[n];
  return s;
}

inline IsodValue isod_ea(const ClassTag& t) {
  if (t.kind == ClassKind::Smooth) return {0, Exactness::Exact, "smooth point"};
  if (t.quasihomogeneous) return {1, Exactness::Exact, isod_source::kQuasihomogeneous};
  return {2, Exactness::LowerBound, isod_source::kQuasihomogeneous};
}

// comp_branches: branches of the component through the point; r: branches of the germ.
inline IsodValue isod_ea_component(const ClassTag& t, long comp_branches, long r) {
  if (comp_branches == r) {
    IsodValue v = isod_ea(t);
    v.source = isod_source::kWholeGerm + "; " + v.source;
    return v;
  }
  return {1, Exactness::LowerBound, isod_source::kComponentBound};
}

inline IsodValue isod_es(const CurveGerm& g, const ClassTag& t) {
  if (t.kind == ClassKind::Smooth) return {0, Exactness::Exact, "smooth point"};
  if (t.is_ade()) return {1, Exactness::Exact, isod_source::kSimple};
  if (t.ordinary >= 3) return {static_cast<long>(t.ordinary) * (t.ordinary - 1) / 2 - 2, Exactness::Exact, isod_source::kOrdinary};
  if (t.is_brieskorn()) {
    if (auto s = semigroup_data(g)) return {s->delta - s->es.colengthBelowConductor, Exactness::Exact, isod_source::kConductor};
  }
  return {1, Exactness::LowerBound, isod_source::kPointBound};
}

// Formula for a component of u^p - v^q (q >= p >= 3) made of b of its r = gcd(p,q) branches.
// k_multiple_includes_one selects the reading of "q = k*p (k in N)" that admits k = 1.
inline long brieskorn_component_formula(long p, long q, long b, bool k_multiple_includes_one = true) {
  long r = std::gcd(p, q);
  bool mult = q % p == 0 && (k_multiple_includes_one || q / p >= 2);
  long M = (b == 1 && mult) ? 1 : 2;
  // (b/2r)(pq(2 - b/r) + (r - p - q)) = b(pq(2r - b) + r(r - p - q)) / (2r^2)
  long num = b * (p * q * (2 * r - b) + r * (r - p - q));
  long den = 2 * r * r;
  if (num % den) throw std::logic_error("component formula is not integral");
  return num / den - (q - 2) / p - M;
}

inline IsodValue isod_es_component(const CurveGerm& g, const ClassTag& t, long comp_branches, long r) {
  if (comp_branches == r) {
    IsodValue v = isod_es(g, t);
    v.source = isod_source::kWholeGerm + "; " + v.source;
    return v;
  }
  if (t.ordinary >= 3) {
    long k = t.ordinary;
    if (comp_branches == 1) return {k - 2, Exactness::Exact, isod_source::kOrdinarySmoothBranch};
    return {brieskorn_component_formula(k, k, comp_branches), Exactness::Exact, isod_source::kBrieskornComponent};
  }
  if (t.is_brieskorn() && t.p >= 3)
    return {brieskorn_component_formula(t.p, t.q, comp_branches), Exactness::Exact, isod_source::kBrieskornComponent};
  return {1, Exactness::LowerBound, isod_source::kComponentBound};
}

enum class SchemeKind { ea, es };

inline std::string to_string(SchemeKind k) { return k == SchemeKind::ea ? "ea" : "es"; }

inline long brieskorn_polar_estimate(long p, long q) {
  long eps = q % p == 0 ? 1 : 0;
  long num = (p - 3) * (q - 1) + 2 * std::gcd(p - 1, q - 1) - std::gcd(p, q) - 1;
  return num / 2 - q / p + eps;
}

// isod of the polar sheaf at a singular point of C.
inline IsodValue isod_polar(const ClassTag& t, SchemeKind kind) {
  if (t.kind == ClassKind::Smooth) return {0, Exactness::Exact, "smooth point"};
  if (kind == SchemeKind::ea) {
    if (t.quasihomogeneous) return {0, Exactness::Exact, isod_source::kPolarQuasihomogeneous};
    return {1, Exactness::LowerBound, isod_source::kPolarQuasihomogeneous};
  }
  if (t.is_ade()) return {0, Exactness::Exact, isod_source::kPolarSimple};
  if (t.is_brieskorn() && t.p == t.q)
    return {static_cast<long>(t.p) * (t.p - 3) / 2, Exactness::Exact, isod_source::kPolarHomogeneous};
  if (t.is_brieskorn() && t.p >= 3)
    return {std::max(0L, brieskorn_polar_estimate(t.p, t.q)), Exactness::LowerBound, isod_source::kPolarBrieskorn};
  return {0, Exactness::LowerBound, isod_source::kPolarBound};
}

}  // namespace planecurve

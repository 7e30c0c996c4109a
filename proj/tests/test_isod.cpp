#include "corpus.hpp"
#include "planecurve/isod.hpp"

#include <gtest/gtest.h>

using namespace planecurve;
using namespace testing_support;

namespace {

CurveGerm G(const std::string& s) { return CurveGerm(P(s, uv())); }

std::string pq(int p, int q) { return "u^" + std::to_string(p) + "-v^" + std::to_string(q); }

IsodValue es_of(const std::string& s) {
  CurveGerm g = G(s);
  return isod_es(g, classify(g));
}

}  // namespace

TEST(Semigroup, Examples) {
  auto cusp = *semigroup_data(G("u^2-v^3"));
  EXPECT_EQ(cusp.branchGenerators, (std::vector<int>{2, 3}));
  EXPECT_EQ(cusp.O.conductor, 2);
  EXPECT_EQ(cusp.delta, 1);
  auto a4 = *semigroup_data(G("u^2-v^5"));
  EXPECT_EQ(a4.branchGenerators, (std::vector<int>{2, 5}));
  EXPECT_EQ(a4.O.conductor, 4);
  EXPECT_EQ(a4.delta, 2);
  auto node = *semigroup_data(G("u^2-v^2"));
  EXPECT_EQ(node.r, 2);
  EXPECT_EQ(node.conductor_vector(node.O), (std::vector<int>{1, 1}));
  EXPECT_EQ(node.delta, 1);
  EXPECT_FALSE(semigroup_data(G("u^3-u*v^3")).has_value());
}

TEST(Semigroup, DeltaMatchesResolution) {
  for (int p = 2; p <= 7; ++p)
    for (int q = 2; q <= 7; ++q) {
      CurveGerm g = G(pq(p, q));
      auto s = *semigroup_data(g);
      EXPECT_EQ(s.delta, delta_branches(resolve(g)).delta) << pq(p, q);
      // the conductor ideal contains everything from c(I) on, and I^es contains j
      EXPECT_GE(s.jac.conductor, s.es.conductor);
      EXPECT_GE(s.jac.conductor, s.O.conductor);
    }
}

TEST(IsodEa, Table) {
  auto cusp = classify(G("u^2-v^3"));
  EXPECT_EQ(isod_ea(cusp), (IsodValue{1, Exactness::Exact, isod_source::kQuasihomogeneous}));
  auto cusps = classify(G("u^7+v^7+(u-v)^2*u^2*v^2"));
  auto v = isod_ea(cusps);
  EXPECT_EQ(v.value, 2);
  EXPECT_FALSE(v.exact());
  for (auto& ng : germ_corpus()) {
    auto t = classify(G(ng.eq));
    if (t.is_ade()) EXPECT_EQ(isod_ea(t).value, 1) << ng.name;
    EXPECT_GE(isod_ea(t).value, 1);
  }
  EXPECT_EQ(isod_ea_component(classify(G("u*v")), 1, 2).value, 1);
  EXPECT_FALSE(isod_ea_component(classify(G("u*v")), 1, 2).exact());
  EXPECT_TRUE(isod_ea_component(cusp, 1, 1).exact());
}

TEST(IsodEs, Table) {
  for (auto s : {"u^2-v^2", "u^2-v^3", "u^2-v^8", "u^2*v-v^5", "u^3-v^4", "u^3-u*v^3", "u^3-v^5", "u^9+(u+v^4)^2"}) {
    auto v = es_of(s);
    EXPECT_EQ(v.value, 1) << s;
    EXPECT_TRUE(v.exact());
  }
  EXPECT_EQ(es_of("u^4-v^4").value, 4);
  EXPECT_EQ(es_of("u^3-v^3").value, 1);
  for (int r = 3; r <= 6; ++r) {
    CurveGerm g = G(pq(r, r));
    EXPECT_EQ(es_of(pq(r, r)).value, r * (r - 1) / 2 - 2);
    EXPECT_EQ(es_of(pq(r, r)).value, tau_es(g)->value - multiplicity(g));
  }
  EXPECT_EQ(es_of("u^3-v^6").value, 3);
  EXPECT_EQ(es_of("u^4-v^6").value, 5);
  auto general = es_of("u^7+v^7+(u-v)^2*u^2*v^2");
  EXPECT_EQ(general.value, 1);
  EXPECT_FALSE(general.exact());
}

TEST(IsodEs, ConductorFormulaAgreesWithTables) {
  for (int p = 2; p <= 8; ++p)
    for (int q = p; q <= 9; ++q) {
      CurveGerm g = G(pq(p, q));
      auto s = *semigroup_data(g);
      long conductor_value = s.delta - s.es.colengthBelowConductor;
      EXPECT_GE(conductor_value, 1) << pq(p, q);
      if (p == 2) EXPECT_EQ(conductor_value, 1) << pq(p, q);
      if (p == q) EXPECT_EQ(conductor_value, p * (p - 1) / 2 - 2 + (p == 2 ? 2 : 0)) << pq(p, q);
      if (p >= 3) {
        long r = std::gcd(p, q);
        EXPECT_EQ(conductor_value, brieskorn_component_formula(p, q, r)) << pq(p, q);
        // contribution to the 3d right-hand side for irreducible germs
        if (r == 1) {
          long eps = q % p == 1 ? 1 : 0;
          EXPECT_EQ(tau_es_brieskorn_formula(p, q) - conductor_value, p + q - 1 - eps) << pq(p, q);
        }
      }
      // equality with 1 exactly when j = I^es
      EXPECT_EQ(conductor_value == 1, tau_es(g)->value == mu(g)) << pq(p, q);
    }
}

TEST(IsodEs, ComponentFormulas) {
  for (int r = 3; r <= 6; ++r) {
    auto t = classify(G(pq(r, r)));
    EXPECT_EQ(isod_es_component(G(pq(r, r)), t, 1, r).value, r - 2);
    EXPECT_EQ(brieskorn_component_formula(r, r, 1, true), r - 2);
    EXPECT_NE(brieskorn_component_formula(r, r, 1, false), r - 2);
    for (int b = 3; b < r; ++b) {
      // singular component: intersection with the rest plus its own defect
      long expected = static_cast<long>(b) * (r - b) + b * (b - 1) / 2 - 2;
      EXPECT_EQ(isod_es_component(G(pq(r, r)), t, b, r).value, expected);
    }
  }
  EXPECT_EQ(isod_es_component(G("u*v"), classify(G("u*v")), 1, 2).value, 1);
}

TEST(IsodEs, UpperBoundSandwich) {
  for (int p = 3; p <= 9; ++p)
    for (int q = p; q <= 12; ++q) {
      long r = std::gcd(p, q);
      long p1 = p / r, q1 = q / r;
      for (long b = 1; b < r; ++b) {
        long comp = brieskorn_component_formula(p, q, b);
        // the component alone is u^{b p'} - v^{b q'}
        long own;
        if (b * p1 == 1) own = 0;
        else {
          CurveGerm ci = G(pq(static_cast<int>(b * p1), static_cast<int>(b * q1)));
          own = isod_es(ci, classify(ci)).value;
        }
        long dci = b * (r - b) * p1 * q1;
        EXPECT_LE(comp, own + dci) << pq(p, q) << " b=" << b;
        // slack bound for weights w1 = q' >= w2 = p'
        EXPECT_LE(own + dci - comp, (q1 - 1) / p1 + 2) << pq(p, q) << " b=" << b;
        EXPECT_GE(comp, 1);
      }
    }
}

TEST(IsodPolar, Table) {
  for (auto s : {"u^2-v^2", "u^2-v^3", "u^2*v-v^5", "u^3-v^4", "u^9+u^8+(u+v^4)^2"}) {
    auto t = classify(G(s));
    EXPECT_EQ(isod_polar(t, SchemeKind::es), (IsodValue{0, Exactness::Exact, isod_source::kPolarSimple})) << s;
    EXPECT_EQ(isod_polar(t, SchemeKind::ea).value, 0) << s;
  }
  for (int r = 3; r <= 6; ++r) {
    auto v = isod_polar(classify(G(pq(r, r))), SchemeKind::es);
    EXPECT_EQ(v.value, r * (r - 3) / 2);
    EXPECT_EQ(v.exact(), r > 3 ? true : true);
  }
  auto cusps = classify(G("u^7+v^7+(u-v)^2*u^2*v^2"));
  auto ea = isod_polar(cusps, SchemeKind::ea);
  EXPECT_EQ(ea.value, 1);
  EXPECT_FALSE(ea.exact());
  auto est = isod_polar(classify(G("u^4-v^6")), SchemeKind::es);
  EXPECT_FALSE(est.exact());
  EXPECT_EQ(est.value, brieskorn_polar_estimate(4, 6));
}

TEST(IsodPolar, BrieskornEstimateMatchesFourDContribution) {
  for (int p = 3; p <= 8; ++p)
    for (int q = p + 1; q <= 10; ++q)
      EXPECT_EQ(tau_es_brieskorn_formula(p, q) - brieskorn_polar_estimate(p, q), p + 2 * q - 3 - std::gcd(p - 1, q - 1));
}

#include "corpus.hpp"
#include "oracle.hpp"
#include "planecurve/invariants.hpp"

#include <gtest/gtest.h>

using namespace planecurve;
using namespace testing_support;

namespace {

CurveGerm G(const std::string& s) { return CurveGerm(P(s, uv())); }

std::string pq(int p, int q) { return "u^" + std::to_string(p) + "-v^" + std::to_string(q); }

}  // namespace

TEST(Invariants, MuTau) {
  EXPECT_EQ(mu(G("u*v")), 1);
  EXPECT_EQ(mu(G("u^9+u^8+(u+v^4)^2")), 31);
  EXPECT_EQ(tau(G("u^9+(u+v^4)^2")), 35);
  EXPECT_EQ(tau(G("u^9+u^8+(u+v^4)^2")), 31);
  CurveGerm cusps = G("u^7+v^7+(u-v)^2*u^2*v^2");
  long t = tau(cusps);
  EXPECT_EQ(t, dense_colength(tjurina_generators(cusps), 16));
  EXPECT_LE(t + 3, 27);
  EXPECT_LT(t, mu(cusps));
}

TEST(Invariants, Classify) {
  auto a1 = classify(G("u^2+v^2"));
  EXPECT_EQ(a1.kind, ClassKind::ADE);
  EXPECT_EQ(a1.adeKind, 'A');
  EXPECT_EQ(a1.adeIndex, 1);
  auto o3 = classify(G("u^3-v^3"));
  EXPECT_EQ(o3.kind, ClassKind::BrieskornPQ);
  EXPECT_EQ(o3.ordinary, 3);
  EXPECT_EQ(o3.p, 3);
  auto cusps = classify(G("u^7+v^7+(u-v)^2*u^2*v^2"));
  EXPECT_EQ(cusps.kind, ClassKind::General);
  EXPECT_FALSE(cusps.quasihomogeneous);
  EXPECT_EQ(classify(G("u^3-v^4")).adeKind, 'E');
  EXPECT_EQ(classify(G("u^3-u*v^3")).adeIndex, 7);
  EXPECT_EQ(classify(G("u^2*v-v^5")).adeKind, 'D');
  auto j10 = classify(G("u^3-v^6"));
  EXPECT_FALSE(j10.is_ade());
  EXPECT_EQ(j10.kind, ClassKind::BrieskornPQ);
  auto w = classify(G("u^3*v+v^5"));
  EXPECT_EQ(w.kind, ClassKind::QuasihomogeneousW);
  EXPECT_EQ(*w.weights, (Weights{4, 3, 15}));
  EXPECT_TRUE(w.quasihomogeneous);
  auto a35 = classify(G("u^9+(u+v^4)^2"));
  EXPECT_EQ(a35.adeIndex, 35);
  EXPECT_FALSE(a35.weights.has_value());
  EXPECT_EQ(classify(G("u^4-v^4+u^5")).kind, ClassKind::OrdinaryMultiple);
}

TEST(Invariants, WeightedHomogeneous) {
  EXPECT_EQ(*weighted_homogeneous(P("u^2-v^3", uv())), (Weights{3, 2, 6}));
  EXPECT_EQ(*weighted_homogeneous(P("u^2*v-v^3", uv())), (Weights{1, 1, 3}));
  EXPECT_FALSE(weighted_homogeneous(P("u^2-v^3+u*v^3", uv())).has_value());
}

TEST(TauEs, Examples) {
  EXPECT_EQ(tau_es(G("u^2+v^2"))->value, 1);
  EXPECT_EQ(tau_es(G("u^3-v^3"))->value, 4);
  EXPECT_EQ(tau_es(G("u^3-v^4"))->value, 6);
  EXPECT_EQ(tau_es_brieskorn_formula(2, 2), 1);
  EXPECT_EQ(tau_es_brieskorn_formula(3, 4), 6);
  EXPECT_EQ(tau_es_ordinary_formula(3), 4);
  EXPECT_FALSE(tau_es(G("u^7+v^7+(u-v)^2*u^2*v^2")).has_value());
}

TEST(TauEs, BrieskornFormulaMatchesWeightedColength) {
  int cases = 0;
  for (int p = 2; p <= 6; ++p)
    for (int q = p; q <= 6; ++q) {
      CurveGerm g = G(pq(p, q));
      auto t = classify(g);
      ASSERT_TRUE(t.weights.has_value());
      std::vector<Poly> gens = jacobian_generators(g);
      for (auto& m : weighted_monomials(g.ring(), *t.weights)) gens.push_back(m);
      EXPECT_EQ(*colength(gens), tau_es_brieskorn_formula(p, q)) << pq(p, q);
      EXPECT_EQ(tau_es(g)->value, tau_es_brieskorn_formula(p, q)) << pq(p, q);
      ++cases;
    }
  EXPECT_EQ(cases, 15);
}

TEST(TauEs, OrdinaryFormulaMatchesColength) {
  for (int k = 3; k <= 6; ++k) {
    std::vector<Poly> gens = jacobian_generators(G(pq(k, k)));
    for (auto& m : weighted_monomials(uv(), Weights{1, 1, k})) gens.push_back(m);
    EXPECT_EQ(*colength(gens), tau_es_ordinary_formula(k));
  }
  // not weighted homogeneous: taken through the ordinary-point branch
  auto t = tau_es(G("u^4-v^4+u^5"));
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->value, 8);
}

TEST(TauEs, Modality) {
  for (auto& s : {"u^2-v^5", "u^2*v-v^4", "u^3-v^4", "u^3-u*v^3", "u^3-v^5", "u^9+(u+v^4)^2"})
    EXPECT_EQ(modality(G(s)), 0) << s;
  EXPECT_EQ(modality(G("u^4-v^4")), 1);
  EXPECT_EQ(mu(G("u^3-v^7")), 12);
  EXPECT_EQ(tau_es_brieskorn_formula(3, 7), 11);
  EXPECT_EQ(modality(G("u^3-v^7")), 1);
}

TEST(TauEs, TensorComponent) {
  EXPECT_EQ(tau_es_tensor_component(G("u*v"), G("u")), 1);
  EXPECT_EQ(tau_es_tensor_component(G("u^3-v^3"), G("u-v")), 2);
  for (auto s : {"u^3-v^4", "u^2-v^7", "u^4-v^4"}) EXPECT_EQ(tau_es_tensor_component(G(s), G(s)), tau_es(G(s))->value);
}

TEST(Invariants, CorpusProperties) {
  for (auto& ng : germ_corpus()) {
    auto s = analyze_germ(G(ng.eq));
    EXPECT_LE(s.tau, s.mu) << ng.name;
    if (s.tauEs) EXPECT_LE(*s.tauEs, s.tau) << ng.name;
    EXPECT_EQ(s.mu, 2 * s.delta - s.r + 1) << ng.name;
    if (s.tag.weights) EXPECT_EQ(s.tau, s.mu) << ng.name;
  }
}

TEST(Invariants, ExtensionFieldGerm) {
  Field K = Field::extension(UPolyQ(std::vector<mpq_class>{-2, 0, 1}));
  Ring r(K, {"u", "v"});
  CurveGerm g(parse_poly("u^2 - @*v^3", r));
  auto s = analyze_germ(g);
  EXPECT_EQ(s.mu, 2);
  EXPECT_EQ(s.tag.adeKind, 'A');
  EXPECT_EQ(*s.tauEs, 2);
}

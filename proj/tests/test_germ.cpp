#include "corpus.hpp"
#include "planecurve/germ.hpp"

#include <gtest/gtest.h>

using namespace planecurve;
using namespace testing_support;

namespace {

CurveGerm G(const std::string& s) { return CurveGerm(P(s, uv())); }

long milnor(const CurveGerm& g) { return *colength(jacobian_generators(g)); }

CurveGerm linear_change(const CurveGerm& g, long a, long b, long c, long d) {
  const Ring& r = g.ring();
  Poly u = Poly::var(r, 0), v = Poly::var(r, 1);
  Poly f = g.equation().substitute({Scalar(a) * u + Scalar(b) * v, Scalar(c) * u + Scalar(d) * v}, r);
  return CurveGerm(f, "", false);
}

}  // namespace

TEST(Multiplicity, Examples) {
  EXPECT_EQ(multiplicity(G("u^2-v^3")), 2);
  for (int r = 2; r <= 6; ++r) EXPECT_EQ(multiplicity(G("u^" + std::to_string(r) + "-v^" + std::to_string(r))), r);
  EXPECT_EQ(multiplicity(G("u^9+(u+v^4)^2")), 2);
}

TEST(BlowUp, Cusp) {
  auto bs = blow_up(G("u^2-v^3"));
  ASSERT_EQ(bs.size(), 1u);
  const Poly& f = bs[0].first.equation();
  // strict transform is smooth and tangent to the exceptional curve u = 0
  EXPECT_EQ(f.ord(), 1);
  Mono v1;
  v1[1] = 1;
  EXPECT_TRUE(f.coeff(v1).is_zero());
  EXPECT_EQ(f, P("v^2-u", uv()));
}

TEST(BlowUp, NodeSeparates) {
  auto bs = blow_up(G("u*v"));
  ASSERT_EQ(bs.size(), 2u);
  for (auto& [g, k] : bs) {
    EXPECT_EQ(multiplicity(g), 1);
    EXPECT_EQ(k, 1);
  }
}

TEST(BlowUp, A4BecomesA2) {
  auto bs = blow_up(G("u^2-v^5"));
  ASSERT_EQ(bs.size(), 1u);
  EXPECT_EQ(milnor(bs[0].first), 2);
  EXPECT_EQ(multiplicity(bs[0].first), 2);
}

TEST(BlowUp, ConjugateDirections) {
  auto bs = blow_up(G("u^2+v^2+u^3"));
  ASSERT_EQ(bs.size(), 1u);
  EXPECT_EQ(bs[0].second, 2);
  EXPECT_EQ(bs[0].first.field().degree(), 2);
}

TEST(Resolve, NodeIsRootOnly) {
  auto t = resolve(G("u*v"));
  ASSERT_EQ(t.size(), 1u);
  EXPECT_TRUE(t.root().stop);
  EXPECT_EQ(t.root().multiplicity, 2);
  auto db = delta_branches(t);
  EXPECT_EQ(db.delta, 1);
  EXPECT_EQ(db.r, 2);
}

TEST(Resolve, CuspSequence) {
  auto t = resolve(G("u^2-v^3"));
  auto tt = top_type(t);
  EXPECT_EQ(tt.sequence, (std::vector<int>{2, 1, 1}));
  auto db = delta_branches(t);
  EXPECT_EQ(db.delta, 1);
  EXPECT_EQ(db.r, 1);
}

TEST(Resolve, OrdinaryPoints) {
  for (int r = 3; r <= 6; ++r) {
    auto t = resolve(G("u^" + std::to_string(r) + "-v^" + std::to_string(r)));
    auto tt = top_type(t);
    EXPECT_EQ(tt.sequence.front(), r);
    auto db = delta_branches(t);
    EXPECT_EQ(db.delta, r * (r - 1) / 2);
    EXPECT_EQ(db.r, r);
    for (int c : t.root().children) {
      EXPECT_TRUE(t.node(c).stop);
      EXPECT_EQ(t.node(c).multiplicity, 1);
    }
  }
}

TEST(Resolve, A19) {
  auto db = delta_branches(resolve(G("u^2-v^20")));
  EXPECT_EQ(db.delta, 10);
  EXPECT_EQ(db.r, 2);
}

TEST(Resolve, ClosedFormsADE) {
  for (int k = 1; k <= 12; ++k) {
    auto db = delta_branches(resolve(G("u^2-v^" + std::to_string(k + 1))));
    EXPECT_EQ(db.delta, (k + 1) / 2) << "A" << k;
    EXPECT_EQ(db.r, 1 + (k % 2)) << "A" << k;
  }
  for (int k = 4; k <= 10; ++k) {
    CurveGerm g = G("u^2*v-v^" + std::to_string(k - 1));
    EXPECT_EQ(milnor(g), k);
    auto db = delta_branches(resolve(g));
    EXPECT_EQ(2 * db.delta - db.r + 1, k);
    EXPECT_EQ(db.r, k % 2 == 0 ? 3 : 2) << "D" << k;
  }
}

TEST(Resolve, MilnorCrossCheckCorpus) {
  for (auto& ng : germ_corpus()) {
    CurveGerm g = G(ng.eq);
    auto db = delta_branches(resolve(g));
    EXPECT_EQ(2 * db.delta - db.r + 1, milnor(g)) << ng.name;
  }
}

TEST(Resolve, NodeBudget) {
  for (auto& ng : germ_corpus()) {
    CurveGerm g = G(ng.eq);
    auto t = resolve(g);
    EXPECT_LE(static_cast<long>(t.size()), 4 * delta_branches(t).delta + 16) << ng.name;
  }
}

TEST(Resolve, NonReducedRejected) { EXPECT_THROW(G("u^2*v^2-u^5"), std::invalid_argument); }

TEST(TopType, EqualityAndDistinctness) {
  auto cusp = top_type(resolve(G("u^2-v^3")));
  auto cusp2 = top_type(resolve(G("(u+v)^2-v^3-u*v^3")));
  EXPECT_EQ(cusp, cusp2);
  auto node = top_type(resolve(G("u*v")));
  EXPECT_NE(node, cusp);
  auto a3 = top_type(resolve(G("u^2-v^4")));
  EXPECT_NE(a3, cusp);
  EXPECT_EQ(a3.branches, 2);
  EXPECT_EQ(cusp.branches, 1);
}

TEST(TopType, IrrationalTangentsMatchRational) {
  EXPECT_EQ(top_type(resolve(G("u^4-2*v^4"))), top_type(resolve(G("u^4-v^4"))));
  EXPECT_EQ(top_type(resolve(G("u^2+v^2"))), top_type(resolve(G("u*v"))));
}

TEST(TopType, InvariantUnderLinearChanges) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> d(-3, 3);
  for (auto& ng : germ_corpus()) {
    CurveGerm g = G(ng.eq);
    auto ref = top_type(resolve(g));
    int done = 0;
    while (done < 20) {
      long a = d(rng), b = d(rng), c = d(rng), e = d(rng);
      if (a * e - b * c == 0) continue;
      auto tt = top_type(resolve(linear_change(g, a, b, c, e)));
      EXPECT_EQ(tt.encoding, ref.encoding) << ng.name << " change " << a << "," << b << "," << c << "," << e;
      ++done;
    }
  }
}

TEST(Intersection, Examples) {
  EXPECT_EQ(intersection_multiplicity(G("u"), G("v")), 1);
  EXPECT_EQ(intersection_multiplicity(G("u"), G("u-v^2")), 2);
  EXPECT_EQ(intersection_multiplicity(G("u^2-v^3"), G("u")), 3);
  EXPECT_FALSE(intersection_multiplicity(G("u*v"), G("u")).has_value());
}

TEST(Resolve, JsonShape) {
  auto j = resolve(G("u^2-v^3")).to_json();
  ASSERT_EQ(j.size(), 4u);
  EXPECT_TRUE(j[0]["parent"].is_null());
  EXPECT_EQ(j[3]["stop"], true);
  EXPECT_EQ(j[0]["multiplicity"], 2);
}

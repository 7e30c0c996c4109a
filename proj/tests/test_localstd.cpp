#include "oracle.hpp"
#include "planecurve/localstd.hpp"

#include <gtest/gtest.h>

using namespace planecurve;
using namespace testing_support;

namespace {

std::vector<Mono> monos(std::initializer_list<std::pair<int, int>> l) {
  std::vector<Mono> out;
  for (auto [a, b] : l) {
    Mono m;
    m[0] = a;
    m[1] = b;
    out.push_back(m);
  }
  return out;
}

std::vector<Poly> jacobian(const Poly& f) { return {f.derivative(0), f.derivative(1)}; }

}  // namespace

TEST(StdBasis, MaximalIdeal) {
  Ring r = uv();
  auto b = std_basis({P("u", r), P("v", r)});
  EXPECT_EQ(b.leading_ideal(), monos({{0, 1}, {1, 0}}));
  EXPECT_EQ(colength(b), 1);
  EXPECT_EQ(quotient_monomial_basis(b), monos({{0, 0}}));
  EXPECT_EQ(reduce(P("1", r), b), P("1", r));
}

TEST(StdBasis, CuspJacobianData) {
  Ring r = uv();
  Poly f = P("u^2-v^3", r);
  auto b = std_basis({f, P("2*u", r), P("-3*v^2", r)});
  EXPECT_EQ(b.leading_ideal(), monos({{0, 2}, {1, 0}}));
  auto j = std_basis(jacobian(f));
  EXPECT_EQ(colength(j), 2);
  EXPECT_EQ(quotient_monomial_basis(j), monos({{0, 0}, {0, 1}}));
  EXPECT_TRUE(reduce(f, j).is_zero());
  for (auto& g : b.generators()) EXPECT_TRUE(reduce(g, b).is_zero());
}

TEST(StdBasis, IdempotentAndOrderIndependent) {
  Ring r = uv();
  std::vector<Poly> g{P("u^3+v^4+u*v^2", r), P("u^2*v-v^5", r), P("u^4+3*v^3", r)};
  auto b = std_basis(g);
  EXPECT_EQ(std_basis(b.generators()).leading_ideal(), b.leading_ideal());
  std::vector<Poly> perm{g[2], g[0], g[1]};
  EXPECT_EQ(std_basis(perm).leading_ideal(), b.leading_ideal());
  std::vector<Poly> perm2{g[1], g[2], g[0]};
  EXPECT_EQ(std_basis(perm2).leading_ideal(), b.leading_ideal());
}

TEST(Colength, MilnorNumbers) {
  Ring r = Ring(Field(), {"x", "y"});
  EXPECT_EQ(colength(jacobian(P("x^9+(x+y^4)^2", r))), 35);
  EXPECT_EQ(colength(jacobian(P("x^9+x^8+(x+y^4)^2", r))), 31);
  Ring s = uv();
  for (int p = 2; p <= 6; ++p)
    for (int q = p; q <= 7; ++q) {
      Poly f = P("u^" + std::to_string(p) + "-v^" + std::to_string(q), s);
      EXPECT_EQ(colength(jacobian(f)), (p - 1) * (q - 1));
    }
}

TEST(Colength, InfiniteDetected) {
  Ring r = uv();
  EXPECT_FALSE(colength(std::vector<Poly>{P("u^2", r)}).has_value());
  EXPECT_FALSE(colength(jacobian(P("u^2*v", r))).has_value());
}

TEST(Colength, TjurinaOfNonQuasihomogeneous) {
  Ring r = Ring(Field(), {"x", "y"});
  Poly f = P("x^7+y^7+(x-y)^2*x^2*y^2", r);
  EXPECT_EQ(colength(jacobian(f)), 28);
  EXPECT_EQ(colength({f, f.derivative(0), f.derivative(1)}), dense_colength({f, f.derivative(0), f.derivative(1)}, 16));
}

TEST(Colength, DenseOracleRandomIdeals) {
  Ring r = uv();
  std::mt19937_64 rng(42);
  int checked = 0;
  long maxc = 0;
  for (int trial = 0; trial < 40; ++trial) {
    int k = 3 + static_cast<int>(rng() % 6);  // 3..8
    std::vector<Poly> gens;
    int ng = 1 + static_cast<int>(rng() % 3);
    int mind = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < ng; ++i) gens.push_back(random_poly(r, rng, k - 1, 4, std::min(mind, k - 1)));
    for (int a = 0; a <= k; ++a) {
      Mono m;
      m[0] = a;
      m[1] = k - a;
      gens.push_back(Poly::term(r, m, Scalar(1)));
    }
    auto b = std_basis(gens);
    auto c = colength(b);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(*c, dense_colength(gens, k)) << "trial " << trial;
    // every generator reduces to zero; normal form differences lie in the ideal
    for (auto& g : gens) EXPECT_TRUE(reduce(g, b).is_zero());
    Poly f = random_poly(r, rng, k + 1, 5);
    Poly nf = reduce(f, b);
    EXPECT_TRUE(reduce(f - nf, b).is_zero());
    EXPECT_EQ(reduce(nf, b), nf);
    maxc = std::max(maxc, *c);
    ++checked;
  }
  EXPECT_GE(checked, 30);
  EXPECT_GE(maxc, 10);
}

TEST(Colength, OrderingsAgree) {
  Ring r = uv();
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Poly> gens{random_poly(r, rng, 5, 4, 2) + P("u^3", r), random_poly(r, rng, 5, 4, 2) + P("v^4", r)};
    auto a = colength(std_basis(gens, LocalOrdering::negdegrevlex()));
    auto b = colength(std_basis(gens, LocalOrdering::negdeglex()));
    auto c = colength(std_basis(gens, LocalOrdering::weighted(3, 2)));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
  }
}

TEST(StdBasis, SPolynomialsReduceToZero) {
  Ring r = uv();
  std::vector<Poly> g{P("u^3-v^5+u^2*v^2", r), P("u*v^3+v^6", r)};
  auto b = std_basis(g);
  auto gs = b.generators();
  for (size_t i = 0; i < gs.size(); ++i)
    for (size_t j = i + 1; j < gs.size(); ++j) {
      auto li = detail::to_lpoly(gs[i], b.ordering()), lj = detail::to_lpoly(gs[j], b.ordering());
      auto s = detail::spoly(li, lj, b.ordering(), -1);
      EXPECT_TRUE(reduce(detail::from_lpoly(s, r), b).is_zero());
    }
}

TEST(StdBasis, ExtensionField) {
  Field K = Field::extension(UPolyQ(std::vector<mpq_class>{-2, 0, 1}));
  Ring r(K, {"u", "v"});
  Poly f = parse_poly("u^2 - 2*v^2 + @*u^3", r);
  EXPECT_EQ(colength(jacobian(f)), 1);
  Poly g = parse_poly("(u - @*v)^3 + v^5", r);
  auto c = colength(jacobian(g));
  EXPECT_EQ(c, dense_colength(jacobian(g), 10));
}

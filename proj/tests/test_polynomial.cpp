#include <gtest/gtest.h>

#include <random>

#include "ngtrace/groebner.hpp"
#include "ngtrace/poly_parse.hpp"
#include "ngtrace/toric.hpp"

using namespace ngtrace;

namespace {

RingPtr xy_ring() { return std::make_shared<const Ring>(std::vector<std::string>{"x", "y"},
                                                         std::vector<Int>{1, 1}); }

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

void expect_reduced_closed(const GroebnerBasis& gb) {
  EXPECT_TRUE(gb.is_closed());
  for (std::size_t i = 0; i < gb.size(); ++i) {
    EXPECT_EQ(gb.elements()[i].lead_coeff(), 1);
    for (std::size_t j = 0; j < gb.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : gb.elements()[i].terms())
        EXPECT_FALSE(divides(gb.elements()[j].lead_monomial(), t.mono));
    }
  }
}

}  // namespace

TEST(Polynomial, ParseAndPrint) {
  auto r = curve_ring({3, 4, 5});
  auto p = P(r, "X1^2*X3 - X2^2");
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(P(r, p.to_string()), p);
  EXPECT_EQ(P(r, "3/2*X1 + X1 - 5/2*X1").is_zero(), true);
  EXPECT_EQ(P(r, "2*X1*X1").to_string(), "2*X1^2");
  EXPECT_EQ(P(r, "-1").to_string(), "-1");
  EXPECT_THROW(P(r, "X4"), InvalidInput);
  EXPECT_THROW(P(r, "X1 X2"), InvalidInput);
  EXPECT_THROW(P(r, ""), InvalidInput);
  EXPECT_THROW(P(r, "X1^"), InvalidInput);
}

TEST(Polynomial, Arithmetic) {
  auto r = xy_ring();
  auto x = P(r, "x"), y = P(r, "y");
  EXPECT_EQ((x + y) * (x - y), P(r, "x^2 - y^2"));
  EXPECT_EQ((x + y).pow(3), P(r, "x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_TRUE(P(r, "x^2 - x*y").is_homogeneous());
  EXPECT_FALSE(P(r, "x^2 - y").is_homogeneous());
}

TEST(Polynomial, TwoMinors) {
  auto r = curve_ring({3, 4, 5});
  PolyMatrix d{{P(r, "X2"), P(r, "X3"), P(r, "X1^2")}, {P(r, "X1"), P(r, "X2"), P(r, "X3")}};
  auto minors = two_minors(d);
  ASSERT_EQ(minors.size(), 3u);
  EXPECT_EQ(minors[0], P(r, "X2^2 - X1*X3"));
  EXPECT_EQ(minors[1], P(r, "X2*X3 - X1^3"));
  EXPECT_EQ(minors[2], P(r, "X3^2 - X1^2*X2"));
  EXPECT_THROW(two_minors(PolyMatrix{{P(r, "X1")}}), InvalidInput);
  PolyMatrix two{{P(r, "X1"), P(r, "X2")}, {P(r, "X2"), P(r, "X3")}};
  EXPECT_EQ(two_minors(two).size(), 1u);
}

TEST(Groebner, SmallExamples) {
  auto r = xy_ring();
  auto gb = buchberger(r, {P(r, "x^2 - y"), P(r, "y^2 - x")});
  expect_reduced_closed(gb);
  EXPECT_GE(gb.size(), 2u);
  EXPECT_LE(gb.size(), 3u);
  EXPECT_TRUE(gb.contains(P(r, "x^2 - y")));
  EXPECT_TRUE(gb.contains(P(r, "x^4 - x")));
  EXPECT_FALSE(gb.contains(P(r, "x")));

  auto empty = buchberger(r, {});
  EXPECT_EQ(empty.size(), 0u);
  EXPECT_FALSE(empty.contains(P(r, "x")));
  EXPECT_FALSE(ideal_membership(P(r, "x"), {}));
  EXPECT_TRUE(ideal_membership(P(r, "x^2 - y"), {P(r, "x^2 - y")}));
  EXPECT_FALSE(ideal_membership(P(r, "1"), {P(r, "x^2 - x*y"), P(r, "y^3")}));
}

TEST(Groebner, DeterminantalThreeFourFive) {
  auto r = curve_ring({3, 4, 5});
  PolyMatrix d{{P(r, "X2"), P(r, "X3"), P(r, "X1^2")}, {P(r, "X1"), P(r, "X2"), P(r, "X3")}};
  auto gb = buchberger(r, two_minors(d));
  expect_reduced_closed(gb);
  EXPECT_TRUE(gb.reduce(P(r, "X2^2 - X1*X3")).is_zero());
  EXPECT_TRUE(gb.reduce(P(r, "X2*X3 - X1^3")).is_zero());
  for (const auto& g : gb.elements()) EXPECT_TRUE(g.is_homogeneous());
  // normal form is idempotent
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> e(0, 4);
  for (int k = 0; k < 50; ++k) {
    auto p = P(r, "X1^" + std::to_string(e(rng)) + "*X2^" + std::to_string(e(rng)) + " + X3^" +
                      std::to_string(e(rng)) + "*X2");
    auto nf = gb.reduce(p);
    EXPECT_EQ(gb.reduce(nf), nf);
  }
}

TEST(Groebner, ResourceCaps) {
  auto r = xy_ring();
  GroebnerOptions small;
  small.max_basis_size = 1;
  EXPECT_THROW(buchberger(r, {P(r, "x^2 - y^2"), P(r, "x*y - y^2")}, small), ResourceLimit);
  GroebnerOptions low;
  low.max_degree = 2;
  EXPECT_THROW(buchberger(r, {P(r, "x^3 - y^3")}, low), ResourceLimit);
}

TEST(Toric, PlaneCusp) {
  auto gb = toric_ideal(NumericalSemigroup({2, 3}));
  ASSERT_EQ(gb.size(), 1u);
  auto r = gb.ring();
  auto g = gb.elements()[0];
  EXPECT_TRUE(g == P(r, "X1^3 - X2^2") || g == P(r, "X2^2 - X1^3"));
}

TEST(Toric, MatchesMinorsThreeFourFive) {
  auto gb = toric_ideal(NumericalSemigroup({3, 4, 5}));
  auto r = gb.ring();
  PolyMatrix d{{P(r, "X2"), P(r, "X3"), P(r, "X1^2")}, {P(r, "X1"), P(r, "X2"), P(r, "X3")}};
  auto minors = two_minors(d);
  auto mgb = buchberger(r, minors);
  for (const auto& m : minors) EXPECT_TRUE(gb.contains(m));
  for (const auto& g : gb.elements()) EXPECT_TRUE(mgb.contains(g));
}

TEST(Toric, ExampleFamilyMember) {
  NumericalSemigroup h({7, 8, 9, 10});
  auto gb = toric_ideal(h);
  auto r = gb.ring();
  PolyMatrix d{{P(r, "X2"), P(r, "X3"), P(r, "X4"), P(r, "X1^3")},
               {P(r, "X1"), P(r, "X2"), P(r, "X3"), P(r, "X4^2")}};
  auto minors = two_minors(d);
  auto mgb = buchberger(r, minors);
  for (const auto& m : minors) EXPECT_TRUE(gb.contains(m));
  for (const auto& g : gb.elements()) EXPECT_TRUE(mgb.contains(g));
}

TEST(Toric, RandomBinomialsMatchSemigroupArithmetic) {
  std::vector<std::vector<Int>> cases = {{3, 4, 5}, {7, 8, 9, 10}, {5, 7, 9}, {6, 7, 8, 9, 10}};
  std::mt19937 rng(19);
  for (const auto& gens : cases) {
    NumericalSemigroup h(gens);
    auto gb = toric_ideal(h);
    auto r = gb.ring();
    for (const auto& g : gb.elements()) EXPECT_TRUE(g.is_homogeneous());
    EXPECT_TRUE(gb.is_closed());
    std::uniform_int_distribution<int> e(0, 3);
    int equal = 0;
    for (int k = 0; k < 100; ++k) {
      Monomial u, v;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        u = u * r->variable(i, e(rng));
        v = v * r->variable(i, e(rng));
      }
      // bias half of the samples towards equal degree by reusing factorizations
      if (k % 2 == 0) {
        auto facs = h.factorizations(u.degree);
        if (facs.size() > 1) {
          Monomial w;
          const auto& f = facs[static_cast<std::size_t>(k) % facs.size()];
          for (std::size_t i = 0; i < gens.size(); ++i)
            w = w * r->variable(i, static_cast<std::int32_t>(f[i]));
          v = w;
        }
      }
      auto b = Polynomial::monomial(r, u) - Polynomial::monomial(r, v);
      bool same = u.degree == v.degree;
      equal += same;
      EXPECT_EQ(gb.contains(b), same);
    }
    EXPECT_GT(equal, 20);
  }
}

TEST(Toric, Caps) {
  EXPECT_THROW(toric_ideal(NumericalSemigroup({201, 202})), ResourceLimit);
  EXPECT_THROW(toric_ideal(NumericalSemigroup({7, 8, 9, 10, 11, 12, 13})), ResourceLimit);
}

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ngtrace/determinantal.hpp"
#include "ngtrace/relative_ideal.hpp"

using namespace ngtrace;

namespace {

using V = std::vector<Int>;

DeterminantalInstance example_family(Int m) {
  V gens{7, m + 5, 2 * m + 3, 3 * m + 1};
  return build(NumericalSemigroup(gens), gens, {m, 1, 1, 1}, {1, 1, 1, 2});
}

// Minors of form (*) with exponents (m, l) as strings over plain variable
// names, after renaming variable k by rename[k], up to sign.
std::set<std::string> symbolic_minors(const V& m, const V& ell, const std::vector<std::size_t>& rename) {
  std::size_t n = m.size();
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back("X" + std::to_string(k + 1));
  auto ring = std::make_shared<const Ring>(names, std::vector<Int>(n, 1));
  PolyMatrix d(2);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (i + 1) % n;
    d[0].push_back(Polynomial::variable(ring, rename[j], static_cast<std::int32_t>(m[j])));
    d[1].push_back(Polynomial::variable(ring, rename[i], static_cast<std::int32_t>(ell[i])));
  }
  std::set<std::string> out;
  for (auto p : two_minors(d)) {
    if (p.lead_coeff() < 0) p = -p;
    out.insert(p.to_string());
  }
  return out;
}

}  // namespace

TEST(Determinantal, BuildExamples) {
  auto a = build(NumericalSemigroup({3, 4, 5}), {3, 4, 5}, {2, 1, 1}, {1, 1, 1});
  EXPECT_EQ(a.c(), 1);
  auto b = example_family(3);
  EXPECT_EQ(b.c(), 1);
  EXPECT_EQ(b.semigroup().generators(), (V{7, 8, 9, 10}));
  try {
    build(NumericalSemigroup({3, 4, 5}), {3, 4, 5}, {1, 1, 1}, {1, 1, 1});
    FAIL();
  } catch (const InhomogeneousMatrix& e) {
    EXPECT_EQ(e.column, 3);
  }
  EXPECT_THROW(build(NumericalSemigroup({3, 4, 5}), {3, 4}, {1, 1}, {1, 1}), InvalidInput);
  EXPECT_THROW(build(NumericalSemigroup({3, 4, 5}), {3, 4, 6}, {2, 1, 1}, {1, 1, 1}),
               InvalidInput);
}

TEST(Determinantal, ValidationRejectsSmallerIdeal) {
  // search over small exponents for a homogeneous form whose minors fall
  // short of the defining ideal
  int near_misses = 0;
  for (Int a = 3; a <= 12 && near_misses < 3; ++a)
    for (Int b = a + 1; b <= 14 && near_misses < 3; ++b)
      for (Int c = b + 1; c <= 16 && near_misses < 3; ++c) {
        std::shared_ptr<const NumericalSemigroup> h;
        try {
          h = std::make_shared<const NumericalSemigroup>(V{a, b, c});
        } catch (const Error&) {
          continue;
        }
        for (Int m0 = 1; m0 <= 3; ++m0)
          for (Int m1 = 1; m1 <= 3; ++m1)
            for (Int m2 = 1; m2 <= 3; ++m2)
              for (Int l0 = 1; l0 <= 3; ++l0)
                for (Int l1 = 1; l1 <= 3; ++l1)
                  for (Int l2 = 1; l2 <= 3; ++l2) {
                    MatrixForm f{{a, b, c}, {m0, m1, m2}, {l0, l1, l2}};
                    if (f.column_gap(0) != f.column_gap(1) || f.column_gap(1) != f.column_gap(2))
                      continue;
                    auto inst = unchecked_instance(h, f);
                    auto v = validate_defining_ideal(inst);
                    if (!v) {
                      ++near_misses;
                      EXPECT_FALSE(v.witness.empty());
                      EXPECT_THROW(build(h, f.order, f.m, f.ell), IdealMismatch);
                    }
                  }
      }
  EXPECT_GT(near_misses, 0);
}

TEST(Determinantal, RayDegrees) {
  EXPECT_EQ(ray_degrees({1, 1, 1, 1}, {1, 1, 1, 1}), (V{4, 4, 4, 4}));
  EXPECT_EQ(ray_degrees({3, 1, 1, 1}, {1, 1, 1, 2})[0], 7);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> e(1, 4), len(3, 6);
  for (int k = 0; k < 300; ++k) {
    std::size_t n = static_cast<std::size_t>(len(rng));
    V m(n), l(n);
    for (auto& x : m) x = e(rng);
    for (auto& x : l) x = e(rng);
    auto d = ray_degrees(m, l);
    Int pm = 1, pl = 1;
    for (std::size_t i = 0; i < n; ++i) pm *= m[i], pl *= l[i];
    for (std::size_t i = 0; i < n; ++i)
      EXPECT_EQ(m[(i + 1) % n] * d[(i + 1) % n] - l[i] * d[i], pm - pl);
  }
}

TEST(Determinantal, Search) {
  auto a = search_instances({2, 1, 1}, {1, 1, 1}, 50);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].semigroup().generators(), (V{3, 4, 5}));
  auto b = search_instances({3, 1, 1, 1}, {1, 1, 1, 2}, 50);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].semigroup().generators(), (V{7, 8, 9, 10}));
  EXPECT_TRUE(search_instances({1, 1, 1}, {1, 1, 1}, 50).empty());
  EXPECT_TRUE(search_instances({3, 1, 1, 1}, {1, 1, 1, 2}, 9).empty());
  EXPECT_THROW(search_instances({2, 1, 1}, {1, 1, 1}, 501), InvalidInput);
}

TEST(Determinantal, ReversalPreservesForm) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> e(1, 4);
  for (std::size_t n = 3; n <= 6; ++n)
    for (int round = 0; round < 20; ++round) {
      V m(n), l(n);
      for (auto& x : m) x = e(rng);
      for (auto& x : l) x = e(rng);
      V order(n);
      for (std::size_t k = 0; k < n; ++k) order[k] = static_cast<Int>(k);
      MatrixForm f{order, m, l};
      std::vector<std::size_t> identity(n);
      for (std::size_t k = 0; k < n; ++k) identity[k] = k;
      auto original = symbolic_minors(m, l, identity);
      for (const auto& s : dihedral_symmetries(n)) {
        MatrixForm g = f.apply(s);
        // variable k of g is the variable order[k] of f
        std::vector<std::size_t> rename(n);
        for (std::size_t k = 0; k < n; ++k) rename[k] = static_cast<std::size_t>(g.order[k]);
        EXPECT_EQ(symbolic_minors(g.m, g.ell, rename), original) << s.label();
      }
    }
}

TEST(Determinantal, ReversalNegatesGap) {
  auto inst = example_family(4);
  for (const auto& s : dihedral_symmetries(4)) {
    auto t = inst.transformed(s);
    EXPECT_EQ(t.c(), s.reversed ? -inst.c() : inst.c());
    EXPECT_NO_THROW(check_form(t.semigroup(), t.form()));
    EXPECT_TRUE(validate_defining_ideal(t));
  }
}

TEST(Determinantal, Classification) {
  auto a = build(NumericalSemigroup({3, 4, 5}), {3, 4, 5}, {2, 1, 1}, {1, 1, 1});
  auto ca = classify_nearly_gorenstein(a);
  EXPECT_TRUE(ca.is_ng);
  EXPECT_EQ(ca.which, TheoremCase::B);
  EXPECT_EQ(ca.symmetry, Symmetry{});
  EXPECT_TRUE(classify_almost_gorenstein(a));
  EXPECT_TRUE(arithmetic_progression_check(a));
  for (Int m : {3, 4, 5, 6, 8, 10}) {
    auto b = example_family(m);
    auto cb = classify_nearly_gorenstein(b);
    EXPECT_TRUE(cb.is_ng);
    EXPECT_EQ(cb.which, TheoremCase::B);
    EXPECT_FALSE(classify_almost_gorenstein(b));
    EXPECT_TRUE(arithmetic_progression_check(b));
    EXPECT_EQ(b.semigroup().type(), 3u);
  }
}

TEST(Determinantal, FullPermutationScanFindsGivenForm) {
  auto b = example_family(3);
  auto forms = all_forms(b.semigroup_ptr(), 3);
  bool found = false;
  for (const auto& f : forms) found = found || f == b.form();
  EXPECT_TRUE(found);
  // every dihedral image is among the forms as well
  for (const auto& s : dihedral_symmetries(4)) {
    auto g = b.form().apply(s);
    EXPECT_NE(std::find(forms.begin(), forms.end(), g), forms.end()) << s.label();
  }
  auto cls = classify_nearly_gorenstein(b, true, 3);
  EXPECT_TRUE(cls.is_ng);
}

TEST(Determinantal, SmallCorpusAgreesWithOracle) {
  int count = 0;
  for (Int m0 = 1; m0 <= 3; ++m0)
    for (Int m1 = 1; m1 <= 3; ++m1)
      for (Int m2 = 1; m2 <= 3; ++m2)
        for (Int l0 = 1; l0 <= 3; ++l0)
          for (Int l1 = 1; l1 <= 3; ++l1)
            for (Int l2 = 1; l2 <= 3; ++l2) {
              V m{m0, m1, m2}, l{l0, l1, l2};
              for (const auto& inst : search_instances(m, l, 150)) {
                ++count;
                const auto& h = inst.semigroup();
                bool min_one = true;
                for (std::size_t i = 0; i < 3; ++i) min_one = min_one && std::min(m[i], l[i]) == 1;
                EXPECT_EQ(classify_nearly_gorenstein(inst).is_ng, min_one);
                EXPECT_EQ(is_nearly_gorenstein_oracle(h), min_one);
                EXPECT_EQ(classify_almost_gorenstein(inst), h.is_almost_symmetric());
                EXPECT_EQ(h.type(), 2u);
                for (const auto& s : dihedral_symmetries(3)) {
                  auto t = inst.transformed(s);
                  EXPECT_EQ(classify_nearly_gorenstein(t).is_ng, min_one);
                  EXPECT_EQ(classify_almost_gorenstein(t), h.is_almost_symmetric());
                }
              }
            }
  EXPECT_GT(count, 50);
}

// A window holds n - 1 cyclically consecutive entries, read in either
// direction; the full cycle is never required.
TEST(Determinantal, ProgressionWindow) {
  auto short_window = build(NumericalSemigroup({5, 7, 8}), {7, 8, 5}, {1, 2, 2}, {2, 1, 1});
  EXPECT_TRUE(arithmetic_progression_check(short_window));

  auto brute = [](const std::vector<Int>& a) {
    std::size_t n = a.size();
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<Int> w;
      for (std::size_t k = 0; k + 1 < n; ++k) w.push_back(a[(s + k) % n]);
      std::set<Int> steps;
      for (std::size_t k = 1; k < w.size(); ++k) steps.insert(w[k] - w[k - 1]);
      if (steps.size() <= 1) return true;
    }
    return false;
  };
  std::size_t negatives = 0;
  for (Int x = 1; x <= 3; ++x)
    for (Int y = 1; y <= 3; ++y)
      for (const auto& inst : search_instances({x, 1, y, 1}, {1, 2, 1, 3}, 500)) {
        EXPECT_EQ(arithmetic_progression_check(inst), brute(inst.order()));
        negatives += !brute(inst.order());
      }
  EXPECT_GT(negatives, 0u);
}

#include <gtest/gtest.h>

#include <set>

#include "hcb/error.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hcb;
using hcb::test::elem;
using hcb::test::type;
using hcb::test::wt;

TEST(Coxeter, GroupSizesAndCanonicalOrder) {
  for (const char* label : {"A1", "A2", "A3", "B2", "B3", "G2", "D4", "A1xA1"}) {
    const auto d = type(label);
    const auto g = weyl_group(d);
    ASSERT_EQ(g->size(), d->weyl_group_order()) << label;
    EXPECT_TRUE(g->element(0).is_identity());
    for (std::size_t k = 1; k < g->size(); ++k) {
      EXPECT_TRUE(canonical_less(*d, g->element(k - 1), g->element(k))) << label << " at " << k;
      EXPECT_EQ(g->length(k), g->element(k).length());
      EXPECT_EQ(g->word(k).size(), static_cast<std::size_t>(g->length(k)));
    }
    EXPECT_EQ(g->length(g->longest_index()), static_cast<int>(d->num_positive_roots()));
  }
}

TEST(Coxeter, BoundIsEnforced) {
  EXPECT_THROW(generate_group(type("A4"), 100), BoundExceeded);
  EXPECT_EQ(generate_group(type("A4"), 120).size(), 120u);
}

TEST(Coxeter, ReducedWordsRoundTrip) {
  const auto d = type("C3");
  const auto g = weyl_group(d);
  for (std::size_t k = 0; k < g->size(); ++k) {
    const auto& w = g->element(k);
    EXPECT_EQ(d->from_word(d->reduced_word(w)), w);
    EXPECT_EQ(g->reduced_word(w), g->word(k));
  }
}

TEST(Coxeter, LengthChangesByOne) {
  const auto d = type("B3");
  const auto g = weyl_group(d);
  for (std::size_t k = 0; k < g->size(); ++k) {
    for (std::size_t i = 0; i < g->rank(); ++i) {
      EXPECT_EQ(std::abs(g->length(g->right_multiply(k, i)) - g->length(k)), 1);
      EXPECT_EQ(g->is_right_descent(g->element(k), i), g->length(g->right_multiply(k, i)) < g->length(k));
      EXPECT_EQ(g->is_left_descent(g->element(k), i), g->length(g->left_multiply(k, i)) < g->length(k));
    }
  }
}

TEST(Coxeter, BruhatExamples) {
  const auto d = type("A2");
  EXPECT_FALSE(bruhat_leq(*d, elem(*d, {1, 2}), elem(*d, {2, 1})));
  EXPECT_TRUE(bruhat_leq(*d, elem(*d, {1}), elem(*d, {2, 1})));
  EXPECT_TRUE(bruhat_leq(*d, d->identity(), elem(*d, {1, 2, 1})));
  EXPECT_FALSE(bruhat_leq(*d, elem(*d, {1, 2, 1}), elem(*d, {1, 2})));
}

TEST(Coxeter, BruhatMatchesSubwordOracle) {
  for (const char* label : {"A3", "B3", "G2", "A1xA1"}) {
    const auto g = weyl_group(type(label));
    const auto leq = oracle::subword_bruhat(*g);
    for (std::size_t w = 0; w < g->size(); ++w) {
      for (std::size_t x = 0; x < g->size(); ++x) {
        ASSERT_EQ(g->bruhat_leq(x, w), leq[w][x] != 0) << label << " x=" << x << " w=" << w;
      }
    }
  }
}

TEST(Coxeter, ReflectionSubgroupIsCoxeter) {
  // Pairings with the coroots are c_2 / 3, so the integral roots are the
  // short ones, an A2 subsystem that is not parabolic.
  const auto d = type("G2");
  const auto id = integral_datum(d, wt("0,1/3"));
  ASSERT_EQ(id->w_int().size(), 6u);
  EXPECT_EQ(id->w_int().rank(), 2u);
  EXPECT_EQ(id->w_int().length(id->w_int().longest_index()), 3);
  const auto leq = oracle::subword_bruhat(id->w_int());
  for (std::size_t w = 0; w < 6; ++w) {
    for (std::size_t x = 0; x < 6; ++x) EXPECT_EQ(id->w_int().bruhat_leq(x, w), leq[w][x] != 0);
  }
}

TEST(Coxeter, DotStabilizerExamples) {
  const auto a2 = type("A2");
  EXPECT_EQ(dot_stabilizer(a2, wt("-1,0")).elements, test::sorted({a2->identity(), a2->simple_reflection(0)}));
  EXPECT_EQ(dot_stabilizer(a2, wt("0,0")).order(), 1u);
  EXPECT_EQ(dot_stabilizer(a2, wt("-1,-1")).order(), 6u);
  const auto a1 = type("A1");
  EXPECT_EQ(dot_stabilizer(a1, wt("-1/2")).order(), 1u);
}

TEST(Coxeter, DotStabilizerMatchesBruteForce) {
  for (const char* label : {"A3", "B2", "G2", "C3"}) {
    const auto d = type(label);
    for (const char* csv : {"-1,0,0", "-1,-1,0", "0,-1/2,-1/2", "-1/2,-1/2,-1/2", "-1,1,-1"}) {
      Weight lam = wt(csv);
      if (lam.rank() != d->rank()) lam = Weight(std::vector<Rational>(lam.coords().begin(), lam.coords().begin() + static_cast<long>(d->rank())));
      EXPECT_EQ(dot_stabilizer(d, lam).elements, test::sorted(brute_force_stabilizer(d, lam)))
          << label << " " << lam.to_string();
    }
  }
}

TEST(Coxeter, DoubleCosetsExamples) {
  const auto d = type("A2");
  const auto g = generate_group(d);
  const auto h = make_subgroup(*d, {d->simple_reflection(0)}, SubgroupKind::parabolic);
  const auto k = make_subgroup(*d, {d->simple_reflection(1)}, SubgroupKind::parabolic);
  const auto dec = double_cosets(*d, g, h, k);
  EXPECT_EQ(dec.cosets.size(), 2u);
  EXPECT_EQ(dec.ambient_size, 6u);
  std::size_t total = 0;
  for (const auto& c : dec.cosets) total += c.members.size();
  EXPECT_EQ(total, 6u);
  EXPECT_TRUE(dec.cosets[0].representative.is_identity());
}

TEST(Coxeter, DoubleCosetsMatchOracleAndAreSymmetric) {
  const auto d = type("B3");
  const auto g = generate_group(d);
  std::vector<SubgroupHandle> subs;
  subs.push_back(make_subgroup(*d, {}, SubgroupKind::parabolic));
  subs.push_back(make_subgroup(*d, {d->simple_reflection(0)}, SubgroupKind::parabolic));
  subs.push_back(make_subgroup(*d, {d->simple_reflection(1), d->simple_reflection(2)}, SubgroupKind::parabolic));
  subs.push_back(make_subgroup(*d, {d->reflection(d->num_positive_roots() - 1)}, SubgroupKind::reflection));
  for (const auto& h : subs) {
    for (const auto& k : subs) {
      const auto dec = double_cosets(*d, g, h, k);
      EXPECT_EQ(dec.cosets.size(), oracle::double_coset_count(g, h.elements, k.elements));
      EXPECT_EQ(dec.cosets.size(), double_cosets(*d, g, k, h).cosets.size());
      std::set<WeylElement> seen;
      for (const auto& c : dec.cosets) {
        for (const auto& m : c.members) EXPECT_TRUE(seen.insert(m).second);
        for (const auto& m : c.members) EXPECT_FALSE(canonical_less(*d, m, c.representative));
      }
      EXPECT_EQ(seen.size(), g.size());
    }
  }
}

TEST(Coxeter, SubgroupClosure) {
  const auto d = type("A3");
  const auto h = make_subgroup(*d, {d->simple_reflection(0), d->simple_reflection(2)}, SubgroupKind::parabolic);
  EXPECT_EQ(h.order(), 4u);
  EXPECT_TRUE(h.contains(elem(*d, {1, 3})));
  EXPECT_FALSE(h.contains(elem(*d, {2})));
  EXPECT_THROW(make_subgroup(*d, {d->simple_reflection(0), d->simple_reflection(1)}, SubgroupKind::generic, 5),
               BoundExceeded);
}

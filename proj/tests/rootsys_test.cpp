#include <gtest/gtest.h>

#include "hcb/error.hpp"
#include "hcb/lattice.hpp"
#include "support.hpp"

using namespace hcb;
using hcb::test::elem;
using hcb::test::type;
using hcb::test::wt;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("2/4")), "1/2");
  EXPECT_EQ(to_string(parse_rational("-3")), "-3");
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("x"), InvalidInput);
  EXPECT_THROW(parse_rational(""), InvalidInput);
  EXPECT_EQ(ceil_to_integer(Rational(-5, 2)), -2);
  EXPECT_THROW(to_integer(Rational(1, 3)), InvalidInput);
}

TEST(Lattice, SmithFormReconstructs) {
  const IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const SmithForm s = smith_normal_form(a);
  EXPECT_EQ(multiply(multiply(s.U, a), s.V), s.D);
  EXPECT_EQ(s.invariant_factors, (IntVector{2, 6, 12}));
}

TEST(Lattice, QuotientOfCartanMatrices) {
  EXPECT_EQ(type("A3")->weight_classes().moduli(), (std::vector<long long>{4}));
  EXPECT_EQ(type("D4")->weight_classes().moduli(), (std::vector<long long>{2, 2}));
  EXPECT_EQ(type("G2")->cartan_determinant(), 1);
  EXPECT_EQ(type("E6")->cartan_determinant(), 3);
  EXPECT_EQ(type("A1xA1")->cartan_determinant(), 4);
}

TEST(Lattice, IntegerSystems) {
  EXPECT_TRUE(solve_integer_system({{2, 0}, {0, 3}}, {4, 9}).has_value());
  EXPECT_FALSE(solve_integer_system({{2, 0}, {0, 3}}, {3, 9}).has_value());
  const auto x = solve_rational_system({{Rational(2), Rational(1)}, {Rational(1), Rational(1)}}, {Rational(3), Rational(2)});
  EXPECT_EQ(x, (RationalVector{1, 1}));
  EXPECT_THROW(solve_rational_system({{Rational(1), Rational(1)}, {Rational(1), Rational(1)}}, {Rational(0), Rational(0)}),
               InvalidInput);
}

TEST(RootSystem, SizesMatchClassification) {
  struct Row {
    const char* label;
    std::size_t positive;
    unsigned long long order;
  };
  for (const Row& r : {Row{"A1", 1, 2}, Row{"A2", 3, 6}, Row{"A3", 6, 24}, Row{"A4", 10, 120}, Row{"B2", 4, 8},
                       Row{"B3", 9, 48}, Row{"C3", 9, 48}, Row{"D4", 12, 192}, Row{"G2", 6, 12}, Row{"F4", 24, 1152},
                       Row{"A1xA1", 2, 4}, Row{"E6", 36, 51840}}) {
    const auto d = type(r.label);
    EXPECT_EQ(d->num_positive_roots(), r.positive) << r.label;
    EXPECT_EQ(d->num_roots(), 2 * r.positive) << r.label;
    EXPECT_EQ(d->weyl_group_order(), r.order) << r.label;
  }
}

TEST(RootSystem, RejectsBadLabels) {
  for (const char* bad : {"", "A0", "B1", "E9", "G3", "X2", "A2x", "F4xQ1"}) {
    EXPECT_THROW(type(bad), InvalidInput) << bad;
  }
}

TEST(RootSystem, CartanConventions) {
  // B2: alpha_1 long, alpha_2 short; <alpha_1, alpha_2^vee> = -2.
  const auto b2 = type("B2");
  EXPECT_EQ(b2->cartan_matrix()[1][0], -2);
  EXPECT_EQ(b2->cartan_matrix()[0][1], -1);
  const auto g2 = type("G2");
  EXPECT_EQ(g2->cartan_matrix()[0][1] * g2->cartan_matrix()[1][0], 3);
  // Highest root of G2 is 3 alpha_1 + 2 alpha_2 with alpha_1 short.
  EXPECT_TRUE(g2->find_root({3, 2}).has_value());
  EXPECT_FALSE(g2->find_root({2, 3}).has_value());
}

TEST(RootSystem, PositiveRootsFirstAndNegation) {
  const auto d = type("C3");
  for (std::size_t k = 0; k < d->num_roots(); ++k) {
    EXPECT_EQ(d->is_positive(k), d->root(k).height > 0);
    const std::size_t m = d->negate(k);
    for (std::size_t i = 0; i < d->rank(); ++i) EXPECT_EQ(d->root(m).simple_coords[i], -d->root(k).simple_coords[i]);
  }
  for (std::size_t i = 0; i < d->rank(); ++i) EXPECT_EQ(d->root(i).height, 1);
}

TEST(RootSystem, ReflectionsNegateTheirRootAndFixTheWall) {
  for (const char* label : {"A3", "B3", "C3", "G2", "D4"}) {
    const auto d = type(label);
    for (std::size_t k = 0; k < d->num_positive_roots(); ++k) {
      const WeylElement s = d->reflection(k);
      const Weight alpha = Weight::from_integers(d->root(k).as_weight);
      EXPECT_EQ(s.act(alpha), -alpha);
      EXPECT_EQ(s * s, d->identity());
      for (std::size_t i = 0; i < d->rank(); ++i) {
        IntVector e(d->rank(), 0);
        e[i] = 1;
        const Weight omega = Weight::from_integers(e);
        const Weight on_wall = omega - alpha * (d->pairing(omega, k) / 2);
        EXPECT_EQ(d->pairing(on_wall, k), 0);
        EXPECT_EQ(s.act(on_wall), on_wall);
      }
    }
  }
}

TEST(RootSystem, DotActionExamples) {
  const auto a1 = type("A1");
  EXPECT_EQ(dot_action(*a1, a1->simple_reflection(0), wt("0")), wt("-2"));
  const auto a2 = type("A2");
  EXPECT_EQ(dot_action(*a2, a2->simple_reflection(0), wt("0,0")), wt("-2,1"));
  EXPECT_EQ(dot_action(*a2, a2->identity(), wt("1/2,1/3")), wt("1/2,1/3"));
  EXPECT_EQ(a2->rho(), wt("1,1"));
}

TEST(RootSystem, DotActionIsAnAction) {
  const auto d = type("B3");
  const Weight lam = wt("1/2,-1/3,2");
  const WeylElement a = elem(*d, {1, 2, 3});
  const WeylElement b = elem(*d, {3, 2});
  EXPECT_EQ(dot_action(*d, a * b, lam), dot_action(*d, a, dot_action(*d, b, lam)));
  EXPECT_EQ(dot_action(*d, d->inverse(a), dot_action(*d, a, lam)), lam);
}

TEST(RootSystem, ClassifyWeight) {
  const auto a1 = type("A1");
  WeightClass c = classify_weight(*a1, wt("-1"));
  EXPECT_TRUE(c.dominant);
  EXPECT_FALSE(c.regular);
  EXPECT_EQ(c.zero_pairing_roots, (std::vector<std::size_t>{0}));
  c = classify_weight(*a1, wt("-2"));
  EXPECT_FALSE(c.dominant);
  EXPECT_TRUE(c.antidominant);
  EXPECT_TRUE(c.regular);
  // Non-integer pairings never obstruct dominance.
  c = classify_weight(*a1, wt("-7/2"));
  EXPECT_TRUE(c.dominant && c.antidominant && c.regular);
}

TEST(RootSystem, WeightLatticeTests) {
  const auto a2 = type("A2");
  LatticeMembership m = weight_lattice_tests(*a2, wt("1,1"));
  EXPECT_TRUE(m.in_weight_lattice);
  EXPECT_TRUE(m.in_root_lattice);
  EXPECT_EQ(m.weight_class->to_string(), "0 mod 3");
  EXPECT_EQ(lattice_class(*type("A3"), wt("0,1,0")).to_string(), "2 mod 4");
  EXPECT_EQ(lattice_class(*type("A1"), wt("1")).to_string(), "1 mod 2");
  m = weight_lattice_tests(*a2, wt("1/2,0"));
  EXPECT_FALSE(m.in_weight_lattice);
  EXPECT_FALSE(m.weight_class.has_value());
  EXPECT_THROW(lattice_class(*a2, wt("1/2,0")), InvalidInput);
}

TEST(RootSystem, RootsAreInTheZeroClass) {
  for (const char* label : {"A4", "B3", "D4", "G2", "A1xA1"}) {
    const auto d = type(label);
    for (const auto& r : d->roots()) EXPECT_TRUE(d->weight_classes().class_of(r.as_weight).is_zero()) << label;
  }
}

TEST(RootSystem, InnerProductIsInvariant) {
  const auto d = type("G2");
  const Weight a = wt("1/2,3");
  const Weight b = wt("-2,5/3");
  const WeylElement w = elem(*d, {1, 2, 1});
  EXPECT_EQ(d->inner_product(w.act(a), w.act(b)), d->inner_product(a, b));
}

TEST(RootSystem, RankMismatchIsInvalidInput) {
  const auto d = type("A2");
  EXPECT_THROW(dot_action(*d, d->identity(), wt("1")), InvalidInput);
  EXPECT_THROW(classify_weight(*d, wt("1,2,3")), InvalidInput);
}

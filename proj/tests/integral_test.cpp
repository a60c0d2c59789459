#include <gtest/gtest.h>

#include "hcb/error.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hcb;
using hcb::test::elem;
using hcb::test::type;
using hcb::test::wt;

namespace {

// Permutation of epsilon coordinates for type A_n: w(e_i - e_j) = e_sigma(i) - e_sigma(j).
std::vector<int> a_permutation(const CartanDatum& d, const WeylElement& w) {
  const std::size_t n = d.rank() + 1;
  auto root_of = [&](std::size_t i, std::size_t j) {
    IntVector c(d.rank(), 0);
    for (std::size_t k = std::min(i, j); k < std::max(i, j); ++k) c[k] = i < j ? 1 : -1;
    return *d.find_root(c);
  };
  std::vector<int> sigma(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& im = d.root(w.root_image(root_of(i, i == 0 ? 1 : 0))).simple_coords;
    std::size_t lo = 0;
    while (im[lo] == 0) ++lo;
    std::size_t hi = lo;
    while (hi < im.size() && im[hi] != 0) ++hi;
    sigma[i] = static_cast<int>(im[lo] > 0 ? lo : hi);
  }
  return sigma;
}

}  // namespace

TEST(Integral, IntegralWeightGivesWholeGroup) {
  const auto d = type("A2");
  const auto id = integral_datum(d, wt("0,0"));
  EXPECT_EQ(id->integral_roots().size(), 6u);
  EXPECT_EQ(id->w_int().size(), 6u);
  EXPECT_EQ(id->w_ext().size(), 6u);
  EXPECT_EQ(id->chamber().size(), 1u);
  EXPECT_EQ(lambda_sharp(*id), wt("0,0"));
  EXPECT_EQ(lambda_sharp(*integral_datum(d, wt("2,-1"))), wt("2,-1"));
}

TEST(Integral, A1Half) {
  const auto d = type("A1");
  const auto id = integral_datum(d, wt("1/2"));
  EXPECT_TRUE(id->integral_roots().empty());
  EXPECT_EQ(id->w_int().size(), 1u);
  EXPECT_EQ(id->w_ext().size(), 2u);
  EXPECT_EQ(id->chamber().size(), 2u);
  EXPECT_EQ(tau(*id, d->simple_reflection(0)).to_string(), "1 mod 2");
  EXPECT_TRUE(tau(*id, d->identity()).is_zero());
  const auto dec = chamber_decompose(*id, d->simple_reflection(0));
  EXPECT_EQ(dec.c, d->simple_reflection(0));
  EXPECT_TRUE(dec.u.is_identity());
  EXPECT_EQ(lambda_sharp(*id), wt("0"));
}

TEST(Integral, A2HalfRho) {
  const auto d = type("A2");
  const auto id = integral_datum(d, wt("1/2,1/2"));
  EXPECT_EQ(id->integral_roots().size(), 2u);
  EXPECT_EQ(id->w_int().size(), 2u);
  EXPECT_EQ(lambda_sharp(*id), wt("1/2,1/2"));
}

TEST(Integral, A3RegressionBlockAgainstBruteForce) {
  const auto d = type("A3");
  const Weight lam = wt("0,1/2,0");
  const auto id = integral_datum(d, lam);

  std::vector<WeylElement> ext, integral;
  for (const auto& w : generate_group(d)) {
    if ((w.act(lam) - lam).is_integral()) ext.push_back(w);
    if (weight_lattice_tests(*d, w.act(lam) - lam).in_root_lattice) integral.push_back(w);
  }
  ASSERT_EQ(ext.size(), 8u);
  EXPECT_EQ(id->w_ext().size(), 8u);
  EXPECT_EQ(test::sorted(id->w_ext()), test::sorted(ext));
  ASSERT_EQ(integral.size(), 4u);
  EXPECT_EQ(test::sorted(id->w_int().elements()), test::sorted(integral));
  EXPECT_EQ(id->integral_simples(), (std::vector<std::size_t>{0, 2}));
  const auto s1 = d->simple_reflection(0), s3 = d->simple_reflection(2);
  EXPECT_EQ(s1 * s3, s3 * s1);

  ASSERT_EQ(id->chamber().size(), 2u);
  const WeylElement c = id->chamber()[1];
  EXPECT_EQ(c, elem(*d, {2, 1, 3, 2}));
  EXPECT_EQ(a_permutation(*d, c), (std::vector<int>{2, 3, 0, 1}));
  EXPECT_EQ(c * s1 * d->inverse(c), s3);
  EXPECT_EQ(id->conjugate_simple(1, 0), 1u);
  EXPECT_EQ(tau(*id, c).to_string(), "2 mod 4");
  EXPECT_EQ(lattice_class(*d, c.act(lam) - lam), lattice_class(*d, wt("0,1,0")));
}

TEST(Integral, TauRejectsElementsOutsideExtendedGroup) {
  const auto d = type("A2");
  const auto id = integral_datum(d, wt("1/3,0"));
  for (const auto& w : generate_group(d)) {
    if (!id->in_w_ext(w)) EXPECT_THROW(tau(*id, w), InvalidInput);
  }
}

TEST(Integral, ChamberDecomposeExamples) {
  const auto d = type("A3");
  const auto id = integral_datum(d, wt("0,1/2,0"));
  for (std::size_t k = 0; k < id->w_int().size(); ++k) {
    const auto dec = chamber_decompose(*id, id->w_int().element(k));
    EXPECT_TRUE(dec.c.is_identity());
    EXPECT_EQ(dec.u, id->w_int().element(k));
  }
  for (const auto& c : id->chamber()) {
    const auto dec = chamber_decompose(*id, c);
    EXPECT_EQ(dec.c, c);
    EXPECT_TRUE(dec.u.is_identity());
  }
  for (const auto& w : id->w_ext()) {
    const auto dec = chamber_decompose(*id, w);
    EXPECT_EQ(dec.c * dec.u, w);
  }
}

TEST(Integral, DominantDotRep) {
  const auto a1 = type("A1");
  auto rep = dominant_dot_rep(*integral_datum(a1, wt("0")), wt("-2"));
  EXPECT_EQ(rep.w, a1->simple_reflection(0));
  EXPECT_EQ(rep.dominant, wt("0"));

  const auto a3 = type("A3");
  const Weight lam = wt("0,1/2,0");
  const auto id = integral_datum(a3, lam);
  rep = dominant_dot_rep(*id, dot_action(*a3, a3->simple_reflection(0), lam));
  EXPECT_EQ(rep.w, a3->simple_reflection(0));
  EXPECT_EQ(rep.dominant, lam);
  rep = dominant_dot_rep(*id, lam);
  EXPECT_TRUE(rep.w.is_identity());
  EXPECT_THROW(dominant_dot_rep(*id, wt("0,0,0")), InvalidInput);
}

TEST(Integral, RegularDominant) {
  EXPECT_EQ(find_regular_dominant(*integral_datum(type("A1"), wt("1/2"))), wt("1/2"));
  EXPECT_EQ(find_regular_dominant(*integral_datum(type("A1"), wt("-1"))), wt("0"));
  EXPECT_EQ(find_regular_dominant(*integral_datum(type("A2"), wt("0,0"))), wt("0,0"));
  const auto d = type("B3");
  const auto id = integral_datum(d, wt("-1,-1/2,-1"));
  const Weight nu = find_regular_dominant(*id);
  EXPECT_TRUE((nu - id->lambda()).is_integral());
  EXPECT_TRUE(classify_weight(*d, nu).dominant);
  EXPECT_EQ(dot_stabilizer(d, nu).order(), 1u);
}

TEST(Integral, Subgeneric) {
  const auto a1 = type("A1");
  EXPECT_EQ(find_subgeneric(*integral_datum(a1, wt("0")), 1), wt("-1"));
  EXPECT_THROW(find_subgeneric(*integral_datum(a1, wt("0")), 2), InvalidInput);
  EXPECT_THROW(find_subgeneric(*integral_datum(a1, wt("1/2")), 1), InvalidInput);

  const auto a2 = type("A2");
  const Weight m = find_subgeneric(*integral_datum(a2, wt("0,0")), 1);
  EXPECT_TRUE(classify_weight(*a2, m).dominant);
  EXPECT_EQ(brute_force_stabilizer(a2, m), test::sorted({a2->identity(), a2->simple_reflection(0)}));

  const auto a3 = type("A3");
  const auto id = integral_datum(a3, wt("0,1/2,0"));
  for (std::size_t i = 1; i <= 2; ++i) {
    const Weight mi = find_subgeneric(*id, i);
    EXPECT_TRUE((mi - id->lambda()).is_integral());
    EXPECT_TRUE(classify_weight(*a3, mi).dominant);
    const WeylElement s = a3->reflection(id->integral_simples()[i - 1]);
    EXPECT_EQ(test::sorted(brute_force_stabilizer(a3, mi)), test::sorted({a3->identity(), s}));
  }
}

TEST(Integral, Compatibility) {
  const auto a1 = type("A1");
  EXPECT_TRUE(are_compatible(a1, wt("1/2"), wt("1/2")));
  EXPECT_FALSE(are_compatible(a1, wt("0"), wt("1/2")));
  EXPECT_TRUE(are_compatible(a1, wt("1/3"), wt("4/3")));
  // -ω/2 and ω/2 lie in one W-orbit up to the lattice: s(ω/2) = -ω/2.
  EXPECT_TRUE(are_compatible(a1, wt("-1/2"), wt("1/2")));
  EXPECT_FALSE(are_compatible(type("A2"), wt("1/3,0"), wt("1/2,0")));
}

TEST(Integral, EnumerateXiExamples) {
  const auto a1 = type("A1");
  EXPECT_EQ(enumerate_xi(a1, wt("-1/2"), wt("-1/2")).size(), 2u);
  EXPECT_EQ(enumerate_xi(a1, wt("-1"), wt("0")).size(), 1u);
  EXPECT_EQ(enumerate_xi(a1, wt("0"), wt("0")).size(), 2u);
  EXPECT_TRUE(enumerate_xi(a1, wt("0"), wt("1/2")).empty());
}

TEST(Integral, XiCountsAgreeWithBurnside) {
  struct Case {
    const char* type;
    const char* mu;
    const char* lambda;
  };
  for (const Case& c : {Case{"A2", "-1,0", "0,0"}, Case{"A2", "-1,-1", "0,0"}, Case{"A3", "-1,1/2,0", "0,1/2,0"},
                        Case{"B2", "-1/2,-1/2", "1/2,1/2"}, Case{"G2", "0,-1", "0,0"}, Case{"A3", "0,-1/2,0", "0,1/2,-1"},
                        Case{"C3", "-1,0,-1/2", "0,0,1/2"}}) {
    const auto d = type(c.type);
    const auto aligned = align_pair(d, wt(c.mu), wt(c.lambda));
    ASSERT_TRUE(aligned.has_value()) << c.type << " " << c.mu;
    const auto& [mu, lam] = *aligned;
    const std::size_t xi = enumerate_xi(d, wt(c.mu), wt(c.lambda)).size();
    EXPECT_EQ(xi, oracle::burnside_orbit_count(d, mu, lam)) << c.type << " " << c.mu << " " << c.lambda;
    EXPECT_EQ(xi, xi_double_coset_count(d, mu, lam));
    EXPECT_EQ(xi, indecomposable_index(d, mu, lam).labels.size());
  }
}

TEST(Integral, ProperPairsAreMinimal) {
  const auto d = type("A3");
  for (const auto& p : enumerate_xi(d, wt("-1,0,0"), wt("0,0,0"))) {
    EXPECT_TRUE(classify_weight(*d, p.lambda).dominant);
    for (const auto& s : dot_stabilizer(d, p.lambda).elements) {
      const Weight other = dot_action(*d, s, p.mu);
      Rational h0 = 0, h1 = 0;
      for (const auto& q : d->simple_root_coords(p.mu)) h0 += q;
      for (const auto& q : d->simple_root_coords(other)) h1 += q;
      EXPECT_LE(h0, h1);
    }
  }
}

TEST(Integral, BoundExceeded) {
  EXPECT_THROW(integral_datum(type("A4"), wt("0,0,0,0"), 50), BoundExceeded);
}

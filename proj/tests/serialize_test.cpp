#include <gtest/gtest.h>

#include "hcb/error.hpp"
#include "support.hpp"

using namespace hcb;
using hcb::test::type;
using hcb::test::wt;

TEST(Serialize, Weights) {
  const Weight w = wt("1/2,-3,0");
  const Json j = weight_to_json(w);
  EXPECT_EQ(j.dump(), R"(["1/2","-3","0"])");
  EXPECT_EQ(weight_from_json(j, 3), w);
  EXPECT_EQ(weight_from_json(Json::parse("[1, \"2/4\"]"), 2), wt("1,1/2"));
  EXPECT_THROW(weight_from_json(j, 2), InvalidInput);
  EXPECT_THROW(weight_from_json(Json::parse(R"(["1/0"])"), 1), InvalidInput);
  EXPECT_THROW(weight_from_json(Json::parse("[0.5]"), 1), InvalidInput);
}

TEST(Serialize, Elements) {
  const auto d = type("A3");
  for (const auto& w : generate_group(d)) {
    EXPECT_EQ(element_from_json(*d, element_to_json(*d, w)), w);
    EXPECT_EQ(parse_element(*d, element_dashed(*d, w)), w);
    EXPECT_EQ(parse_element(*d, element_label(*d, w)), w);
  }
  EXPECT_EQ(element_label(*d, d->identity()), "e");
  EXPECT_THROW(parse_element(*d, "1-5"), InvalidInput);
  EXPECT_THROW(parse_element(*d, "1;2"), InvalidInput);
  EXPECT_THROW(element_from_json(*d, Json::parse("[0]")), InvalidInput);
}

TEST(Serialize, Words) {
  const auto id = integral_datum(type("A3"), wt("0,1/2,0"));
  const BimoduleWord w(id, {Letter::B(0), Letter::R(1)});
  const Json j = word_to_json(w);
  EXPECT_EQ(j["letters"].dump(), R"(["B:s1","R:2-1-3-2"])");
  EXPECT_EQ(word_from_json(id, j), w);
  EXPECT_EQ(word_from_json(id, j["letters"]), w);
  EXPECT_EQ(parse_letter(*id, "R:e"), Letter::R(0));
  EXPECT_EQ(parse_letter(*id, "B:2"), Letter::B(1));
  EXPECT_THROW(parse_letter(*id, "B:s3"), InvalidInput);
  EXPECT_THROW(parse_letter(*id, "R:1"), InvalidInput);
  EXPECT_THROW(parse_letter(*id, "X:1"), InvalidInput);
}

TEST(Serialize, Polynomials) {
  const LaurentPoly p = LaurentPoly::monomial(-1) + LaurentPoly::monomial(2, 3);
  EXPECT_EQ(poly_to_json(p).dump(), R"({"-1":1,"2":3})");
  EXPECT_EQ(poly_from_json(poly_to_json(p)), p);
  EXPECT_THROW(poly_from_json(Json::parse("[1]")), InvalidInput);
}

TEST(Serialize, IntegralSummary) {
  const auto id = integral_datum(type("A1"), wt("1/2"));
  const Json j = integral_to_json(*id);
  EXPECT_EQ(j["w_ext_order"], 2);
  EXPECT_EQ(j["chamber_order"], 2);
  EXPECT_EQ(j["tau"]["s1"], "1 mod 2");
  EXPECT_EQ(j["tau"]["e"], "0 mod 2");
}

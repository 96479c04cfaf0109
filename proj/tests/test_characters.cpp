#include "doctest.h"
#include "freudenthal_oracle.hpp"
#include "g2tok/characters.hpp"
#include "g2tok/root_datum.hpp"
#include "test_util.hpp"

using namespace g2tok;
using g2tok::testing::make_poly;

TEST_CASE("Weyl denominator for A2") {
  // (1-x)(1-y)(1-xy): the two xy contributions cancel.
  CHECK(weyl_denominator(build_a2_datum()) == make_poly({{0, 0, {1}},
                                                         {1, 0, {-1}},
                                                         {0, 1, {-1}},
                                                         {2, 1, {1}},
                                                         {1, 2, {1}},
                                                         {2, 2, {-1}}}));
}

TEST_CASE("deformed denominators") {
  const LaurentPoly d_a2 = deformed_denominator(build_a2_datum());
  CHECK(d_a2 == make_poly({{0, 0, {1}},
                           {1, 0, {0, -1}},
                           {0, 1, {0, -1}},
                           {1, 1, {0, -1, 1}},
                           {2, 1, {0, 0, 1}},
                           {1, 2, {0, 0, 1}},
                           {2, 2, {0, 0, 0, -1}}}));

  const LaurentPoly d_g2 = deformed_denominator(build_g2_datum());
  CHECK(d_g2.coeff(ExponentVector{0, 0}) == CoeffPoly::one());
  CHECK(d_g2.coeff(ExponentVector{1, 0}) == CoeffPoly{0, -1});
  CHECK(d_g2.coeff(ExponentVector{3, 1}) == CoeffPoly{0, -1, 1});

  // At t=1 the deformation becomes the Weyl denominator.
  for (const RootDatum* datum : {&build_a2_datum(), &build_g2_datum()})
    CHECK(specialize(deformed_denominator(*datum), Rational(1)) ==
          specialize(weyl_denominator(*datum), Rational(1)));
}

TEST_CASE("shifted characters for A2") {
  CHECK(shifted_character(build_a2_datum(), {0, 1}).poly ==
        make_poly({{0, 0, {1}}, {0, 1, {1}}, {1, 1, {1}}}));
  CHECK(shifted_character(build_a2_datum(), {1, 1}).poly == make_poly({{0, 0, {1}},
                                                                       {1, 0, {1}},
                                                                       {0, 1, {1}},
                                                                       {1, 1, {2}},
                                                                       {2, 1, {1}},
                                                                       {1, 2, {1}},
                                                                       {2, 2, {1}}}));
}

TEST_CASE("seven-dimensional G2 character") {
  const LaurentPoly chi = shifted_character(build_g2_datum(), {1, 0}).poly;
  CHECK(chi == make_poly({{0, 0, {1}},
                          {1, 0, {1}},
                          {1, 1, {1}},
                          {2, 1, {1}},
                          {3, 1, {1}},
                          {3, 2, {1}},
                          {4, 2, {1}}}));
}

TEST_CASE("shifted character invariants over a weight range") {
  const RootDatum& g2 = build_g2_datum();
  for (int l1 = 0; l1 <= 6; ++l1)
    for (int l2 = 0; l2 <= 6; ++l2) {
      const ShiftedCharacter chi = shifted_character(g2, {l1, l2});
      CHECK(chi.poly.coeff(ExponentVector{0, 0}) == CoeffPoly::one());
      std::int64_t total = 0;
      for (const auto& [e, c] : chi.poly.terms()) {
        REQUIRE(c.degree() == 0);  // constant in t
        REQUIRE(c.coeff(0) > 0);
        total += c.coeff(0);
      }
      CHECK(total == weyl_dimension(g2, {l1, l2}));
    }
}

TEST_CASE("Tokuyama numerator basics") {
  const RootDatum& g2 = build_g2_datum();
  SUBCASE("theta = 0 gives the deformed denominator") {
    CHECK(tokuyama_numerator(g2, {0, 0}) == deformed_denominator(g2));
    CHECK(tokuyama_numerator(build_a2_datum(), {0, 0}) == deformed_denominator(build_a2_datum()));
  }
  SUBCASE("t = 1 leaves the alternating Weyl sum") {
    for (int l1 = 0; l1 <= 4; ++l1)
      for (int l2 = 0; l2 <= 4; ++l2) {
        auto at1 = specialize(tokuyama_numerator(g2, {l1, l2}), Rational(1));
        CHECK(at1.size() == 12);
        int plus = 0, minus = 0;
        for (const auto& [e, v] : at1) {
          if (v == Rational(1)) ++plus;
          if (v == Rational(-1)) ++minus;
        }
        CHECK(plus == 6);
        CHECK(minus == 6);
      }
  }
  SUBCASE("t = 0 leaves the character") {
    for (Weight theta : {Weight{0, 0}, Weight{2, 1}, Weight{1, 3}}) {
      CHECK(specialize(tokuyama_numerator(g2, theta), Rational(0)) ==
            specialize(shifted_character(g2, theta).poly, Rational(0)));
    }
  }
  SUBCASE("support is contained in the support of the shifted theta+rho character") {
    for (Weight theta : {Weight{0, 0}, Weight{1, 1}, Weight{3, 2}}) {
      const LaurentPoly big = shifted_character(g2, {theta.l1 + 1, theta.l2 + 1}).poly;
      for (const auto& [e, c] : tokuyama_numerator(g2, theta).terms())
        CHECK(!big.coeff(e).is_zero());
    }
  }
}

TEST_CASE("Freudenthal recursion agrees with the character quotient") {
  const RootDatum& g2 = build_g2_datum();
  for (int l1 = 0; l1 <= 3; ++l1)
    for (int l2 = 0; l2 <= 3; ++l2)
      CHECK(g2tok::testing::freudenthal_shifted_character(g2, {l1, l2}) ==
            shifted_character(g2, {l1, l2}).poly);

  const RootDatum& a2 = build_a2_datum();
  for (int l1 = 0; l1 <= 3; ++l1)
    for (int l2 = 0; l2 <= 3; ++l2)
      CHECK(g2tok::testing::freudenthal_shifted_character(a2, {l1, l2}) ==
            shifted_character(a2, {l1, l2}).poly);
}

#include "g2tok/characters.hpp"

#include <cassert>

#include "g2tok/errors.hpp"

namespace g2tok {

namespace {

LaurentPoly denominator_product(const RootDatum& datum, const CoeffPoly& scale) {
  LaurentPoly prod = LaurentPoly::one();
  for (const RootVector& alpha : datum.positive_roots) {
    LaurentPoly factor = LaurentPoly::one();
    factor.add_term(monomial_of(alpha), -scale);
    prod = prod * factor;
  }
  return prod;
}

}  // namespace

LaurentPoly weyl_denominator(const RootDatum& datum) {
  return denominator_product(datum, CoeffPoly::one());
}

LaurentPoly deformed_denominator(const RootDatum& datum) {
  return denominator_product(datum, CoeffPoly::t());
}

ShiftedCharacter shifted_character(const RootDatum& datum, Weight theta) {
  if (!theta.is_dominant()) throw Error("shifted_character requires a dominant theta");
  const auto group = weyl_group_elements(datum);
  const WeylElement& w0 = longest_element(group);

  // Highest weight of the representation with lowest weight -theta.
  const std::array<std::int64_t, 2> theta_w{theta.l1, theta.l2};
  auto lam = mat2_apply(w0.weight_action, theta_w);
  lam = {-lam[0], -lam[1]};
  const std::array<std::int64_t, 2> lam_rho{lam[0] + 1, lam[1] + 1};

  // Alternating sum of x^{w(lambda+rho)+rho+theta}; the global sign makes the
  // constant term (the w0 summand) +1.
  const int global = datum.positive_roots.size() % 2 == 0 ? 1 : -1;
  LaurentPoly numerator;
  for (const WeylElement& w : group) {
    auto img = mat2_apply(w.weight_action, lam_rho);
    std::array<std::int64_t, 2> exp_w{img[0] + 1 + theta.l1, img[1] + 1 + theta.l2};
    RootVector r = weight_to_root(datum, exp_w);
    assert(r.u >= 0 && r.v >= 0);
    numerator.add_term(monomial_of(r), CoeffPoly(global * w.sign));
  }

  ShiftedCharacter chi{theta, exact_div(numerator, weyl_denominator(datum))};
  assert(chi.poly.coeff(ExponentVector{0, 0}) == CoeffPoly::one());
  return chi;
}

LaurentPoly tokuyama_numerator(const RootDatum& datum, Weight theta) {
  return shifted_character(datum, theta).poly * deformed_denominator(datum);
}

}  // namespace g2tok

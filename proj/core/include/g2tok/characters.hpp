#pragma once

#include "g2tok/laurent_poly.hpp"
#include "g2tok/root_datum.hpp"

namespace g2tok {

// Irreducible character of the representation with lowest weight -theta,
// shifted so the lowest-weight term sits on the constant monomial. Support
// is contained in the codominant cone; coefficients are nonnegative integers
// constant in t; the constant term is 1; evaluating at x = y = 1 gives the
// Weyl dimension.
struct ShiftedCharacter {
  Weight theta;
  LaurentPoly poly;
};

// Weyl denominator prod_{alpha>0} (1 - x^alpha).
LaurentPoly weyl_denominator(const RootDatum& datum);

// Deformed denominator D = prod_{alpha>0} (1 - t x^alpha); D|_{t=1} is the
// Weyl denominator and D|_{t=0} = 1.
LaurentPoly deformed_denominator(const RootDatum& datum);

// Shifted character computed as an exact quotient: the alternating Weyl sum
// over x^{w(lambda+rho)+rho+theta} divided by the Weyl denominator, where
// lambda = -w0(theta) is the highest weight of the representation with
// lowest weight -theta.
ShiftedCharacter shifted_character(const RootDatum& datum, Weight theta);

// Tokuyama numerator N_theta = shifted character times D.
LaurentPoly tokuyama_numerator(const RootDatum& datum, Weight theta);

}  // namespace g2tok

#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "g2tok/coeff_poly.hpp"
#include "g2tok/laurent_poly.hpp"
#include "g2tok/report.hpp"
#include "g2tok/root_datum.hpp"

namespace g2tok {

// A2 Littelmann pattern [a,b][c] with cone inequalities a >= b >= 0, c >= 0.
// Serves as a proven end-to-end check of the polynomial core, the character
// oracle and the decoration logic.
struct A2Pattern {
  int a = 0;
  int b = 0;
  int c = 0;

  friend auto operator<=>(const A2Pattern&, const A2Pattern&) = default;
};

std::ostream& operator<<(std::ostream& os, const A2Pattern& pi);

// Flags indexed 0..2 for a, b, c.
struct A2Decoration {
  std::array<bool, 3> circled{};
  std::array<bool, 3> boxed{};
};

// Circled: a=b, b=0, c=0. Boxed: a = l2+b, b = l1, c = l1+a-2b. Throws
// BoundViolationError when some entry exceeds its bound for lambda.
A2Decoration decorate_a2(const A2Pattern& pi, Weight lambda);

CoeffPoly standard_contribution_a2(const A2Pattern& pi, const A2Decoration& dec);

// x^pi = x^{b+c} y^{a}.
ExponentVector pattern_monomial_a2(const A2Pattern& pi);

// Patterns of B(lambda) in nested-loop order (b, a, c) ascending.
std::vector<A2Pattern> enumerate_a2_crystal(Weight lambda);

// Sum of standard contributions over B(theta + rho).
LaurentPoly tokuyama_sum_a2(Weight theta);

// Compares tokuyama_sum_a2 with the A2 Tokuyama numerator.
VerificationReport verify_tokuyama_a2(Weight theta);

}  // namespace g2tok

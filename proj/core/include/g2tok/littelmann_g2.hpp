#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "g2tok/coeff_poly.hpp"
#include "g2tok/laurent_poly.hpp"
#include "g2tok/report.hpp"
#include "g2tok/root_datum.hpp"

namespace g2tok {

// G2 Littelmann pattern [a,b,c,d,e][f]. Entries are nonnegative integers
// subject to the cone inequalities 2a >= 2b >= c >= 2d >= 2e >= 0, f >= 0.
struct G2Pattern {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;
  int e = 0;
  int f = 0;

  int entry(int i) const;  // i = 0..5 for a..f
  friend auto operator<=>(const G2Pattern&, const G2Pattern&) = default;
};

std::ostream& operator<<(std::ostream& os, const G2Pattern& pi);

// Circled/boxed flags per entry, indexed 0..5 for a..f. An entry is circled
// when its cone inequality is an equality, boxed when it reaches the upper
// bound determined by the highest weight.
struct Decoration {
  std::array<bool, 6> circled{};
  std::array<bool, 6> boxed{};

  bool any_boxed_and_circled() const;
  // Boxing of the top row (a..e) packed little-endian into five bits.
  unsigned top_boxing() const;
};

bool satisfies_circling(const G2Pattern& pi);

// Flags relative to the highest weight lambda; throws BoundViolationError if
// some entry exceeds its upper bound (the pattern is not in B(lambda)).
Decoration decorate(const G2Pattern& pi, Weight lambda);

// Decoration in the infinite crystal: no entry ever reaches an upper bound,
// so nothing is boxed.
Decoration decorate_infinity(const G2Pattern& pi);

// A pattern is bad middle when c = b + d and b = d + 1. Depends only on the
// top row.
bool is_bad_middle(const G2Pattern& pi);

// Value of one decorated entry: 0 if boxed and circled, 1 if circled only,
// -t if boxed only, 1 - t if neither.
const CoeffPoly& entry_contribution(bool circled, bool boxed);

// Standard contribution H: product of the entry values over all six entries.
CoeffPoly standard_contribution(const G2Pattern& pi, const Decoration& dec);

// Corrected contribution. Equal to H unless the pattern is bad middle, has
// no boxed-and-circled entry, and its top-row boxing is one of the five
// tabulated ones; in that case the top row's value is replaced by the case
// table and multiplied by the bottom entry's value.
CoeffPoly hat_contribution(const G2Pattern& pi, const Decoration& dec);

// x^pi = x^{a+c+e} y^{b+d+f}.
ExponentVector pattern_monomial(const G2Pattern& pi);

// All patterns of B(lambda) in the canonical nested-loop order
// (e, d, c, b, a, f) ascending. The count equals weyl_dimension(lambda).
std::vector<G2Pattern> enumerate_crystal(Weight lambda);

struct ConjectureSum {
  LaurentPoly rhs;  // sum of hat contributions times pattern monomials
  CrystalCensus census;
};

// Sums hat_contribution(pi) * x^pi over B(theta + rho).
ConjectureSum conjecture_sum(Weight theta);

LaurentPoly conjecture_rhs(Weight theta);

// Compares conjecture_rhs(theta) against the Tokuyama numerator for G2.
// A mismatch is a report outcome, not an error.
VerificationReport verify_conjecture(Weight theta);

}  // namespace g2tok

#pragma once

#include "g2tok/laurent_poly.hpp"
#include "g2tok/root_datum.hpp"

namespace g2tok::testing {

// Shifted character of the irreducible with lowest weight -theta, computed
// with the Freudenthal multiplicity recursion. Deliberately avoids the
// Weyl-character-formula division path so the two can check each other.
LaurentPoly freudenthal_shifted_character(const RootDatum& datum, Weight theta);

}  // namespace g2tok::testing

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "g2tok/laurent_poly.hpp"
#include "g2tok/root_datum.hpp"

namespace g2tok {

// Per-crystal bookkeeping gathered while summing contributions:
//   patterns          total number of patterns enumerated,
//   zero_contribution patterns with an entry both boxed and circled,
//   bad_middle        bad-middle patterns among the remaining ones,
//   altered           patterns whose corrected contribution differs from the
//                     standard one.
struct CrystalCensus {
  std::int64_t patterns = 0;
  std::int64_t zero_contribution = 0;
  std::int64_t bad_middle = 0;
  std::int64_t altered = 0;

  friend bool operator==(const CrystalCensus&, const CrystalCensus&) = default;
};

struct CoeffMismatch {
  ExponentVector monomial;
  CoeffPoly lhs;  // character-formula side
  CoeffPoly rhs;  // pattern-sum side
};

// Outcome of one identity check. equal is true iff mismatches is empty.
// elapsed_seconds is informational only and never serialized, so written
// reports stay byte-identical across runs and thread counts.
struct VerificationReport {
  std::string task;
  Weight theta;
  bool equal = false;
  CrystalCensus census;
  std::vector<CoeffMismatch> mismatches;
  double elapsed_seconds = 0.0;
};

// Collects the differing monomials of two polynomials in canonical order.
std::vector<CoeffMismatch> diff_terms(const LaurentPoly& lhs, const LaurentPoly& rhs);

}  // namespace g2tok

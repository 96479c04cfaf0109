#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "g2tok/laurent_poly.hpp"
#include "g2tok/littelmann_g2.hpp"

namespace g2tok {

// The six positive roots of G2 in a fixed order, in (x, y) root coordinates:
//   0: (0,1)  long simple
//   1: (1,0)  short simple
//   2: (1,1)
//   3: (2,1)
//   4: (3,1)
//   5: (3,2)
// Their total degrees are 1, 1, 2, 3, 4, 5.
inline constexpr int kG2RootCount = 6;
extern const std::array<RootVector, kG2RootCount> kG2PositiveRoots;

// Indices into kG2PositiveRoots, named after the standard labelling of the
// G2 root poset (alpha3' = alpha1 + 3 alpha2 is the second long non-simple
// root).
inline constexpr int kAlpha1 = 0;
inline constexpr int kAlpha2 = 1;
inline constexpr int kAlpha3 = 2;
inline constexpr int kAlpha4 = 3;
inline constexpr int kAlpha3Prime = 4;
inline constexpr int kAlpha5 = 5;

// Multiplicity function on the positive roots. The index counts the roots
// with nonzero multiplicity.
struct VectorPartition {
  std::array<std::int64_t, kG2RootCount> mult{};

  int index() const;
  ExponentVector monomial() const;
  friend auto operator<=>(const VectorPartition&, const VectorPartition&) = default;
};

std::ostream& operator<<(std::ostream& os, const VectorPartition& xi);

// Primitive generators of the circling cone in (a,b,c,d,e,f) coordinates.
// v4 is the extra point that splits the cone into the two unimodular cones
// C1 = <v1,v2,v3,v4,v5,v6> and C2 = <v1,v2,v3',v4,v5,v6>.
struct ConeGenerators {
  std::array<std::int64_t, 6> v1, v2, v3, v3p, v4, v5, v6;
};
const ConeGenerators& cone_generators();

// Determinant of a 6x6 integer matrix (fraction-free elimination).
std::int64_t det6(const std::array<std::array<std::int64_t, 6>, 6>& m);

// Bijection between circling-valid patterns and vector partitions: the
// pattern is decomposed in the unimodular basis of the cone (C1 or C2)
// containing it and the basis coefficients are reassigned to roots. On the
// overlap c = b + d both branches agree; the C1 branch is used. Preserves
// the monomial: pattern_monomial(pi) == pattern_to_partition(pi).monomial().
VectorPartition pattern_to_partition(const G2Pattern& pi);  // CirclingViolationError
G2Pattern partition_to_pattern(const VectorPartition& xi);

// All circling-valid patterns with monomial total degree <= max_degree, in
// nested-loop order (e, d, c, b, a, f).
std::vector<G2Pattern> enumerate_circling_patterns(int max_degree);

// Product side: prod_{alpha>0} (1 - t x^alpha) / (1 - x^alpha), truncated at
// total degree max_degree.
LaurentPoly gk_lhs_series(int max_degree);

// Vector-partition side: sum over partitions of (1-t)^{index} x^{partition}.
LaurentPoly partition_sum_series(int max_degree);

// Crystal side: sum over circling-valid patterns of the corrected
// contribution (nothing is boxed in the infinite crystal) times x^pi.
LaurentPoly gk_pattern_series(int max_degree);

// Relative-interior subcone of the intersection C' = C1 cap C2. A pattern
// lies in C' iff c = b + d; its label is the set of basis directions
// {v1,v2,v4,v5,v6} with strictly positive coefficient.
struct SubconeLabel {
  bool inside = false;  // c == b + d
  unsigned mask = 0;    // bits 0..4 = v1, v2, v4, v5, v6

  friend auto operator<=>(const SubconeLabel&, const SubconeLabel&) = default;
};

SubconeLabel subcone_classify(const G2Pattern& pi);

// "245"-style name listing the generator indices in the mask.
std::string subcone_name(unsigned mask);

// One audited subcone: vp marks a discrepancy between the standard
// contribution and (1-t)^{index of the partition}; corr marks patterns whose
// corrected contribution differs from the standard one.
struct AuditCell {
  bool vp = false;
  bool corr = false;
  std::int64_t vp_witnesses = 0;
  std::int64_t corr_witnesses = 0;
  std::int64_t patterns = 0;
};

// Audit over every circling-valid pattern of degree <= max_degree inside C'.
// The f entry multiplies both contributions by the same factor and adds the
// same root to the partition, so labels are aggregated with the v1 direction
// projected out; keys are masks over {v2, v4, v5, v6}.
struct AuditTable {
  int max_degree = 0;
  std::map<unsigned, AuditCell> cells;
};

AuditTable audit_subcones(int max_degree);

// Subcone masks that must carry vp (resp. corr) marks: exactly those whose
// label contains exactly one of {v4, v6} (resp. contains v4).
std::vector<unsigned> expected_vp_masks();
std::vector<unsigned> expected_corr_masks();

}  // namespace g2tok

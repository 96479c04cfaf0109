#include "g2tok/littelmann_g2.hpp"

#include <cassert>
#include <chrono>
#include <ostream>
#include <sstream>

#include "g2tok/characters.hpp"
#include "g2tok/errors.hpp"

namespace g2tok {

namespace {

// Upper bounds of the entries relative to lambda, in the order a..f. Each
// bound depends only on entries that precede it in the enumeration order
// (e, d, c, b, a, f).
std::array<int, 6> entry_bounds(const G2Pattern& pi, Weight lambda) {
  const int l1 = lambda.l1, l2 = lambda.l2;
  return {
      l1 + 3 * pi.b - 2 * pi.c + 3 * pi.d - 2 * pi.e,       // a
      l2 + pi.c - 2 * pi.d + pi.e,                          // b
      l1 + 3 * pi.d - 2 * pi.e,                             // c
      l2 + pi.e,                                            // d
      l1,                                                   // e
      l2 + pi.a - 2 * pi.b + pi.c - 2 * pi.d + pi.e,        // f
  };
}

std::array<bool, 6> circled_flags(const G2Pattern& pi) {
  return {pi.a == pi.b,   2 * pi.b == pi.c, pi.c == 2 * pi.d,
          pi.d == pi.e,   pi.e == 0,        pi.f == 0};
}

// Boxing vectors of the top row with corrected case tables, packed
// little-endian (bit 0 = a, ..., bit 4 = e).
constexpr unsigned kBx00100 = 1u << 2;
constexpr unsigned kBx10100 = (1u << 0) | (1u << 2);
constexpr unsigned kBx10000 = 1u << 0;
constexpr unsigned kBx01010 = (1u << 1) | (1u << 3);
constexpr unsigned kBx00000 = 0u;

// Exact forms of the tabulated rational expressions as polynomials in t.
const CoeffPoly kOneMinusT{1, -1};                  // (q-1)/q
const CoeffPoly kOneMinusTSq{1, -2, 1};             // (q^2-2q+1)/q^2
const CoeffPoly kOneMinusTCu{1, -3, 3, -1};         // (q^3-3q^2+3q-1)/q^3
const CoeffPoly kE0MiddleEq{1, -3, 4, -2};          // (q^3-3q^2+4q-2)/q^3
const CoeffPoly kEPosEq{1, -3, 4, -3, 1};           // (q^4-3q^3+4q^2-3q+1)/q^4
const CoeffPoly kEPosStrict{1, -4, 7, -7, 4, -1};   // (q^5-4q^4+7q^3-7q^2+4q-1)/q^5
const CoeffPoly kBoxedPairEq{0, 0, 1, -1};          // (q-1)/q^3
const CoeffPoly kBoxedPairEqE{0, 0, 1, -2, 2, -1};  // (q^3-2q^2+2q-1)/q^5
const CoeffPoly kBoxedPairNeg{0, 0, 0, -1, 2, -1};  // (-q^2+2q-1)/q^5
const CoeffPoly kSingleBoxE0{0, -1, 1};             // (-q+1)/q^2
const CoeffPoly kSingleBoxD{0, -1, 2, -2, 1};       // (-q^3+2q^2-2q+1)/q^4

// Standard contribution of the top row only.
CoeffPoly top_row_contribution(const Decoration& dec) {
  CoeffPoly prod = CoeffPoly::one();
  for (int i = 0; i < 5; ++i) prod = prod * entry_contribution(dec.circled[i], dec.boxed[i]);
  return prod;
}

// Corrected value of the top row for a bad-middle pattern with one of the
// five tabulated boxings. Sub-conditions are tested in the tabulated order;
// the first match wins.
CoeffPoly corrected_top(const G2Pattern& pi, const Decoration& dec, unsigned bx) {
  const int a = pi.a, b = pi.b, c = pi.c, d = pi.d, e = pi.e;
  switch (bx) {
    case kBx00100:
      return CoeffPoly::zero();
    case kBx10100:
      if (d == 0) return CoeffPoly::zero();
      return top_row_contribution(dec);
    case kBx10000:
      if (e == 0 && d == 0) return kSingleBoxE0;
      if (e == 0 && d > 0) return kSingleBoxD;
      if (e > 0) return top_row_contribution(dec);
      break;
    case kBx01010:
      if (a == b) return top_row_contribution(dec);
      if (b < a && a < c && e == 0) return CoeffPoly::zero();
      if (b < a && a < c - e && e > 0) return kBoxedPairNeg;
      if (a == c && e == 0) return kBoxedPairEq;
      if (a == c - e && e > 0) return kBoxedPairEqE;
      if (a > c && e == 0) return CoeffPoly::zero();
      if (a > c - e && e > 0) return kBoxedPairNeg;
      break;
    case kBx00000:
      if (e == 0) {
        if (a == b && d > 0) return kOneMinusTSq;
        if (b < a && a < c && d > 0) return kOneMinusTCu;
        if (a == c && d > 0) return kE0MiddleEq;
        if (a > c && d > 0) return kOneMinusTCu;
        if (a == b && d == 0) return kOneMinusT;
        if (a > b && d == 0) return kOneMinusTSq;
      } else {
        if (a == b && d > e) return kEPosEq;
        if (a > b && d > e) return kEPosStrict;
        if (a == b && d == e) return kOneMinusTSq;
        if (a > b && d == e) return kEPosEq;
      }
      break;
    default:
      assert(false && "corrected_top called with an untabulated boxing");
  }
  std::ostringstream os;
  os << "no case matches bad-middle pattern " << pi;
  throw NoCaseMatchError(os.str());
}

}  // namespace

int G2Pattern::entry(int i) const {
  switch (i) {
    case 0: return a;
    case 1: return b;
    case 2: return c;
    case 3: return d;
    case 4: return e;
    default: return f;
  }
}

std::ostream& operator<<(std::ostream& os, const G2Pattern& pi) {
  return os << "[" << pi.a << "," << pi.b << "," << pi.c << "," << pi.d << "," << pi.e << "]["
            << pi.f << "]";
}

bool Decoration::any_boxed_and_circled() const {
  for (int i = 0; i < 6; ++i)
    if (circled[i] && boxed[i]) return true;
  return false;
}

unsigned Decoration::top_boxing() const {
  unsigned bx = 0;
  for (int i = 0; i < 5; ++i)
    if (boxed[i]) bx |= 1u << i;
  return bx;
}

bool satisfies_circling(const G2Pattern& pi) {
  return 2 * pi.a >= 2 * pi.b && 2 * pi.b >= pi.c && pi.c >= 2 * pi.d && 2 * pi.d >= 2 * pi.e &&
         pi.e >= 0 && pi.f >= 0;
}

Decoration decorate(const G2Pattern& pi, Weight lambda) {
  Decoration dec;
  dec.circled = circled_flags(pi);
  const auto bounds = entry_bounds(pi, lambda);
  for (int i = 0; i < 6; ++i) {
    if (pi.entry(i) > bounds[i]) {
      std::ostringstream os;
      os << "entry " << "abcdef"[i] << " of " << pi << " exceeds its bound " << bounds[i];
      throw BoundViolationError(os.str());
    }
    dec.boxed[i] = pi.entry(i) == bounds[i];
  }
  return dec;
}

Decoration decorate_infinity(const G2Pattern& pi) {
  Decoration dec;
  dec.circled = circled_flags(pi);
  return dec;
}

bool is_bad_middle(const G2Pattern& pi) { return pi.c == pi.b + pi.d && pi.b == pi.d + 1; }

const CoeffPoly& entry_contribution(bool circled, bool boxed) {
  static const CoeffPoly minus_t{0, -1};
  if (circled && boxed) return CoeffPoly::zero();
  if (circled) return CoeffPoly::one();
  if (boxed) return minus_t;
  return kOneMinusT;
}

CoeffPoly standard_contribution(const G2Pattern& pi, const Decoration& dec) {
  (void)pi;
  CoeffPoly prod = top_row_contribution(dec);
  return prod * entry_contribution(dec.circled[5], dec.boxed[5]);
}

CoeffPoly hat_contribution(const G2Pattern& pi, const Decoration& dec) {
  if (dec.any_boxed_and_circled() || !is_bad_middle(pi)) return standard_contribution(pi, dec);
  const unsigned bx = dec.top_boxing();
  if (bx != kBx00100 && bx != kBx10100 && bx != kBx10000 && bx != kBx01010 && bx != kBx00000)
    return standard_contribution(pi, dec);
  return corrected_top(pi, dec, bx) * entry_contribution(dec.circled[5], dec.boxed[5]);
}

ExponentVector pattern_monomial(const G2Pattern& pi) {
  return ExponentVector{pi.a + pi.c + pi.e, pi.b + pi.d + pi.f};
}

std::vector<G2Pattern> enumerate_crystal(Weight lambda) {
  if (!lambda.is_dominant()) throw Error("enumerate_crystal requires a dominant weight");
  const int l1 = lambda.l1, l2 = lambda.l2;
  std::vector<G2Pattern> out;
  for (int e = 0; e <= l1; ++e)
    for (int d = e; d <= l2 + e; ++d)
      for (int c = 2 * d; c <= l1 + 3 * d - 2 * e; ++c)
        for (int b = (c + 1) / 2; b <= l2 + c - 2 * d + e; ++b)
          for (int a = b; a <= l1 + 3 * b - 2 * c + 3 * d - 2 * e; ++a)
            for (int f = 0; f <= l2 + a - 2 * b + c - 2 * d + e; ++f)
              out.push_back(G2Pattern{a, b, c, d, e, f});
  return out;
}

ConjectureSum conjecture_sum(Weight theta) {
  const Weight lambda{theta.l1 + 1, theta.l2 + 1};
  ConjectureSum sum;
  for (const G2Pattern& pi : enumerate_crystal(lambda)) {
    ++sum.census.patterns;
    const Decoration dec = decorate(pi, lambda);
    if (dec.any_boxed_and_circled()) {
      ++sum.census.zero_contribution;
      continue;  // both contributions vanish
    }
    if (is_bad_middle(pi)) ++sum.census.bad_middle;
    const CoeffPoly hat = hat_contribution(pi, dec);
    if (hat != standard_contribution(pi, dec)) ++sum.census.altered;
    sum.rhs.add_term(pattern_monomial(pi), hat);
  }
  return sum;
}

LaurentPoly conjecture_rhs(Weight theta) { return conjecture_sum(theta).rhs; }

VerificationReport verify_conjecture(Weight theta) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.task = "verify";
  report.theta = theta;
  const ConjectureSum sum = conjecture_sum(theta);
  report.census = sum.census;
  const LaurentPoly lhs = tokuyama_numerator(build_g2_datum(), theta);
  report.mismatches = diff_terms(lhs, sum.rhs);
  report.equal = report.mismatches.empty();
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace g2tok

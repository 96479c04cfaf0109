#include "g2tok/littelmann_a2.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include "g2tok/characters.hpp"
#include "g2tok/errors.hpp"
#include "g2tok/littelmann_g2.hpp"

namespace g2tok {

std::ostream& operator<<(std::ostream& os, const A2Pattern& pi) {
  return os << "[" << pi.a << "," << pi.b << "][" << pi.c << "]";
}

A2Decoration decorate_a2(const A2Pattern& pi, Weight lambda) {
  const std::array<int, 3> entries{pi.a, pi.b, pi.c};
  const std::array<int, 3> bounds{lambda.l2 + pi.b, lambda.l1, lambda.l1 + pi.a - 2 * pi.b};
  A2Decoration dec;
  dec.circled = {pi.a == pi.b, pi.b == 0, pi.c == 0};
  for (int i = 0; i < 3; ++i) {
    if (entries[i] > bounds[i]) {
      std::ostringstream os;
      os << "entry " << "abc"[i] << " of " << pi << " exceeds its bound " << bounds[i];
      throw BoundViolationError(os.str());
    }
    dec.boxed[i] = entries[i] == bounds[i];
  }
  return dec;
}

CoeffPoly standard_contribution_a2(const A2Pattern& pi, const A2Decoration& dec) {
  (void)pi;
  CoeffPoly prod = CoeffPoly::one();
  for (int i = 0; i < 3; ++i) prod = prod * entry_contribution(dec.circled[i], dec.boxed[i]);
  return prod;
}

ExponentVector pattern_monomial_a2(const A2Pattern& pi) {
  return ExponentVector{pi.b + pi.c, pi.a};
}

std::vector<A2Pattern> enumerate_a2_crystal(Weight lambda) {
  if (!lambda.is_dominant()) throw Error("enumerate_a2_crystal requires a dominant weight");
  std::vector<A2Pattern> out;
  for (int b = 0; b <= lambda.l1; ++b)
    for (int a = b; a <= lambda.l2 + b; ++a)
      for (int c = 0; c <= lambda.l1 + a - 2 * b; ++c) out.push_back(A2Pattern{a, b, c});
  return out;
}

LaurentPoly tokuyama_sum_a2(Weight theta) {
  const Weight lambda{theta.l1 + 1, theta.l2 + 1};
  LaurentPoly sum;
  for (const A2Pattern& pi : enumerate_a2_crystal(lambda))
    sum.add_term(pattern_monomial_a2(pi), standard_contribution_a2(pi, decorate_a2(pi, lambda)));
  return sum;
}

VerificationReport verify_tokuyama_a2(Weight theta) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.task = "a2";
  report.theta = theta;
  const Weight lambda{theta.l1 + 1, theta.l2 + 1};
  LaurentPoly sum;
  for (const A2Pattern& pi : enumerate_a2_crystal(lambda)) {
    ++report.census.patterns;
    const A2Decoration dec = decorate_a2(pi, lambda);
    bool killed = false;
    for (int i = 0; i < 3; ++i) killed |= dec.circled[i] && dec.boxed[i];
    if (killed) ++report.census.zero_contribution;
    sum.add_term(pattern_monomial_a2(pi), standard_contribution_a2(pi, dec));
  }
  report.mismatches = diff_terms(tokuyama_numerator(build_a2_datum(), theta), sum);
  report.equal = report.mismatches.empty();
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace g2tok

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "g2tok/laurent_poly.hpp"

namespace g2tok::testing {

struct TermSpec {
  int m;
  int n;
  std::vector<std::int64_t> coeffs;
};

inline LaurentPoly make_poly(const std::vector<TermSpec>& specs) {
  LaurentPoly p;
  for (const auto& s : specs) p.add_term(ExponentVector{s.m, s.n}, CoeffPoly::from_coeffs(s.coeffs));
  return p;
}

inline CoeffPoly random_coeff_poly(std::mt19937& rng, int max_degree = 3, int max_abs = 4) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<std::int64_t> coeff(-max_abs, max_abs);
  std::vector<std::int64_t> cs(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& c : cs) c = coeff(rng);
  return CoeffPoly::from_coeffs(std::move(cs));
}

inline LaurentPoly random_laurent_poly(std::mt19937& rng, int max_exp = 3, int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_exp);
  LaurentPoly p;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i)
    p.add_term(ExponentVector{exp(rng), exp(rng)}, random_coeff_poly(rng));
  return p;
}

}  // namespace g2tok::testing

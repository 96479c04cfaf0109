#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "g2tok/rational.hpp"

namespace g2tok {

// Univariate polynomial in the deformation parameter t = q^{-1} with exact
// integer coefficients. This is the value ring of all pattern contributions.
//
// Canonical form: the highest stored coefficient is nonzero; the zero
// polynomial stores nothing.
class CoeffPoly {
 public:
  CoeffPoly() = default;
  explicit CoeffPoly(std::int64_t constant);
  // coeffs[i] is the coefficient of t^i.
  CoeffPoly(std::initializer_list<std::int64_t> coeffs);
  static CoeffPoly from_coeffs(std::vector<std::int64_t> coeffs);

  static const CoeffPoly& zero();
  static const CoeffPoly& one();
  static const CoeffPoly& t();

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int i) const;
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  friend CoeffPoly operator+(const CoeffPoly& a, const CoeffPoly& b);
  friend CoeffPoly operator-(const CoeffPoly& a, const CoeffPoly& b);
  friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
  CoeffPoly operator-() const;
  CoeffPoly& operator+=(const CoeffPoly& other);
  friend bool operator==(const CoeffPoly& a, const CoeffPoly& b) = default;

  // Exact quotient; throws NotDivisibleError when a nonzero remainder exists.
  static CoeffPoly exact_div(const CoeffPoly& numerator, const CoeffPoly& denominator);

  Rational evaluate(const Rational& t_value) const;

  std::string to_string() const;

 private:
  void trim();

  std::vector<std::int64_t> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CoeffPoly& p);

}  // namespace g2tok

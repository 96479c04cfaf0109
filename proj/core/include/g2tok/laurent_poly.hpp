#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <string>

#include "g2tok/coeff_poly.hpp"
#include "g2tok/rational.hpp"

namespace g2tok {

// Exponent of a monomial x^m y^n. Everything in this library lives in the
// codominant cone, so stored exponents are always nonnegative.
struct ExponentVector {
  int m = 0;
  int n = 0;

  int total_degree() const { return m + n; }
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
};

// Sparse polynomial in x, y with CoeffPoly coefficients: the ring where
// characters, denominators and all pattern sums live. Terms are kept in a
// map sorted by (m, n), which makes equality and serialization canonical.
// No zero coefficient is ever stored.
class LaurentPoly {
 public:
  using TermMap = std::map<ExponentVector, CoeffPoly>;

  LaurentPoly() = default;
  static LaurentPoly constant(CoeffPoly c);
  static const LaurentPoly& one();
  static LaurentPoly monomial(ExponentVector e, CoeffPoly c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  // Coefficient of x^e; zero polynomial if the term is absent.
  const CoeffPoly& coeff(ExponentVector e) const;

  void add_term(ExponentVector e, const CoeffPoly& c);

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly scaled(const CoeffPoly& c) const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  std::string to_string() const;

 private:
  TermMap terms_;
};

// Exact quotient with respect to long division in graded-lexicographic
// order. All divisions performed by this library are exact by theory, so a
// nonzero remainder signals a convention bug; it raises NotDivisibleError.
LaurentPoly exact_div(const LaurentPoly& numerator, const LaurentPoly& denominator);

// Keeps exactly the terms with m + n <= max_total_degree.
LaurentPoly truncate(const LaurentPoly& p, int max_total_degree);

// Evaluates every coefficient at t = t_value; terms that vanish are dropped.
std::map<ExponentVector, Rational> specialize(const LaurentPoly& p, const Rational& t_value);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace g2tok

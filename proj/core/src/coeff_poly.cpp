#include "g2tok/coeff_poly.hpp"

#include <ostream>
#include <sstream>

#include "g2tok/checked_int.hpp"
#include "g2tok/errors.hpp"

namespace g2tok {

CoeffPoly::CoeffPoly(std::int64_t constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

CoeffPoly::CoeffPoly(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) { trim(); }

CoeffPoly CoeffPoly::from_coeffs(std::vector<std::int64_t> coeffs) {
  CoeffPoly p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

const CoeffPoly& CoeffPoly::zero() {
  static const CoeffPoly z;
  return z;
}

const CoeffPoly& CoeffPoly::one() {
  static const CoeffPoly o(1);
  return o;
}

const CoeffPoly& CoeffPoly::t() {
  static const CoeffPoly p{0, 1};
  return p;
}

std::int64_t CoeffPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

void CoeffPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

CoeffPoly operator+(const CoeffPoly& a, const CoeffPoly& b) {
  CoeffPoly r = a;
  r += b;
  return r;
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
    coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
  trim();
  return *this;
}

CoeffPoly operator-(const CoeffPoly& a, const CoeffPoly& b) { return a + (-b); }

CoeffPoly CoeffPoly::operator-() const {
  CoeffPoly r = *this;
  for (auto& c : r.coeffs_) c = checked_neg(c);
  return r;
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
  if (a.is_zero() || b.is_zero()) return CoeffPoly();
  std::vector<std::int64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] = checked_add(out[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  }
  return CoeffPoly::from_coeffs(std::move(out));
}

CoeffPoly CoeffPoly::exact_div(const CoeffPoly& numerator, const CoeffPoly& denominator) {
  if (denominator.is_zero()) throw NotDivisibleError("division by the zero polynomial");
  if (numerator.is_zero()) return CoeffPoly();
  if (numerator.degree() < denominator.degree())
    throw NotDivisibleError("exact division with dividend of smaller degree");

  std::vector<std::int64_t> rem = numerator.coeffs_;
  const auto& div = denominator.coeffs_;
  const std::int64_t lead = div.back();
  std::vector<std::int64_t> quot(rem.size() - div.size() + 1, 0);
  for (std::size_t i = quot.size(); i-- > 0;) {
    std::int64_t top = rem[i + div.size() - 1];
    if (top % lead != 0) throw NotDivisibleError("coefficient not divisible in exact division");
    std::int64_t q = top / lead;
    quot[i] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < div.size(); ++j)
      rem[i + j] = checked_sub(rem[i + j], checked_mul(q, div[j]));
  }
  for (std::int64_t c : rem)
    if (c != 0) throw NotDivisibleError("nonzero remainder in exact division");
  return CoeffPoly::from_coeffs(std::move(quot));
}

Rational CoeffPoly::evaluate(const Rational& t_value) const {
  Rational acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t_value + Rational(coeffs_[i]);
  return acc;
}

std::string CoeffPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::int64_t abs = c < 0 ? -c : c;
    if (abs != 1 || i == 0) os << abs;
    if (i >= 1) {
      if (abs != 1) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CoeffPoly& p) { return os << p.to_string(); }

}  // namespace g2tok

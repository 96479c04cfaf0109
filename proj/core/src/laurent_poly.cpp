#include "g2tok/laurent_poly.hpp"

#include <cassert>
#include <ostream>
#include <sstream>

#include "g2tok/errors.hpp"

namespace g2tok {

namespace {

// Graded-lexicographic order: by total degree, then by (m, n).
bool grlex_less(ExponentVector a, ExponentVector b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  return a < b;
}

LaurentPoly::TermMap::const_iterator grlex_leading(const LaurentPoly& p) {
  const auto& terms = p.terms();
  auto best = terms.begin();
  for (auto it = terms.begin(); it != terms.end(); ++it)
    if (grlex_less(best->first, it->first)) best = it;
  return best;
}

}  // namespace

LaurentPoly LaurentPoly::constant(CoeffPoly c) {
  LaurentPoly p;
  p.add_term(ExponentVector{0, 0}, c);
  return p;
}

const LaurentPoly& LaurentPoly::one() {
  static const LaurentPoly o = constant(CoeffPoly::one());
  return o;
}

LaurentPoly LaurentPoly::monomial(ExponentVector e, CoeffPoly c) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

const CoeffPoly& LaurentPoly::coeff(ExponentVector e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? CoeffPoly::zero() : it->second;
}

void LaurentPoly::add_term(ExponentVector e, const CoeffPoly& c) {
  assert(e.m >= 0 && e.n >= 0);  // codominant cone support
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  r += b;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term(ExponentVector{ea.m + eb.m, ea.n + eb.n}, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::scaled(const CoeffPoly& c) const {
  LaurentPoly r;
  for (const auto& [e, coeff] : terms_) r.add_term(e, coeff * c);
  return r;
}

LaurentPoly exact_div(const LaurentPoly& numerator, const LaurentPoly& denominator) {
  if (denominator.is_zero()) throw NotDivisibleError("division by the zero polynomial");
  LaurentPoly rem = numerator;
  LaurentPoly quot;
  const auto lead_div = grlex_leading(denominator);
  while (!rem.is_zero()) {
    const auto lead_rem = grlex_leading(rem);
    ExponentVector shift{lead_rem->first.m - lead_div->first.m,
                         lead_rem->first.n - lead_div->first.n};
    if (shift.m < 0 || shift.n < 0)
      throw NotDivisibleError("leading monomial not divisible in exact division");
    CoeffPoly q = CoeffPoly::exact_div(lead_rem->second, lead_div->second);
    quot.add_term(shift, q);
    rem = rem - LaurentPoly::monomial(shift, q) * denominator;
  }
  return quot;
}

LaurentPoly truncate(const LaurentPoly& p, int max_total_degree) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms())
    if (e.total_degree() <= max_total_degree) r.add_term(e, c);
  return r;
}

std::map<ExponentVector, Rational> specialize(const LaurentPoly& p, const Rational& t_value) {
  std::map<ExponentVector, Rational> out;
  for (const auto& [e, c] : p.terms()) {
    Rational v = c.evaluate(t_value);
    if (!v.is_zero()) out.emplace(e, v);
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (e.m > 0) os << "*x" << (e.m > 1 ? "^" + std::to_string(e.m) : "");
    if (e.n > 0) os << "*y" << (e.n > 1 ? "^" + std::to_string(e.n) : "");
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace g2tok

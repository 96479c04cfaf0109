#include "g2tok/report.hpp"

namespace g2tok {

std::vector<CoeffMismatch> diff_terms(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  std::vector<CoeffMismatch> out;
  auto l = lhs.terms().begin();
  auto r = rhs.terms().begin();
  while (l != lhs.terms().end() || r != rhs.terms().end()) {
    if (r == rhs.terms().end() || (l != lhs.terms().end() && l->first < r->first)) {
      out.push_back({l->first, l->second, CoeffPoly::zero()});
      ++l;
    } else if (l == lhs.terms().end() || r->first < l->first) {
      out.push_back({r->first, CoeffPoly::zero(), r->second});
      ++r;
    } else {
      if (l->second != r->second) out.push_back({l->first, l->second, r->second});
      ++l;
      ++r;
    }
  }
  return out;
}

}  // namespace g2tok

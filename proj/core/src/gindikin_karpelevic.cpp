#include "g2tok/gindikin_karpelevic.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>

#include "g2tok/checked_int.hpp"
#include "g2tok/errors.hpp"

namespace g2tok {

const std::array<RootVector, kG2RootCount> kG2PositiveRoots{
    RootVector{0, 1},  // alpha1, long simple
    RootVector{1, 0},  // alpha2, short simple
    RootVector{1, 1},  // alpha3
    RootVector{2, 1},  // alpha4
    RootVector{3, 1},  // alpha3'
    RootVector{3, 2},  // alpha5
};

int VectorPartition::index() const {
  int count = 0;
  for (std::int64_t m : mult) count += m != 0;
  return count;
}

ExponentVector VectorPartition::monomial() const {
  std::int64_t m = 0, n = 0;
  for (int i = 0; i < kG2RootCount; ++i) {
    m += mult[i] * kG2PositiveRoots[i].u;
    n += mult[i] * kG2PositiveRoots[i].v;
  }
  return ExponentVector{static_cast<int>(m), static_cast<int>(n)};
}

std::ostream& operator<<(std::ostream& os, const VectorPartition& xi) {
  static const char* names[] = {"a1", "a2", "a3", "a4", "a3'", "a5"};
  bool first = true;
  for (int i = 0; i < kG2RootCount; ++i) {
    if (xi.mult[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << xi.mult[i] << "*" << names[i];
  }
  if (first) os << "0";
  return os;
}

const ConeGenerators& cone_generators() {
  static const ConeGenerators g{
      {0, 0, 0, 0, 0, 1},  // v1
      {1, 0, 0, 0, 0, 0},  // v2
      {1, 1, 0, 0, 0, 0},  // v3
      {1, 1, 2, 0, 0, 0},  // v3'
      {1, 1, 1, 0, 0, 0},  // v4
      {1, 1, 2, 1, 0, 0},  // v5
      {1, 1, 2, 1, 1, 0},  // v6
  };
  return g;
}

std::int64_t det6(const std::array<std::array<std::int64_t, 6>, 6>& m) {
  // Bareiss fraction-free elimination; exact over the integers.
  std::array<std::array<std::int64_t, 6>, 6> a = m;
  std::int64_t prev = 1;
  int sign = 1;
  for (int k = 0; k < 5; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < 6; ++i)
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < 6; ++i)
      for (int j = k + 1; j < 6; ++j) {
        std::int64_t num =
            checked_sub(checked_mul(a[i][j], a[k][k]), checked_mul(a[i][k], a[k][j]));
        assert(num % prev == 0);
        a[i][j] = num / prev;
      }
    prev = a[k][k];
  }
  return sign * a[5][5];
}

VectorPartition pattern_to_partition(const G2Pattern& pi) {
  if (!satisfies_circling(pi)) {
    std::ostringstream os;
    os << "pattern " << pi << " violates the circling inequalities";
    throw CirclingViolationError(os.str());
  }
  // Coefficients in the unimodular basis of the cone containing pi. Those of
  // v1, v2, v5, v6 are shared by both cones; v6 contributes to alpha3 and
  // alpha3' simultaneously.
  const std::int64_t a1 = pi.f, a2 = pi.a - pi.b, a5 = pi.d - pi.e, a6 = pi.e;
  VectorPartition xi;
  xi.mult[kAlpha1] = a1;
  xi.mult[kAlpha2] = a2;
  xi.mult[kAlpha5] = a5;
  if (pi.c <= pi.b + pi.d) {  // C1 (both branches agree on the overlap)
    xi.mult[kAlpha4] = pi.c - 2 * pi.d;
    xi.mult[kAlpha3] = (pi.b + pi.d - pi.c) + a6;
    xi.mult[kAlpha3Prime] = a6;
  } else {  // C2
    xi.mult[kAlpha4] = 2 * pi.b - pi.c;
    xi.mult[kAlpha3] = a6;
    xi.mult[kAlpha3Prime] = (pi.c - pi.b - pi.d) + a6;
  }
  return xi;
}

G2Pattern partition_to_pattern(const VectorPartition& xi) {
  const std::int64_t a1 = xi.mult[kAlpha1], a2 = xi.mult[kAlpha2], a4 = xi.mult[kAlpha4],
                     a5 = xi.mult[kAlpha5];
  const std::int64_t shared = std::min(xi.mult[kAlpha3], xi.mult[kAlpha3Prime]);
  const std::int64_t a3 = xi.mult[kAlpha3] - shared;    // v3 coefficient (C1 side)
  const std::int64_t a3p = xi.mult[kAlpha3Prime] - shared;  // v3' coefficient (C2 side)
  const std::int64_t a6 = shared;
  G2Pattern pi;
  pi.a = static_cast<int>(a2 + a3 + a3p + a4 + a5 + a6);
  pi.b = static_cast<int>(a3 + a3p + a4 + a5 + a6);
  pi.c = static_cast<int>(2 * a3p + a4 + 2 * a5 + 2 * a6);
  pi.d = static_cast<int>(a5 + a6);
  pi.e = static_cast<int>(a6);
  pi.f = static_cast<int>(a1);
  assert(satisfies_circling(pi));
  return pi;
}

std::vector<G2Pattern> enumerate_circling_patterns(int max_degree) {
  std::vector<G2Pattern> out;
  const int N = max_degree;
  // The degree of a pattern is the sum of all six entries; each loop bound
  // keeps the minimal completion of the current prefix within N.
  for (int e = 0; 6 * e <= N; ++e)
    for (int d = e; e + 5 * d <= N; ++d)
      for (int c = 2 * d; e + d + c + 2 * ((c + 1) / 2) <= N; ++c)
        for (int b = (c + 1) / 2; e + d + c + 2 * b <= N; ++b)
          for (int a = b; e + d + c + b + a <= N; ++a)
            for (int f = 0; e + d + c + b + a + f <= N; ++f)
              out.push_back(G2Pattern{a, b, c, d, e, f});
  return out;
}

LaurentPoly gk_lhs_series(int max_degree) {
  LaurentPoly prod = LaurentPoly::one();
  for (const RootVector& alpha : kG2PositiveRoots) {
    const ExponentVector step = monomial_of(alpha);
    LaurentPoly factor;
    // (1 - t x^alpha) * (1 + x^alpha + x^{2 alpha} + ...) truncated.
    for (int k = 0; k * step.total_degree() <= max_degree; ++k) {
      ExponentVector ev{k * step.m, k * step.n};
      factor.add_term(ev, CoeffPoly::one());
      if ((k + 1) * step.total_degree() <= max_degree)
        factor.add_term(ExponentVector{ev.m + step.m, ev.n + step.n}, -CoeffPoly::t());
    }
    prod = truncate(prod * factor, max_degree);
  }
  return prod;
}

LaurentPoly partition_sum_series(int max_degree) {
  std::array<CoeffPoly, kG2RootCount + 1> index_value;
  index_value[0] = CoeffPoly::one();
  for (int i = 1; i <= kG2RootCount; ++i) index_value[i] = index_value[i - 1] * CoeffPoly{1, -1};

  LaurentPoly sum;
  const std::array<int, kG2RootCount> deg{1, 1, 2, 3, 4, 5};
  VectorPartition xi;
  // Nested loops over multiplicities bounded by the remaining degree.
  for (int k0 = 0; k0 * deg[0] <= max_degree; ++k0)
    for (int k1 = 0; k0 * deg[0] + k1 * deg[1] <= max_degree; ++k1)
      for (int k2 = 0; k0 + k1 + k2 * deg[2] <= max_degree; ++k2)
        for (int k3 = 0; k0 + k1 + 2 * k2 + k3 * deg[3] <= max_degree; ++k3)
          for (int k4 = 0; k0 + k1 + 2 * k2 + 3 * k3 + k4 * deg[4] <= max_degree; ++k4)
            for (int k5 = 0; k0 + k1 + 2 * k2 + 3 * k3 + 4 * k4 + k5 * deg[5] <= max_degree; ++k5) {
              xi.mult = {k0, k1, k2, k3, k4, k5};
              sum.add_term(xi.monomial(), index_value[static_cast<std::size_t>(xi.index())]);
            }
  return sum;
}

LaurentPoly gk_pattern_series(int max_degree) {
  LaurentPoly sum;
  for (const G2Pattern& pi : enumerate_circling_patterns(max_degree))
    sum.add_term(pattern_monomial(pi), hat_contribution(pi, decorate_infinity(pi)));
  return sum;
}

SubconeLabel subcone_classify(const G2Pattern& pi) {
  SubconeLabel label;
  label.inside = pi.c == pi.b + pi.d;
  if (!label.inside) return label;
  // Basis coefficients along v1, v2, v4, v5, v6 inside C'.
  const std::array<int, 5> coeffs{pi.f, pi.a - pi.b, pi.c - 2 * pi.d, pi.d - pi.e, pi.e};
  for (int i = 0; i < 5; ++i)
    if (coeffs[i] > 0) label.mask |= 1u << i;
  return label;
}

std::string subcone_name(unsigned mask) {
  static const char* digits[] = {"1", "2", "4", "5", "6"};
  std::string name;
  for (int i = 0; i < 5; ++i)
    if (mask & (1u << i)) name += digits[i];
  return name;
}

AuditTable audit_subcones(int max_degree) {
  AuditTable table;
  table.max_degree = max_degree;
  std::array<CoeffPoly, kG2RootCount + 1> index_value;
  index_value[0] = CoeffPoly::one();
  for (int i = 1; i <= kG2RootCount; ++i) index_value[i] = index_value[i - 1] * CoeffPoly{1, -1};

  for (const G2Pattern& pi : enumerate_circling_patterns(max_degree)) {
    const SubconeLabel label = subcone_classify(pi);
    if (!label.inside) continue;
    AuditCell& cell = table.cells[label.mask & ~1u];  // project out the v1 direction
    ++cell.patterns;
    const Decoration dec = decorate_infinity(pi);
    const CoeffPoly standard = standard_contribution(pi, dec);
    const CoeffPoly hat = hat_contribution(pi, dec);
    const VectorPartition xi = pattern_to_partition(pi);
    if (standard != index_value[static_cast<std::size_t>(xi.index())]) {
      cell.vp = true;
      ++cell.vp_witnesses;
    }
    if (hat != standard) {
      cell.corr = true;
      ++cell.corr_witnesses;
    }
  }
  return table;
}

std::vector<unsigned> expected_vp_masks() {
  std::vector<unsigned> out;
  for (unsigned mask = 0; mask < 32; ++mask) {
    if (mask & 1u) continue;  // labels are reported with v1 projected out
    const bool has4 = mask & (1u << 2), has6 = mask & (1u << 4);
    if (has4 != has6) out.push_back(mask);
  }
  return out;
}

std::vector<unsigned> expected_corr_masks() {
  std::vector<unsigned> out;
  for (unsigned mask = 0; mask < 32; ++mask) {
    if (mask & 1u) continue;
    if (mask & (1u << 2)) out.push_back(mask);
  }
  return out;
}

}  // namespace g2tok

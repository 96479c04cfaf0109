#include "g2tok/root_datum.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "g2tok/checked_int.hpp"
#include "g2tok/errors.hpp"

namespace g2tok {

Mat2 mat2_identity() { return Mat2{{{1, 0}, {0, 1}}}; }

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  Mat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r[i][j] = checked_add(checked_mul(a[i][0], b[0][j]), checked_mul(a[i][1], b[1][j]));
  return r;
}

std::array<std::int64_t, 2> mat2_apply(const Mat2& m, std::array<std::int64_t, 2> v) {
  return {checked_add(checked_mul(m[0][0], v[0]), checked_mul(m[0][1], v[1])),
          checked_add(checked_mul(m[1][0], v[0]), checked_mul(m[1][1], v[1]))};
}

namespace {

// Simple reflection s_i on root coordinates: alpha_j -> alpha_j - cartan[i][j] alpha_i.
Mat2 simple_reflection_root(const std::array<std::array<int, 2>, 2>& cartan, int i) {
  Mat2 m = mat2_identity();
  for (int j = 0; j < 2; ++j) m[i][j] -= cartan[i][j];
  return m;
}

// The same reflection on fundamental-weight coordinates: mu -> mu - m_i alpha_i,
// where alpha_i has weight coordinates cartan[.][i].
Mat2 simple_reflection_weight(const std::array<std::array<int, 2>, 2>& cartan, int i) {
  Mat2 m = mat2_identity();
  for (int k = 0; k < 2; ++k) m[k][i] -= cartan[k][i];
  return m;
}

std::vector<RootVector> generate_positive_roots(const std::array<std::array<int, 2>, 2>& cartan) {
  const Mat2 s0 = simple_reflection_root(cartan, 0);
  const Mat2 s1 = simple_reflection_root(cartan, 1);
  std::set<RootVector> roots{RootVector{1, 0}, RootVector{0, 1}};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const RootVector& r : std::vector<RootVector>(roots.begin(), roots.end())) {
      for (const Mat2& s : {s0, s1}) {
        auto img = mat2_apply(s, {r.u, r.v});
        RootVector pos{static_cast<int>(img[0] < 0 ? -img[0] : img[0]),
                       static_cast<int>(img[1] < 0 ? -img[1] : img[1])};
        // Rank-2 roots have both coordinates of the same sign, so the
        // positive representative is the componentwise absolute value.
        assert((img[0] >= 0 && img[1] >= 0) || (img[0] <= 0 && img[1] <= 0));
        grew |= roots.insert(pos).second;
      }
    }
  }
  std::vector<RootVector> out(roots.begin(), roots.end());
  std::sort(out.begin(), out.end(), [](RootVector a, RootVector b) {
    if (a.u + a.v != b.u + b.v) return a.u + a.v < b.u + b.v;
    return a < b;
  });
  return out;
}

RootDatum make_datum(RootSystemType type, std::array<std::array<int, 2>, 2> cartan,
                     std::array<std::array<int, 2>, 2> gram) {
  RootDatum d;
  d.type = type;
  d.cartan = cartan;
  d.gram = gram;
  d.simple_roots = {RootVector{1, 0}, RootVector{0, 1}};
  d.positive_roots = generate_positive_roots(cartan);
  int su = 0, sv = 0;
  for (const RootVector& r : d.positive_roots) {
    su += r.u;
    sv += r.v;
  }
  assert(su % 2 == 0 && sv % 2 == 0);
  d.rho = RootVector{su / 2, sv / 2};
  d.weight_index = cartan[0][0] * cartan[1][1] - cartan[0][1] * cartan[1][0];
  // index * w_i in root coordinates: columns of the adjugate of the Cartan
  // matrix (w_i pairs to delta_{ij} against the coroots).
  d.fw_times_index = {{{cartan[1][1], -cartan[0][1]}, {-cartan[1][0], cartan[0][0]}}};
  return d;
}

}  // namespace

const RootDatum& build_g2_datum() {
  // Index 0 is the short simple root (variable x), index 1 the long one (y).
  static const RootDatum d =
      make_datum(RootSystemType::G2, {{{2, -3}, {-1, 2}}}, {{{2, -3}, {-3, 6}}});
  return d;
}

const RootDatum& build_a2_datum() {
  static const RootDatum d =
      make_datum(RootSystemType::A2, {{{2, -1}, {-1, 2}}}, {{{2, -1}, {-1, 2}}});
  return d;
}

RootVector weight_to_root(const RootDatum& datum, std::array<std::int64_t, 2> m) {
  // Root coordinates = adj(cartan) * m / det(cartan).
  std::int64_t u = checked_add(checked_mul(datum.fw_times_index[0][0], m[0]),
                               checked_mul(datum.fw_times_index[0][1], m[1]));
  std::int64_t v = checked_add(checked_mul(datum.fw_times_index[1][0], m[0]),
                               checked_mul(datum.fw_times_index[1][1], m[1]));
  if (u % datum.weight_index != 0 || v % datum.weight_index != 0)
    throw ArithmeticError("weight does not lie in the root lattice");
  return RootVector{static_cast<int>(u / datum.weight_index),
                    static_cast<int>(v / datum.weight_index)};
}

std::vector<WeylElement> weyl_group_elements(const RootDatum& datum) {
  const std::array<Mat2, 2> root_gens{simple_reflection_root(datum.cartan, 0),
                                      simple_reflection_root(datum.cartan, 1)};
  const std::array<Mat2, 2> weight_gens{simple_reflection_weight(datum.cartan, 0),
                                        simple_reflection_weight(datum.cartan, 1)};

  std::vector<WeylElement> group{{mat2_identity(), mat2_identity(), 1, 0}};
  std::set<Mat2> seen{mat2_identity()};
  // Breadth-first closure; the generation depth is the Coxeter length.
  for (std::size_t head = 0; head < group.size(); ++head) {
    WeylElement w = group[head];
    for (int i = 0; i < 2; ++i) {
      Mat2 root = mat2_mul(root_gens[i], w.root_action);
      if (!seen.insert(root).second) continue;
      group.push_back(WeylElement{root, mat2_mul(weight_gens[i], w.weight_action), -w.sign,
                                  w.length + 1});
    }
  }
  std::sort(group.begin(), group.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.root_action < b.root_action;
  });
  return group;
}

const WeylElement& longest_element(const std::vector<WeylElement>& group) {
  const WeylElement* best = &group.front();
  for (const WeylElement& w : group)
    if (w.length > best->length) best = &w;
  return *best;
}

std::int64_t coroot_pairing(const RootDatum& datum, std::array<std::int64_t, 2> mu,
                            RootVector alpha) {
  // alpha^vee = sum_i k_i alpha_i^vee with k_i = c_i (alpha_i, alpha_i) / (alpha, alpha).
  std::int64_t norm = 0;
  const std::array<std::int64_t, 2> c{alpha.u, alpha.v};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) norm += datum.gram[i][j] * c[i] * c[j];
  std::int64_t acc = 0;
  for (int i = 0; i < 2; ++i) {
    std::int64_t num = c[i] * datum.gram[i][i];
    assert(num % norm == 0);
    acc = checked_add(acc, checked_mul(num / norm, mu[i]));
  }
  return acc;
}

std::int64_t weyl_dimension(const RootDatum& datum, Weight lambda) {
  if (!lambda.is_dominant()) throw Error("weyl_dimension requires a dominant weight");
  std::int64_t num = 1, den = 1;
  for (const RootVector& alpha : datum.positive_roots) {
    num = checked_mul(num, coroot_pairing(datum, {lambda.l1 + 1, lambda.l2 + 1}, alpha));
    den = checked_mul(den, coroot_pairing(datum, {1, 1}, alpha));
  }
  assert(num % den == 0);
  return num / den;
}

}  // namespace g2tok

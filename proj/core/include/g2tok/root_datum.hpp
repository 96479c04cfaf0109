#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "g2tok/laurent_poly.hpp"

namespace g2tok {

// A vector in root coordinates: u counts the x-simple root, v the y-simple
// root. For G2 the variable x corresponds to the short simple root and y to
// the long one.
struct RootVector {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const RootVector&, const RootVector&) = default;
};

inline ExponentVector monomial_of(RootVector r) { return ExponentVector{r.u, r.v}; }

// Dominant weight l1*w1 + l2*w2 in fundamental-weight coordinates.
struct Weight {
  int l1 = 0;
  int l2 = 0;

  bool is_dominant() const { return l1 >= 0 && l2 >= 0; }
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

using Mat2 = std::array<std::array<std::int64_t, 2>, 2>;

Mat2 mat2_identity();
Mat2 mat2_mul(const Mat2& a, const Mat2& b);
std::array<std::int64_t, 2> mat2_apply(const Mat2& m, std::array<std::int64_t, 2> v);

// One Weyl group element: its action on root coordinates, the induced action
// on fundamental-weight coordinates, sign = (-1)^length.
struct WeylElement {
  Mat2 root_action;
  Mat2 weight_action;
  int sign = 1;
  int length = 0;
};

enum class RootSystemType { A2, G2 };

// Rank-2 root system data. cartan[i][j] = <alpha_j, alpha_i^vee> with index
// 0 the x-simple root and 1 the y-simple root; gram is the symmetric bilinear
// form on root coordinates normalized so short roots have squared length 2.
struct RootDatum {
  RootSystemType type;
  std::array<std::array<int, 2>, 2> cartan;
  std::array<RootVector, 2> simple_roots;
  std::vector<RootVector> positive_roots;
  RootVector rho;  // half the sum of the positive roots, in root coordinates
  std::array<std::array<int, 2>, 2> gram;
  // Index of the root lattice in the weight lattice (= det cartan): 1 for G2,
  // 3 for A2. Fundamental weights have root coordinates fw_times_index/index.
  int weight_index;
  std::array<std::array<int, 2>, 2> fw_times_index;  // column i = index * w_{i+1}
};

// G2: positive roots {(1,0),(0,1),(1,1),(2,1),(3,1),(3,2)}, rho = (5,3),
// fundamental weights w1 = (2,1) and w2 = (3,2) in root coordinates.
const RootDatum& build_g2_datum();

// A2: positive roots {(1,0),(0,1),(1,1)}, rho = (1,1).
const RootDatum& build_a2_datum();

// Converts a weight-lattice vector (m1, m2) in fundamental-weight coordinates
// to root coordinates. Throws ArithmeticError if the vector does not lie in
// the root lattice (only possible for A2).
RootVector weight_to_root(const RootDatum& datum, std::array<std::int64_t, 2> m);

// The full Weyl group generated from the simple reflections by closure,
// ordered by (length, root matrix entries) so the result is deterministic.
std::vector<WeylElement> weyl_group_elements(const RootDatum& datum);

// The longest element (maximal length; unique).
const WeylElement& longest_element(const std::vector<WeylElement>& group);

// Exact Weyl dimension formula for the irreducible with highest weight
// lambda: prod_{alpha>0} <lambda+rho, alpha^vee> / <rho, alpha^vee>.
std::int64_t weyl_dimension(const RootDatum& datum, Weight lambda);

// Pairing <mu, alpha^vee> for mu in fundamental-weight coordinates.
std::int64_t coroot_pairing(const RootDatum& datum, std::array<std::int64_t, 2> mu, RootVector alpha);

}  // namespace g2tok

#include "freudenthal_oracle.hpp"

#include <array>
#include <cassert>
#include <cstdint>
#include <vector>

#include "g2tok/checked_int.hpp"

namespace g2tok::testing {

namespace {

using Vec2 = std::array<std::int64_t, 2>;

// Inner product on weight coordinates scaled by det(cartan)^2 so that it
// stays integral for A2: S = adj(C)^T * gram * adj(C).
std::array<std::array<std::int64_t, 2>, 2> scaled_weight_gram(const RootDatum& d) {
  const std::array<std::array<std::int64_t, 2>, 2> adj{
      {{d.cartan[1][1], -d.cartan[0][1]}, {-d.cartan[1][0], d.cartan[0][0]}}};
  std::array<std::array<std::int64_t, 2>, 2> s{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) s[i][j] += adj[k][i] * d.gram[k][l] * adj[l][j];
  return s;
}

std::int64_t pairing(const std::array<std::array<std::int64_t, 2>, 2>& s, Vec2 a, Vec2 b) {
  std::int64_t acc = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      acc = checked_add(acc, checked_mul(s[i][j], checked_mul(a[i], b[j])));
  return acc;
}

Vec2 dominant_representative(const RootDatum& d, Vec2 mu) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < 2; ++i) {
      if (mu[i] < 0) {
        // s_i(mu) = mu - mu_i * alpha_i, alpha_i = column i of the Cartan matrix.
        const std::int64_t mi = mu[i];
        for (int k = 0; k < 2; ++k) mu[k] -= mi * d.cartan[k][i];
        moved = true;
      }
    }
  }
  return mu;
}

}  // namespace

LaurentPoly freudenthal_shifted_character(const RootDatum& datum, Weight theta) {
  const auto group = weyl_group_elements(datum);
  const WeylElement& w0 = longest_element(group);
  const auto s = scaled_weight_gram(datum);

  // Highest weight of the representation with lowest weight -theta.
  auto lam_img = mat2_apply(w0.weight_action, {theta.l1, theta.l2});
  const Vec2 lambda{-lam_img[0], -lam_img[1]};
  const Vec2 theta_w{theta.l1, theta.l2};

  // All weights lie in the box lambda - k1*alpha_1 - k2*alpha_2 with
  // 0 <= k <= root coordinates of lambda + theta.
  const RootVector depth =
      weight_to_root(datum, {lambda[0] + theta_w[0], lambda[1] + theta_w[1]});
  const int K1 = depth.u, K2 = depth.v;

  auto weight_at = [&](int k1, int k2) {
    Vec2 mu = lambda;
    for (int k = 0; k < 2; ++k)
      mu[k] -= k1 * datum.cartan[k][0] + k2 * datum.cartan[k][1];
    return mu;
  };

  auto is_weight = [&](Vec2 mu) {
    const Vec2 dom = dominant_representative(datum, mu);
    const RootVector gap = weight_to_root(datum, {lambda[0] - dom[0], lambda[1] - dom[1]});
    return gap.u >= 0 && gap.v >= 0;
  };

  std::vector<std::int64_t> mult(static_cast<std::size_t>((K1 + 1) * (K2 + 1)), 0);
  auto at = [&](int k1, int k2) -> std::int64_t& {
    return mult[static_cast<std::size_t>(k1 * (K2 + 1) + k2)];
  };
  const Vec2 lam_rho{lambda[0] + 1, lambda[1] + 1};
  const std::int64_t top_norm = pairing(s, lam_rho, lam_rho);

  for (int level = 0; level <= K1 + K2; ++level) {
    for (int k1 = 0; k1 <= K1; ++k1) {
      const int k2 = level - k1;
      if (k2 < 0 || k2 > K2) continue;
      if (level == 0) {
        at(k1, k2) = 1;
        continue;
      }
      const Vec2 mu = weight_at(k1, k2);
      if (!is_weight(mu)) continue;
      std::int64_t rhs = 0;
      for (const RootVector& alpha : datum.positive_roots) {
        Vec2 alpha_w{};
        for (int k = 0; k < 2; ++k) alpha_w[k] = alpha.u * datum.cartan[k][0] + alpha.v * datum.cartan[k][1];
        for (int k = 1; k1 - k * alpha.u >= 0 && k2 - k * alpha.v >= 0; ++k) {
          const std::int64_t m = at(k1 - k * alpha.u, k2 - k * alpha.v);
          if (m == 0) continue;
          const Vec2 shifted{mu[0] + k * alpha_w[0], mu[1] + k * alpha_w[1]};
          rhs = checked_add(rhs, checked_mul(m, pairing(s, shifted, alpha_w)));
        }
      }
      const Vec2 mu_rho{mu[0] + 1, mu[1] + 1};
      const std::int64_t denom = top_norm - pairing(s, mu_rho, mu_rho);
      assert(denom > 0);
      assert((2 * rhs) % denom == 0);
      at(k1, k2) = (2 * rhs) / denom;
    }
  }

  // Shift so the lowest weight -theta sits on x^0: exponent of mu is the
  // root-coordinate vector of mu + theta.
  LaurentPoly chi;
  for (int k1 = 0; k1 <= K1; ++k1)
    for (int k2 = 0; k2 <= K2; ++k2) {
      if (at(k1, k2) == 0) continue;
      chi.add_term(ExponentVector{K1 - k1, K2 - k2}, CoeffPoly(at(k1, k2)));
    }
  return chi;
}

}  // namespace g2tok::testing

#include "chase/absorbing.hpp"

#include <Eigen/Dense>
#include <stdexcept>

namespace chase {

double reach_probability_linear_solve(const RateProfile& profile, int k) {
  if (k < 1) throw std::invalid_argument("reach_probability_linear_solve requires k >= 1");
  const int cap = k + 1;
  // live (B, g): g = 1..cap; blocked (B, r): r = 0..cap
  const int per_b = cap + (cap + 1);
  const int n = k * per_b;
  auto live = [&](int b, int g) { return b * per_b + (g - 1); };
  auto blocked = [&](int b, int r) { return b * per_b + cap + r; };

  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  // h(state) - sum p(state -> s') h(s') = sum p(state -> success)
  auto to = [&](int row, int b, bool is_live, int x, double p) {
    if (p == 0.0) return;
    if (b >= k) {
      rhs(row) += p;
      return;
    }
    if (is_live && x == 0) return;  // blue took the last red
    a(row, is_live ? live(b, x) : blocked(b, x)) -= p;
  };

  for (int b = 0; b < k; ++b) {
    for (int g = 1; g <= cap; ++g) {
      const int row = live(b, g);
      const double lam = g < cap ? profile.rate(RateKind::Lambda, g) : 0.0;
      const double total = 1.0 + lam + profile.cumulative_death(g);
      to(row, b + 1, true, g - 1, 1.0 / total);
      to(row, b, true, g + 1, lam / total);
      for (int i = 1; i <= g; ++i) to(row, b, false, i - 1, profile.rate(RateKind::Rho, i) / total);
    }
    for (int r = 1; r <= cap; ++r) {
      const int row = blocked(b, r);
      const double total = 1.0 + profile.cumulative_death(r);
      to(row, b + 1, false, r - 1, 1.0 / total);
      for (int i = 1; i <= r; ++i) to(row, b, false, i - 1, profile.rate(RateKind::Rho, i) / total);
    }
    // blocked r = 0: blue is stuck, h = 0 (identity row, zero rhs)
  }
  const Eigen::VectorXd h = a.partialPivLu().solve(rhs);
  return h(live(0, 1));
}

}  // namespace chase

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chase/catalan.hpp"
#include "chase/random.hpp"
#include "chase/rates.hpp"

namespace chase {

// One step of the gap chain from gap j >= 1: red spreads (up), blue catches
// the nearest red (down), or one of the j red sites dies (kill).
template <class T = double>
struct StepDistribution {
  T up;
  T down;
  T kill;
};

template <class T = double>
StepDistribution<T> step_distribution(const RateProfile& profile, std::int64_t j) {
  if (j < 1) throw std::out_of_range("step_distribution requires gap j >= 1");
  const T lam = profile.rate<T>(RateKind::Lambda, j);
  const T death = profile.cumulative_death<T>(j);
  const T total = T(1) + lam + death;
  return {lam / total, T(1) / total, death / total};
}

/// Summary of one run of the gap chain on the half-line, started from blue at
/// 0 and red at 1 (gap 1).
struct JumpTrajectory {
  std::vector<std::int64_t> renewals;  // k >= 1 with blue at k, red at k+1, no deaths
  bool killed = false;                 // some red site died
  bool caught = false;                 // blue took the last red site
  bool reached_target = false;         // red frontier reached k_target
  bool exhausted = false;              // max_steps hit first
  std::int64_t steps = 0;
  std::int64_t frontier = 1;  // rightmost red position R
  std::int64_t blue = 0;      // rightmost blue position B
};

// Runs until absorption (kill or catch), until blue reaches k_target (later
// renewals lie past the target), or max_steps. k_target <= 0 disables the
// target stop. Identical inputs give identical trajectories.
JumpTrajectory simulate_jump_chain(const RateProfile& profile, std::uint64_t seed, std::int64_t max_steps,
                                   std::int64_t k_target);
JumpTrajectory simulate_jump_chain(const RateProfile& profile, Rng& rng, std::int64_t max_steps,
                                   std::int64_t k_target);

struct RenewalFrequencies {
  std::int64_t runs = 0;
  std::int64_t exhausted = 0;
  std::vector<std::int64_t> counts;  // counts[k] = runs with a renewal at k; counts[0] = runs

  double frequency(std::int64_t k) const;
  double standard_error(std::int64_t k) const;  // sqrt(p(1-p)/N) at the empirical p
  // (frequency - p) / sqrt(p(1-p)/N): deviation in standard errors under the hypothesis P = p.
  double z_score(std::int64_t k, double p) const;
};

inline constexpr std::int64_t kRenewalBatch = 4096;

// Independent runs in fixed batches of kRenewalBatch; batch b draws from
// Rng(derive_seed(master_seed, b)), so results do not depend on `threads`.
RenewalFrequencies estimate_renewal_frequencies(const RateProfile& profile, int k_max, std::int64_t runs,
                                                std::uint64_t master_seed, unsigned threads = 1,
                                                std::int64_t max_steps = 1'000'000);

// P(renewal at k) = C_k.
double renewal_probability_exact(const RateProfile& profile, int k);

// sigma(ell) = prod_{n=1}^{ell} 1/(1 + D_n): blue walks ell sites before any of them dies.
template <class T = double>
T sigma_of_ell(const RateProfile& profile, std::int64_t ell) {
  if (ell < 1) throw std::out_of_range("sigma_of_ell requires ell >= 1");
  T s(1);
  for (std::int64_t n = 1; n <= ell; ++n) s /= T(1) + profile.cumulative_death<T>(n);
  return s;
}

/// Reach probabilities P(Y >= k), Y the furthest site blue ever occupies,
/// decomposed by the gap ell at the moment red first arrives at k:
///   P(Y >= k) = sum_ell q[k][ell],  q[k][ell] = sigma(ell) * P(red first arrives at k with gap ell).
struct ReachTable {
  std::vector<double> p_reach;              // index 0..k_max, p_reach[0] = 1
  std::vector<std::vector<double>> q;       // q[k][ell], ell = 0..k
  std::vector<double> sigma;                // sigma[ell], sigma[0] = 1

  int k_max() const noexcept { return static_cast<int>(p_reach.size()) - 1; }
  // P(Y = k); requires k < k_max.
  double p_equal(int k) const;
};

ReachTable reach_table(const RateProfile& profile, int k_max);
double reach_probability_exact(const RateProfile& profile, int k);

/// Bookkeeping for the probability of one living gap-chain path: visits per
/// height (final position included), departures and up-steps per height.
struct PathWeightAccounting {
  std::map<std::int64_t, std::int64_t> height_profile;
  std::map<std::int64_t, std::int64_t> departures;
  std::map<std::int64_t, std::int64_t> rises;
  double p_of_path = 1.0;  // prod lambda_i^{rises_i} * prod (1 + lambda_j + D_j)^{-departures_j}
};

// Throws std::invalid_argument if the path leaves the living region (gap 0).
PathWeightAccounting account_path(const RateProfile& profile, const std::vector<Step>& steps,
                                  std::int64_t start_gap = 1);

struct ReachBoundRow {
  int k = 0;
  double p_reach = 0.0;   // P(Y >= k)
  double catalan = 0.0;   // C_k
  double ratio = 0.0;     // P(Y >= k) / (k^{1+m} C_k)
  bool upper_ok = true;   // ratio <= c0
  double lower_lhs = 0.0; // C_{k-1} / (1 + lambda_1 + rho_1)
  double p_equal = 0.0;   // P(Y = k)
  bool lower_ok = true;   // lower_lhs <= p_equal
  bool sandwich_ok = true;  // C_k <= P(Y >= k)
};

/// Numerical check of P(Y >= k) <= c0 k^{1+m} C_k for k = 2..k_max.
///
/// Two constants are reported. `c0_path` is the path-surgery constant
/// c (1+D_1+lambda_1)(1+D_2+lambda_2) / ((1+D_ell)(1+D_{ell-1})) at ell = 2, which
/// bounds q_ell <= c0_path ell^m q_2 (its exact value at each ell is in
/// `c0_path_by_ell`). Turning q_2 into C_k costs the completion factor
/// (1+lambda_1+D_1)(1+lambda_2+D_2)^2 sigma(2) / lambda_1 (blue, red, blue after a
/// Gamma_2 path), so the bound is checked against c0 = c0_path * completion.
struct ReachBoundReport {
  double c = 0.0;
  double m = 0.0;
  double c0_path = 0.0;
  std::vector<double> c0_path_by_ell;  // index ell = 2..k_max (0, 1 unused)
  double completion_factor = 0.0;
  double c0 = 0.0;
  bool hypotheses_consistent = true;
  bool upper_holds = true;
  bool upper_holds_with_path_constant = true;
  bool lower_holds = true;
  bool sandwich_holds = true;
  std::vector<ReachBoundRow> rows;
  std::string note;
};

ReachBoundReport reach_bound_check(const RateProfile& profile, int k_max, double c, double m,
                              bool hypotheses_consistent = true);

}  // namespace chase

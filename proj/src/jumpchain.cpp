#include "chase/jumpchain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "chase/parallel.hpp"

namespace chase {

namespace {

// Cumulative step thresholds per gap, filled on demand.
class GapSampler {
 public:
  explicit GapSampler(const RateProfile& profile) : profile_(profile) { thresholds_.push_back({0.0, 0.0}); }

  const std::pair<double, double>& at(std::int64_t gap) {
    while (static_cast<std::int64_t>(thresholds_.size()) <= gap) {
      const auto s = step_distribution(profile_, static_cast<std::int64_t>(thresholds_.size()));
      thresholds_.emplace_back(s.up, s.up + s.down);
    }
    return thresholds_[static_cast<std::size_t>(gap)];
  }

 private:
  const RateProfile& profile_;
  std::vector<std::pair<double, double>> thresholds_;
};

JumpTrajectory run_chain(GapSampler& sampler, Rng& rng, std::int64_t max_steps, std::int64_t k_target) {
  JumpTrajectory t;
  std::int64_t gap = 1;
  if (k_target > 0 && t.frontier >= k_target) t.reached_target = true;
  while (true) {
    if (k_target > 0 && t.blue >= k_target) return t;
    if (t.steps >= max_steps) {
      t.exhausted = true;
      return t;
    }
    const auto& [up, up_or_down] = sampler.at(gap);
    const double x = rng.uniform();
    ++t.steps;
    if (x < up) {
      ++t.frontier;
      ++gap;
      if (k_target > 0 && t.frontier >= k_target) t.reached_target = true;
    } else if (x < up_or_down) {
      ++t.blue;
      --gap;
      if (gap == 0) {
        t.caught = true;
        return t;
      }
      if (gap == 1) t.renewals.push_back(t.blue);
    } else {
      t.killed = true;
      return t;
    }
  }
}

}  // namespace

JumpTrajectory simulate_jump_chain(const RateProfile& profile, Rng& rng, std::int64_t max_steps,
                                   std::int64_t k_target) {
  if (max_steps < 1) throw std::invalid_argument("simulate_jump_chain requires max_steps >= 1");
  GapSampler sampler(profile);
  return run_chain(sampler, rng, max_steps, k_target);
}

JumpTrajectory simulate_jump_chain(const RateProfile& profile, std::uint64_t seed, std::int64_t max_steps,
                                   std::int64_t k_target) {
  Rng rng(seed);
  return simulate_jump_chain(profile, rng, max_steps, k_target);
}

double RenewalFrequencies::frequency(std::int64_t k) const {
  if (runs == 0) return 0.0;
  return static_cast<double>(counts.at(static_cast<std::size_t>(k))) / static_cast<double>(runs);
}

double RenewalFrequencies::standard_error(std::int64_t k) const {
  if (runs == 0) return 0.0;
  const double p = frequency(k);
  return std::sqrt(p * (1.0 - p) / static_cast<double>(runs));
}

RenewalFrequencies estimate_renewal_frequencies(const RateProfile& profile, int k_max, std::int64_t runs,
                                                std::uint64_t master_seed, unsigned threads,
                                                std::int64_t max_steps) {
  if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
  if (runs < 0) throw std::invalid_argument("runs must be >= 0");
  const auto batches = static_cast<std::size_t>((runs + kRenewalBatch - 1) / kRenewalBatch);
  auto partials = run_batches<RenewalFrequencies>(batches, threads, [&](std::size_t b) {
    RenewalFrequencies part;
    part.counts.assign(static_cast<std::size_t>(k_max) + 1, 0);
    const std::int64_t begin = static_cast<std::int64_t>(b) * kRenewalBatch;
    const std::int64_t n = std::min(kRenewalBatch, runs - begin);
    Rng rng(derive_seed(master_seed, b));
    GapSampler sampler(profile);
    for (std::int64_t i = 0; i < n; ++i) {
      const auto t = run_chain(sampler, rng, max_steps, k_max);
      ++part.runs;
      if (t.exhausted) ++part.exhausted;
      for (auto k : t.renewals) {
        if (k <= k_max) ++part.counts[static_cast<std::size_t>(k)];
      }
    }
    part.counts[0] = part.runs;
    return part;
  });

  RenewalFrequencies total;
  total.counts.assign(static_cast<std::size_t>(k_max) + 1, 0);
  for (const auto& p : partials) {
    total.runs += p.runs;
    total.exhausted += p.exhausted;
    for (std::size_t k = 0; k < p.counts.size(); ++k) total.counts[k] += p.counts[k];
  }
  return total;
}

double RenewalFrequencies::z_score(std::int64_t k, double p) const {
  const double diff = frequency(k) - p;
  const double se = runs > 0 ? std::sqrt(p * (1.0 - p) / static_cast<double>(runs)) : 0.0;
  if (se > 0) return diff / se;
  return diff == 0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
}

double renewal_probability_exact(const RateProfile& profile, int k) {
  if (k < 0) throw std::invalid_argument("renewal_probability_exact requires k >= 0");
  const auto table = weighted_catalan_table(StepWeights(profile), k, ArithmeticMode::LogDomain);
  return table.values.back();
}

double ReachTable::p_equal(int k) const {
  if (k < 0 || k >= k_max()) throw std::out_of_range("p_equal(k) requires 0 <= k < k_max");
  return p_reach[static_cast<std::size_t>(k)] - p_reach[static_cast<std::size_t>(k) + 1];
}

ReachTable reach_table(const RateProfile& profile, int k_max) {
  if (k_max < 0) throw std::invalid_argument("reach_table requires k_max >= 0");
  ReachTable t;
  const auto n = static_cast<std::size_t>(k_max) + 1;
  t.p_reach.assign(n, 0.0);
  t.q.assign(n, {});
  t.sigma.assign(n, 1.0);
  for (std::size_t ell = 1; ell < n; ++ell) {
    t.sigma[ell] = t.sigma[ell - 1] / (1.0 + profile.cumulative_death(static_cast<std::int64_t>(ell)));
  }
  t.p_reach[0] = 1.0;
  t.q[0] = {1.0};
  if (k_max == 0) return t;

  std::vector<double> up(n + 2, 0.0), down(n + 2, 0.0);
  for (std::size_t g = 1; g < n + 2; ++g) {
    const auto s = step_distribution(profile, static_cast<std::int64_t>(g));
    up[g] = s.up;
    down[g] = s.down;
  }

  // visit[g]: probability that the living chain is ever at (R = r, gap g).
  // R never decreases and, for fixed R, the gap only falls, so each state is
  // visited at most once and the arrival decomposition is exact.
  std::vector<double> visit(n + 2, 0.0), arrive(n + 2, 0.0);
  visit[1] = 1.0;
  t.q[1] = {0.0, t.sigma[1]};
  t.p_reach[1] = t.sigma[1];
  for (std::size_t r = 2; r < n; ++r) {
    std::fill(arrive.begin(), arrive.end(), 0.0);
    for (std::size_t g = 1; g < r; ++g) arrive[g + 1] = visit[g] * up[g];
    t.q[r].assign(r + 1, 0.0);
    double total = 0.0;
    for (std::size_t ell = 2; ell <= r; ++ell) {
      t.q[r][ell] = arrive[ell] * t.sigma[ell];
      total += t.q[r][ell];
    }
    t.p_reach[r] = total;
    std::fill(visit.begin(), visit.end(), 0.0);
    for (std::size_t g = r; g >= 1; --g) visit[g] = arrive[g] + visit[g + 1] * down[g + 1];
  }
  return t;
}

double reach_probability_exact(const RateProfile& profile, int k) {
  if (k < 1) throw std::invalid_argument("reach_probability_exact requires k >= 1");
  return reach_table(profile, k).p_reach.back();
}

PathWeightAccounting account_path(const RateProfile& profile, const std::vector<Step>& steps,
                                  std::int64_t start_gap) {
  if (start_gap < 1) throw std::invalid_argument("a living path starts at gap >= 1");
  PathWeightAccounting acc;
  std::int64_t g = start_gap;
  for (Step s : steps) {
    ++acc.height_profile[g];
    ++acc.departures[g];
    const double lam = profile.rate(RateKind::Lambda, g);
    acc.p_of_path /= 1.0 + lam + profile.cumulative_death(g);
    if (s == Step::Rise) {
      ++acc.rises[g];
      acc.p_of_path *= lam;
      ++g;
    } else {
      --g;
      if (g == 0) throw std::invalid_argument("path reaches gap 0 and is not living");
    }
  }
  ++acc.height_profile[g];
  return acc;
}

ReachBoundReport reach_bound_check(const RateProfile& profile, int k_max, double c, double m,
                              bool hypotheses_consistent) {
  if (k_max < 2) throw std::invalid_argument("reach_bound_check requires k_max >= 2");
  ReachBoundReport rep;
  rep.c = c;
  rep.m = m;
  rep.hypotheses_consistent = hypotheses_consistent;

  const auto reach = reach_table(profile, k_max + 1);
  const auto cat = weighted_catalan_table(StepWeights(profile), k_max, ArithmeticMode::LogDomain);
  const double lam1 = profile.rate(RateKind::Lambda, 1);
  const double lam2 = profile.rate(RateKind::Lambda, 2);
  const double d1 = profile.cumulative_death(1);
  const double d2 = profile.cumulative_death(2);
  const double rho1 = profile.rate(RateKind::Rho, 1);

  rep.c0_path_by_ell.assign(static_cast<std::size_t>(k_max) + 1, 0.0);
  for (int ell = 2; ell <= k_max; ++ell) {
    rep.c0_path_by_ell[static_cast<std::size_t>(ell)] =
        c * (1 + d1 + lam1) * (1 + d2 + lam2) /
        ((1 + profile.cumulative_death(ell)) * (1 + profile.cumulative_death(ell - 1)));
  }
  rep.c0_path = rep.c0_path_by_ell[2];
  rep.completion_factor = lam1 > 0 ? (1 + lam1 + d1) * (1 + lam2 + d2) * (1 + lam2 + d2) * reach.sigma[2] / lam1
                                   : std::numeric_limits<double>::infinity();
  rep.c0 = rep.c0_path * rep.completion_factor;

  constexpr double kSlack = 1.0 + 1e-12;
  for (int k = 1; k <= k_max; ++k) {
    ReachBoundRow row;
    row.k = k;
    row.p_reach = reach.p_reach[static_cast<std::size_t>(k)];
    row.catalan = cat.values[static_cast<std::size_t>(k)];
    const double scale = std::pow(static_cast<double>(k), 1.0 + m) * row.catalan;
    row.ratio = row.p_reach == 0.0 ? 0.0 : (scale > 0 ? row.p_reach / scale : std::numeric_limits<double>::infinity());
    if (k >= 2) {
      row.upper_ok = row.ratio <= rep.c0 * kSlack;
      rep.upper_holds = rep.upper_holds && row.upper_ok;
      rep.upper_holds_with_path_constant = rep.upper_holds_with_path_constant && row.ratio <= rep.c0_path * kSlack;
    }
    row.lower_lhs = cat.values[static_cast<std::size_t>(k - 1)] / (1 + lam1 + rho1);
    row.p_equal = reach.p_equal(k);
    row.lower_ok = row.lower_lhs <= row.p_equal * kSlack;
    row.sandwich_ok = row.catalan <= row.p_reach * kSlack;
    rep.lower_holds = rep.lower_holds && row.lower_ok;
    rep.sandwich_holds = rep.sandwich_holds && row.sandwich_ok;
    rep.rows.push_back(row);
  }

  if (!hypotheses_consistent) {
    rep.note = "rate hypotheses violated on the probed range; the polynomial bound is not expected to apply";
  } else if (!rep.upper_holds) {
    rep.note = "bound violated with the fitted (c, m)";
  } else {
    rep.note = "bound holds for k = 2.." + std::to_string(k_max);
  }
  return rep;
}

}  // namespace chase

#include "chase/contfrac.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace chase {

namespace {

constexpr double kWorpitzkyRadius = 0.25;
constexpr int kUpperRescale = 512;

// a_j values shared by the probes of one bisection.
class WeightCache {
 public:
  explicit WeightCache(const StepWeights& weights) : weights_(weights) {}

  double a(std::int64_t j) {
    while (static_cast<std::int64_t>(a_.size()) <= j) {
      a_.push_back(weights_.a(static_cast<std::int64_t>(a_.size())));
    }
    return a_[static_cast<std::size_t>(j)];
  }

  const StepWeights& weights() const noexcept { return weights_; }

 private:
  const StepWeights& weights_;
  std::vector<double> a_;
};

EvalResult evaluate_cached(WeightCache& cache, double z, double tol, std::int64_t n_max) {
  EvalResult res;
  res.tail = tail_index(cache.weights(), z);
  // n/2 must be past the tail index when the Cauchy test is applied
  std::int64_t next_check = std::max<std::int64_t>(16, res.tail ? 2 * *res.tail : 16);
  std::int64_t half_mark = next_check / 2;
  double half_value = std::numeric_limits<double>::quiet_NaN();

  ApproximantState state;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const double partial = cache.a(n - 1) * z;
    if (partial == 0.0) {
      res.status = EvalStatus::Converged;
      res.value = state.value();
      res.depth = state.depth;
      res.reason = "continued fraction terminates at depth " + std::to_string(n - 1);
      return res;
    }
    state.advance(partial);
    const double f = state.value();
    if (state.b_curr <= 0.0) {
      res.status = EvalStatus::Diverged;
      res.value = f;
      res.depth = n;
      res.reason = "approximant denominator B_" + std::to_string(n) + "(z) <= 0: pole in (0, z]";
      return res;
    }
    if (!(f <= kBlowUpThreshold)) {
      res.status = EvalStatus::Diverged;
      res.value = f;
      res.depth = n;
      res.reason = "approximant exceeds 1e12 at depth " + std::to_string(n);
      return res;
    }
    if (n == half_mark) half_value = f;
    if (n == next_check) {
      if (std::abs(f - half_value) <= tol * std::max(1.0, std::abs(f))) {
        res.status = EvalStatus::Converged;
        res.value = f;
        res.depth = n;
        res.reason = "Cauchy criterion met between depths " + std::to_string(n / 2) + " and " + std::to_string(n);
        return res;
      }
      half_value = f;
      next_check *= 2;
    }
  }
  res.status = EvalStatus::Inconclusive;
  res.value = state.value();
  res.depth = state.depth;
  res.reason = "depth limit " + std::to_string(n_max) + " reached without convergence or pole";
  return res;
}

}  // namespace

void ApproximantState::advance(double partial_numerator) {
  const double a_next = a_curr - partial_numerator * a_prev;
  const double b_next = b_curr - partial_numerator * b_prev;
  a_prev = a_curr;
  b_prev = b_curr;
  a_curr = a_next;
  b_curr = b_next;
  ++depth;

  const double peak = std::max({std::abs(a_prev), std::abs(a_curr), std::abs(b_prev), std::abs(b_curr)});
  if (peak == 0.0) return;
  int exponent = 0;
  std::frexp(peak, &exponent);
  if (exponent > kUpperRescale || exponent < -kUpperRescale) {
    a_prev = std::ldexp(a_prev, -exponent);
    a_curr = std::ldexp(a_curr, -exponent);
    b_prev = std::ldexp(b_prev, -exponent);
    b_curr = std::ldexp(b_curr, -exponent);
  }
}

std::optional<std::int64_t> tail_index(const StepWeights& weights, double z, std::int64_t horizon) {
  if (!(z > 0)) throw std::invalid_argument("tail_index requires z > 0");
  const std::int64_t head = weights.tail_start();
  std::int64_t last_bad = -1;
  for (std::int64_t j = 0; j < head; ++j) {
    if (weights.a(j) * z > kWorpitzkyRadius) last_bad = j;
  }
  const auto& profile = weights.profile();
  if (profile.lambda().tail() == 0) return last_bad + 1;
  if (profile.rho().tail() == 0) {
    if (weights.a(head) * z > kWorpitzkyRadius) return std::nullopt;
    return last_bad + 1;
  }
  // Past the head a_j strictly decreases to 0: exponential then binary search.
  std::int64_t first_good = head;
  if (weights.a(head) * z > kWorpitzkyRadius) {
    std::int64_t lo = head;  // bad
    std::int64_t step = 1;
    std::int64_t hi = head + step;
    while (weights.a(hi) * z > kWorpitzkyRadius) {
      lo = hi;
      step *= 2;
      hi = head + step;
      if (hi > horizon) return std::nullopt;
    }
    while (hi - lo > 1) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      (weights.a(mid) * z > kWorpitzkyRadius ? lo : hi) = mid;
    }
    first_good = hi;
  }
  return std::max(last_bad + 1, first_good);
}

std::string_view to_string(EvalStatus s) {
  switch (s) {
    case EvalStatus::Converged: return "converged";
    case EvalStatus::Diverged: return "diverged";
    case EvalStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

EvalResult evaluate_f(const StepWeights& weights, double z, double tol, std::int64_t n_max) {
  if (!(z > 0)) throw std::invalid_argument("evaluate_f requires z > 0");
  if (!(tol > 0)) throw std::invalid_argument("evaluate_f requires tol > 0");
  WeightCache cache(weights);
  return evaluate_cached(cache, z, tol, n_max);
}

double RadiusEstimate::point() const noexcept {
  if (infinite) return std::numeric_limits<double>::infinity();
  return 0.5 * (lo + hi);
}

RadiusEstimate estimate_M(const StepWeights& weights, double tol, const RadiusOptions& opts) {
  if (!(tol > 0)) throw std::invalid_argument("estimate_M requires tol > 0");
  RadiusEstimate est;
  WeightCache cache(weights);
  const double a0 = cache.a(0);
  if (a0 == 0.0) {
    // No rise out of height 0 has positive weight: g is identically 1.
    est.infinite = true;
    est.lo = est.hi = std::numeric_limits<double>::infinity();
    return est;
  }

  // C_k >= a_0^k (the path (UD)^k), hence M <= 1/a_0.
  est.lo = 0.0;
  est.hi = 1.0 / a0;
  auto probe = [&](double z) {
    const EvalResult r = evaluate_cached(cache, z, opts.eval_tol, opts.n_max);
    est.probes.push_back({z, r.status, r.depth});
    if (r.status == EvalStatus::Inconclusive) ++est.inconclusive_probes;
    return r.status;
  };
  probe(est.hi);
  while (est.hi - est.lo > tol) {
    const double mid = 0.5 * (est.lo + est.hi);
    if (mid <= est.lo || mid >= est.hi) break;
    (probe(mid) == EvalStatus::Diverged ? est.hi : est.lo) = mid;
  }

  if (opts.root_test_k_max >= opts.root_test_window && opts.root_test_window >= 2) {
    const auto table = weighted_catalan_table(weights, opts.root_test_k_max, ArithmeticMode::LogDomain);
    est.root_test = root_test_estimate(table, opts.root_test_window);
    const double p = est.point();
    est.root_test_agrees = std::abs(est.root_test->M - p) <= 0.05 * p;
  }
  return est;
}

std::string_view to_string(Phase p) {
  switch (p) {
    case Phase::ExpectedCoexistence: return "ExpectedCoexistence";
    case Phase::NoExpectedCoexistence: return "NoExpectedCoexistence";
    case Phase::BoundaryInconclusive: return "BoundaryInconclusive";
  }
  return "?";
}

PhaseVerdict classify_phase(const RateProfile& profile, int d, double tol, const RadiusOptions& opts) {
  if (d < 2) throw std::invalid_argument("phase classification requires d >= 2");
  if (!(tol > 0)) throw std::invalid_argument("classify_phase requires tol > 0");
  const StepWeights weights(profile);
  PhaseVerdict out;
  out.d = d;
  out.tol = tol;
  out.profile_fingerprint = profile.fingerprint();
  out.hypotheses = check_hypotheses(profile);
  if (!out.hypotheses.growth.consistent) out.warnings.push_back("product growth condition: " + out.hypotheses.growth.note);
  if (!out.hypotheses.decay.consistent) out.warnings.push_back("weight decay condition: " + out.hypotheses.decay.note);

  out.g_at_d = evaluate_f(weights, static_cast<double>(d), opts.eval_tol, opts.n_max);
  out.M = estimate_M(weights, tol, opts);
  if (out.M.root_test && !out.M.root_test_agrees) {
    out.warnings.push_back("root test estimate " + std::to_string(out.M.root_test->M) +
                           " differs from the continued-fraction bracket by more than 5%");
  }

  const double m = out.M.point();
  const double dd = static_cast<double>(d);
  if (out.g_at_d.status == EvalStatus::Diverged || m <= dd - tol) {
    out.verdict = Phase::ExpectedCoexistence;
  } else if (m >= dd + tol && out.g_at_d.status == EvalStatus::Converged) {
    out.verdict = Phase::NoExpectedCoexistence;
  } else {
    out.verdict = Phase::BoundaryInconclusive;
  }
  return out;
}

CriticalResult critical_lambda(const RateProfile& base, int d, double t_lo, double t_hi, double tol, int grid,
                               const RadiusOptions& opts) {
  if (d < 2) throw std::invalid_argument("critical_lambda requires d >= 2");
  if (!(t_lo >= 0) || !(t_hi > t_lo)) throw std::invalid_argument("critical_lambda requires 0 <= t_lo < t_hi");
  if (!(tol > 0)) throw std::invalid_argument("critical_lambda requires tol > 0");
  grid = std::max(grid, 2);
  constexpr double kPhaseTol = 1e-10;

  CriticalResult out;
  auto probe = [&](double t) {
    const PhaseVerdict v = classify_phase(base.with_lambda_scaled(exact_rational(t)), d, kPhaseTol, opts);
    const double m = v.M.point();
    const bool coexists = v.verdict == Phase::ExpectedCoexistence ||
                          (v.verdict == Phase::BoundaryInconclusive && m <= static_cast<double>(d));
    out.probes.push_back({t, v.verdict, m, coexists});
    return coexists;
  };

  std::vector<double> ts;
  std::vector<bool> marks;
  for (int i = 0; i < grid; ++i) {
    const double t = i + 1 == grid ? t_hi : t_lo + (t_hi - t_lo) * i / (grid - 1);
    ts.push_back(t);
    marks.push_back(probe(t));
  }
  if (marks.front() == marks.back()) {
    throw CriticalSearchError("phase verdicts agree at both ends of the scale interval", out.probes);
  }
  int flips = 0;
  std::size_t cell = 0;
  for (std::size_t i = 0; i + 1 < marks.size(); ++i) {
    if (marks[i] != marks[i + 1]) {
      ++flips;
      cell = i;
    }
  }
  if (flips != 1) throw CriticalSearchError("phase verdict is not monotone in the scale", out.probes);

  out.coexists_below = marks.front();
  double lo = ts[cell], hi = ts[cell + 1];
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (probe(mid) == out.coexists_below ? lo : hi) = mid;
  }
  out.lo = lo;
  out.hi = hi;
  out.t_star = 0.5 * (lo + hi);
  return out;
}

}  // namespace chase

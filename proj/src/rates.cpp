#include "chase/rates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace chase {

namespace {

void require_nonnegative(const Rational& r, const std::string& where) {
  if (r < 0) throw std::invalid_argument(where + ": rates must be nonnegative, got " + to_string(r));
}

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv_mix(std::uint64_t& h, const std::string& bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  h ^= 0xff;
  h *= kFnvPrime;
}

void fnv_mix(std::uint64_t& h, const RateSequence& seq) {
  for (const auto& r : seq.head()) fnv_mix(h, to_string(r));
  fnv_mix(h, "|");
  fnv_mix(h, to_string(seq.tail()));
}

}  // namespace

RateSequence::RateSequence(std::vector<Rational> head, Rational tail)
    : head_(std::move(head)), tail_(std::move(tail)) {
  for (std::size_t i = 0; i < head_.size(); ++i) {
    require_nonnegative(head_[i], "head[" + std::to_string(i) + "]");
  }
  require_nonnegative(tail_, "tail");
  head_value_.reserve(head_.size());
  prefix_exact_.reserve(head_.size() + 1);
  prefix_value_.reserve(head_.size() + 1);
  prefix_exact_.emplace_back(0);
  prefix_value_.push_back(0.0);
  for (const auto& r : head_) {
    head_value_.push_back(to_double(r));
    prefix_exact_.push_back(prefix_exact_.back() + r);
    prefix_value_.push_back(to_double(prefix_exact_.back()));
  }
  tail_value_ = to_double(tail_);
}

RateSequence RateSequence::constant(double value) { return RateSequence({}, exact_rational(value)); }

RateSequence RateSequence::from_doubles(const std::vector<double>& head, double tail) {
  std::vector<Rational> exact;
  exact.reserve(head.size());
  for (double x : head) exact.push_back(exact_rational(x));
  return RateSequence(std::move(exact), exact_rational(tail));
}

RateSequence RateSequence::scaled(const Rational& factor) const {
  std::vector<Rational> head;
  head.reserve(head_.size());
  for (const auto& r : head_) head.push_back(r * factor);
  return RateSequence(std::move(head), tail_ * factor);
}

RateProfile::RateProfile(RateSequence lambda, RateSequence rho, std::string name)
    : lambda_(std::move(lambda)), rho_(std::move(rho)), name_(std::move(name)) {}

RateProfile RateProfile::constant(double lambda, double rho, std::string name) {
  return RateProfile(RateSequence::constant(lambda), RateSequence::constant(rho), std::move(name));
}

std::size_t RateProfile::head_extent() const noexcept {
  return std::max(lambda_.head_size(), rho_.head_size());
}

RateProfile RateProfile::with_lambda_scaled(const Rational& factor) const {
  return RateProfile(lambda_.scaled(factor), rho_, name_);
}

std::uint64_t RateProfile::fingerprint() const {
  std::uint64_t h = kFnvOffset;
  fnv_mix(h, "lambda");
  fnv_mix(h, lambda_);
  fnv_mix(h, "rho");
  fnv_mix(h, rho_);
  return h;
}

std::string RateProfile::fingerprint_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fingerprint()));
  return buf;
}

std::int64_t StepWeights::tail_start() const noexcept {
  // u(j), v(j) read lambda_{j+1}, lambda_{j+2} and D_{j+1}, D_{j+2}; all are in
  // the tail regime once j + 1 > head_extent.
  return static_cast<std::int64_t>(profile_.head_extent());
}

StepValues<double> step_weights(const RateProfile& profile, std::int64_t j) {
  if (j < 0) throw std::out_of_range("step_weights requires j >= 0 (only v extends to -1)");
  const StepWeights w(profile);
  return {w.u(j), w.v(j), w.a(j)};
}

namespace {

ProductGrowthCheck check_growth(const RateProfile& profile, std::int64_t ell_max) {
  ProductGrowthCheck out;
  double log_product = 0.0;  // log prod_{i=3}^{ell-2}
  std::vector<double> xs, ys;
  for (std::int64_t ell = 5; ell <= ell_max; ++ell) {
    const std::int64_t i = ell - 2;  // newest factor index
    log_product += std::log1p(profile.rate(RateKind::Lambda, i) / (1.0 + profile.cumulative_death(i)));
    out.products.emplace_back(ell, std::exp(log_product));
    xs.push_back(std::log(static_cast<double>(ell)));
    ys.push_back(log_product);
  }

  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sx += xs[k];
    sy += ys[k];
    sxx += xs[k] * xs[k];
    sxy += xs[k] * ys[k];
  }
  const double denom = n * sxx - sx * sx;
  out.m = denom > 0 ? std::max(0.0, (n * sxy - sx * sy) / denom) : 0.0;
  out.fitted_log_c = (sy - out.m * sx) / n;

  double log_c = -INFINITY;
  for (std::size_t k = 0; k < xs.size(); ++k) log_c = std::max(log_c, ys[k] - out.m * xs[k]);
  out.c = std::exp(log_c);

  auto log_at = [&](std::int64_t ell) { return ys[static_cast<std::size_t>(ell - 5)]; };
  if (ell_max >= 20) {
    const std::int64_t e = ell_max, h = ell_max / 2, q = ell_max / 4;
    out.local_slope_end = (log_at(e) - log_at(h)) / std::log(static_cast<double>(e) / static_cast<double>(h));
    out.local_slope_mid = (log_at(h) - log_at(q)) / std::log(static_cast<double>(h) / static_cast<double>(q));
    // Polynomial growth has a settling log-log slope; geometric growth doubles it
    // each time ell doubles.
    if (out.local_slope_end > 0.5 && out.local_slope_end > 1.5 * out.local_slope_mid) {
      out.consistent = false;
      out.violated_at = ell_max;
      out.note = "super-polynomial growth: log-log slope rises from " + std::to_string(out.local_slope_mid) +
                 " to " + std::to_string(out.local_slope_end) + " by ell = " + std::to_string(ell_max);
    } else {
      out.note = "consistent at probed range 5.." + std::to_string(ell_max);
    }
  } else {
    out.note = "probe shorter than 20; growth trend not assessed";
  }
  return out;
}

WeightDecayCheck check_decay(const StepWeights& weights, std::int64_t k_probe) {
  WeightDecayCheck out;
  out.a.reserve(static_cast<std::size_t>(k_probe + 1));
  for (std::int64_t j = 0; j <= k_probe; ++j) out.a.push_back(weights.a(j));

  const std::int64_t mid = k_probe / 2;
  const double a_end = out.a.back();
  const double a_mid = out.a[static_cast<std::size_t>(mid)];
  if (a_end == 0.0) {
    out.note = "a_j vanishes by j = " + std::to_string(k_probe);
    return out;
  }
  for (std::int64_t j = mid + 1; j <= k_probe; ++j) {
    if (out.a[static_cast<std::size_t>(j)] > out.a[static_cast<std::size_t>(j - 1)]) {
      out.consistent = false;
      out.violated_at = j;
      out.note = "a_j increases at j = " + std::to_string(j);
      return out;
    }
  }
  if (a_end > 0.5 * a_mid) {
    out.consistent = false;
    out.violated_at = k_probe;
    out.note = "a_j does not decay: a_" + std::to_string(k_probe) + " / a_" + std::to_string(mid) + " = " +
               std::to_string(a_end / a_mid);
    return out;
  }
  out.note = "consistent at probed range 0.." + std::to_string(k_probe);
  return out;
}

}  // namespace

HypothesisReport check_hypotheses(const RateProfile& profile, std::int64_t ell_max, std::int64_t k_probe) {
  if (ell_max < 5) throw std::invalid_argument("check_hypotheses requires ell_max >= 5");
  if (k_probe < 2) throw std::invalid_argument("check_hypotheses requires k_probe >= 2");
  HypothesisReport report;
  report.ell_max = ell_max;
  report.k_probe = k_probe;
  report.growth = check_growth(profile, ell_max);
  report.decay = check_decay(StepWeights(profile), k_probe);
  report.tail_regime_holds = profile.lambda().tail() == 0 || profile.rho().tail() > 0;
  return report;
}

}  // namespace chase

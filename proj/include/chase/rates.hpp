#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "chase/rational.hpp"

namespace chase {

enum class RateKind { Lambda, Rho };

/// A nonnegative rate vector indexed from 1: a finite head followed by a
/// constant tail value that applies to every index past the head.
///
/// Each entry is held exactly (as a rational) and as the nearest double, so
/// the same profile drives both the exact and the floating code paths.
class RateSequence {
 public:
  RateSequence() : RateSequence(std::vector<Rational>{}, Rational(0)) {}
  RateSequence(std::vector<Rational> head, Rational tail);

  static RateSequence constant(double value);
  static RateSequence from_doubles(const std::vector<double>& head, double tail);

  const std::vector<Rational>& head() const noexcept { return head_; }
  const Rational& tail() const noexcept { return tail_; }
  double tail_value() const noexcept { return tail_value_; }
  std::size_t head_size() const noexcept { return head_.size(); }

  // Entry at index i >= 1.
  template <class T = double>
  T at(std::int64_t i) const;

  // Sum of entries 1..j (j >= 0). Closed form past the head.
  template <class T = double>
  T partial_sum(std::int64_t j) const;

  RateSequence scaled(const Rational& factor) const;

 private:
  std::vector<Rational> head_;
  Rational tail_;
  std::vector<double> head_value_;
  double tail_value_ = 0.0;
  std::vector<Rational> prefix_exact_;  // prefix_exact_[j] = sum of head[0..j)
  std::vector<double> prefix_value_;
};

/// The spreading rates (lambda) and death rates (rho) of the process, both
/// as functions of the distance to the nearest blue site.
class RateProfile {
 public:
  RateProfile() = default;
  RateProfile(RateSequence lambda, RateSequence rho, std::string name = {});

  static RateProfile constant(double lambda, double rho, std::string name = {});

  const RateSequence& lambda() const noexcept { return lambda_; }
  const RateSequence& rho() const noexcept { return rho_; }
  const std::string& name() const noexcept { return name_; }

  template <class T = double>
  T rate(RateKind which, std::int64_t i) const {
    return which == RateKind::Lambda ? lambda_.at<T>(i) : rho_.at<T>(i);
  }

  // D_j = rho_1 + ... + rho_j, with D_0 = 0.
  template <class T = double>
  T cumulative_death(std::int64_t j) const {
    return rho_.partial_sum<T>(j);
  }

  // Largest head length; past this index both sequences are constant.
  std::size_t head_extent() const noexcept;

  // Same death rates, spreading rates multiplied by `factor`.
  RateProfile with_lambda_scaled(const Rational& factor) const;

  // Stable 64-bit hash of the exact rate values (name excluded).
  std::uint64_t fingerprint() const;
  std::string fingerprint_hex() const;

 private:
  RateSequence lambda_;
  RateSequence rho_;
  std::string name_;
};

template <class T = double>
struct StepValues {
  T u;
  T v;
  T a;
};

/// The Dyck-path step weights
///   u(j) = lambda_{j+1} / (1 + lambda_{j+1} + D_{j+1})      (rise from height j)
///   v(j) = 1 / (1 + lambda_{j+2} + D_{j+2})                  (fall to height j)
///   a_j  = u(j) v(j)
/// computed on demand from the profile. v is also defined at j = -1, where it
/// is the probability that blue catches the lone red site at gap 1.
class StepWeights {
 public:
  explicit StepWeights(RateProfile profile) : profile_(std::move(profile)) {}

  const RateProfile& profile() const noexcept { return profile_; }

  template <class T = double>
  T u(std::int64_t j) const;
  template <class T = double>
  T v(std::int64_t j) const;
  template <class T = double>
  T a(std::int64_t j) const {
    return u<T>(j) * v<T>(j);
  }

  // For j >= tail_start() every rate entering u(j), v(j) comes from the tails.
  std::int64_t tail_start() const noexcept;

 private:
  RateProfile profile_;
};

// Throws std::out_of_range for j < 0 (only v extends to -1).
StepValues<double> step_weights(const RateProfile& profile, std::int64_t j);

struct ProductGrowthCheck {
  // (ell, prod_{i=3}^{ell-2} (1 + lambda_i / (1 + D_i))) for ell = 5..ell_max
  std::vector<std::pair<std::int64_t, double>> products;
  double c = 1.0;  // fitted so that products[ell] <= c * ell^m on the probed range
  double m = 0.0;
  double fitted_log_c = 0.0;  // least-squares intercept before inflation
  double local_slope_mid = 0.0;
  double local_slope_end = 0.0;
  bool consistent = true;
  std::optional<std::int64_t> violated_at;
  std::string note;
};

struct WeightDecayCheck {
  std::vector<double> a;  // a_0 .. a_{k_probe}
  bool consistent = true;
  std::optional<std::int64_t> violated_at;
  std::string note;
};

/// Evidence for the two growth/decay conditions on the rates. Both checks are
/// empirical over the probed window; `tail_regime_holds` is what the
/// eventually-constant structure implies for the limits (both conditions hold
/// exactly when lambda's tail is zero or rho's tail is positive).
struct HypothesisReport {
  std::int64_t ell_max = 0;
  std::int64_t k_probe = 0;
  ProductGrowthCheck growth;
  WeightDecayCheck decay;
  bool tail_regime_holds = true;

  bool consistent() const noexcept { return growth.consistent && decay.consistent; }
};

// Requires ell_max >= 5 and k_probe >= 2.
HypothesisReport check_hypotheses(const RateProfile& profile, std::int64_t ell_max = 400,
                                  std::int64_t k_probe = 400);

// ---------------------------------------------------------------------------

template <class T>
T RateSequence::at(std::int64_t i) const {
  if (i < 1) throw std::out_of_range("rate index must be >= 1");
  const auto idx = static_cast<std::size_t>(i - 1);
  if constexpr (std::is_same_v<T, Rational>) {
    return idx < head_.size() ? head_[idx] : tail_;
  } else {
    return static_cast<T>(idx < head_.size() ? head_value_[idx] : tail_value_);
  }
}

template <class T>
T RateSequence::partial_sum(std::int64_t j) const {
  if (j < 0) throw std::out_of_range("partial sum index must be >= 0");
  const auto h = static_cast<std::int64_t>(head_.size());
  if constexpr (std::is_same_v<T, Rational>) {
    if (j <= h) return prefix_exact_[static_cast<std::size_t>(j)];
    return prefix_exact_.back() + Rational(j - h) * tail_;
  } else {
    if (j <= h) return static_cast<T>(prefix_value_[static_cast<std::size_t>(j)]);
    return static_cast<T>(prefix_value_.back() + static_cast<double>(j - h) * tail_value_);
  }
}

template <class T>
T StepWeights::u(std::int64_t j) const {
  if (j < 0) throw std::out_of_range("u(j) requires j >= 0");
  const T lam = profile_.rate<T>(RateKind::Lambda, j + 1);
  return lam / (T(1) + lam + profile_.cumulative_death<T>(j + 1));
}

template <class T>
T StepWeights::v(std::int64_t j) const {
  if (j < -1) throw std::out_of_range("v(j) requires j >= -1");
  const T lam = profile_.rate<T>(RateKind::Lambda, j + 2);
  return T(1) / (T(1) + lam + profile_.cumulative_death<T>(j + 2));
}

}  // namespace chase

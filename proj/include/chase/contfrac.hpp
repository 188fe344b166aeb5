#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chase/catalan.hpp"
#include "chase/rates.hpp"

namespace chase {

/// Numerators and denominators of the approximants of
///   f(z) = 1 / (1 - a_0 z / (1 - a_1 z / (1 - ...)))
/// after `depth` partial numerators, with X_n = X_{n-1} - a_{n-1} z X_{n-2}.
/// The pair is rescaled jointly by powers of two to stay in [2^-512, 2^512].
struct ApproximantState {
  double a_prev = 0.0;
  double a_curr = 1.0;
  double b_prev = 1.0;
  double b_curr = 1.0;
  std::int64_t depth = 0;

  void advance(double partial_numerator);
  double value() const noexcept { return a_curr / b_curr; }
};

// Smallest J with a_j z <= 1/4 for every j >= J, resolved from the
// head/tail structure; nullopt when no such J exists below `horizon`.
std::optional<std::int64_t> tail_index(const StepWeights& weights, double z,
                                       std::int64_t horizon = 1'000'000'000);

enum class EvalStatus { Converged, Diverged, Inconclusive };
std::string_view to_string(EvalStatus s);

struct EvalResult {
  EvalStatus status = EvalStatus::Inconclusive;
  double value = 0.0;        // last approximant
  std::int64_t depth = 0;    // approximant depth reached
  std::optional<std::int64_t> tail;
  std::string reason;
};

inline constexpr std::int64_t kDefaultMaxDepth = 1'000'000;
inline constexpr double kBlowUpThreshold = 1e12;

// Depth-doubling evaluation of f at z > 0. Converged once
// |F_n - F_{n/2}| <= tol * max(1, |F_n|) with n/2 past the tail index; Diverged
// when some denominator B_n(z) <= 0 (an approximant pole in (0, z], so M <= z)
// or F_n exceeds 1e12; Inconclusive when n_max is reached.
EvalResult evaluate_f(const StepWeights& weights, double z, double tol = 1e-13,
                      std::int64_t n_max = kDefaultMaxDepth);

struct RadiusProbe {
  double z;
  EvalStatus status;
  std::int64_t depth;
};

/// Radius of convergence bracket [lo, hi]: lo is the largest probed z that did
/// not diverge, hi the smallest that did.
struct RadiusEstimate {
  bool infinite = false;
  double lo = 0.0;
  double hi = 0.0;
  int inconclusive_probes = 0;
  std::vector<RadiusProbe> probes;
  std::optional<RootTestEstimate> root_test;
  bool root_test_agrees = true;  // within 5%

  double point() const noexcept;
  double width() const noexcept { return hi - lo; }
};

struct RadiusOptions {
  std::int64_t n_max = kDefaultMaxDepth;
  double eval_tol = 1e-13;
  int root_test_k_max = 400;
  int root_test_window = 40;
};

RadiusEstimate estimate_M(const StepWeights& weights, double tol, const RadiusOptions& opts = {});

enum class Phase { ExpectedCoexistence, NoExpectedCoexistence, BoundaryInconclusive };
std::string_view to_string(Phase p);

struct PhaseVerdict {
  Phase verdict = Phase::BoundaryInconclusive;
  int d = 2;
  double tol = 0.0;
  RadiusEstimate M;
  EvalResult g_at_d;
  HypothesisReport hypotheses;
  std::vector<std::string> warnings;
  std::uint64_t profile_fingerprint = 0;
};

// Expected coexistence on the d-ary tree iff M <= d. Requires d >= 2.
PhaseVerdict classify_phase(const RateProfile& profile, int d, double tol = 1e-9,
                            const RadiusOptions& opts = {});

struct CriticalProbe {
  double t;
  Phase verdict;
  double M;
  bool coexists;
};

struct CriticalResult {
  double t_star = 0.0;
  double lo = 0.0;  // bracket of the verdict flip
  double hi = 0.0;
  bool coexists_below = false;
  std::vector<CriticalProbe> probes;
};

class CriticalSearchError : public std::runtime_error {
 public:
  CriticalSearchError(const std::string& what, std::vector<CriticalProbe> probes)
      : std::runtime_error(what), probes_(std::move(probes)) {}
  const std::vector<CriticalProbe>& probes() const noexcept { return probes_; }

 private:
  std::vector<CriticalProbe> probes_;
};

/// Locates the scale t* in [t_lo, t_hi] at which the phase of (t * lambda, rho)
/// flips, to width `tol`. The verdict is assumed monotone in t and checked on
/// a grid of `grid` probes first.
CriticalResult critical_lambda(const RateProfile& base, int d, double t_lo, double t_hi, double tol,
                               int grid = 9, const RadiusOptions& opts = {});

}  // namespace chase

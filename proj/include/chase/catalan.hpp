#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chase/rates.hpp"

namespace chase {

enum class Step : std::uint8_t { Rise, Fall };

/// A nonnegative lattice path from height 0 back to height 0.
class DyckPath {
 public:
  DyckPath() = default;
  explicit DyckPath(std::vector<Step> steps);  // throws std::invalid_argument if not a Dyck path

  // "UDUUDD"-style spelling, U = rise, D = fall.
  static DyckPath parse(std::string_view spelling);

  const std::vector<Step>& steps() const noexcept { return steps_; }
  std::size_t semilength() const noexcept { return steps_.size() / 2; }
  std::string spelling() const;

 private:
  std::vector<Step> steps_;
};

// Product of u(h) over rises from height h and v(h) over falls from h+1 to h.
template <class T = double>
T path_weight(const DyckPath& path, const StepWeights& weights) {
  T w(1);
  std::int64_t h = 0;
  for (Step s : path.steps()) {
    if (s == Step::Rise) {
      w *= weights.u<T>(h);
      ++h;
    } else {
      --h;
      w *= weights.v<T>(h);
    }
  }
  return w;
}

inline constexpr int kMaxEnumeratedSemilength = 16;

// Visits every Dyck path of semilength k exactly once (k <= 16).
void for_each_dyck_path(int k, const std::function<void(const DyckPath&)>& visit);
std::vector<DyckPath> enumerate_dyck_paths(int k);

boost::multiprecision::cpp_int ordinary_catalan(int k);

enum class ArithmeticMode { Exact, Floating, LogDomain };

std::string_view to_string(ArithmeticMode mode);
ArithmeticMode parse_arithmetic_mode(std::string_view text);

/// Weighted Catalan numbers C_0..C_K for one weight sequence.
///
/// `log_values` is always filled (ln C_k, -inf for zero). `values` holds C_k as
/// a double and may underflow to 0 for large k outside log-domain mode, which
/// `underflow` then reports. `exact` is filled only in exact mode.
struct CatalanTable {
  ArithmeticMode mode = ArithmeticMode::Floating;
  std::uint64_t weights_fingerprint = 0;
  std::vector<double> values;
  std::vector<double> log_values;
  std::vector<Rational> exact;
  bool underflow = false;
  std::string underflow_note;

  int k_max() const noexcept { return static_cast<int>(log_values.size()) - 1; }
};

// Forward transfer over (step, height): O(k_max^2) updates.
CatalanTable weighted_catalan_table(const StepWeights& weights, int k_max,
                                    ArithmeticMode mode = ArithmeticMode::LogDomain);

// Brute force over enumerate_dyck_paths, exact arithmetic.
Rational weighted_catalan_by_enumeration(const StepWeights& weights, int k);

struct RootTestEstimate {
  double M = 0.0;  // +inf when C_k vanishes on the whole window
  int window = 0;
  int argmax_k = 0;  // k attaining max C_k^{1/k} on the window
  std::vector<double> inverse_roots;  // C_k^{-1/k} for k = 1..K (inf where C_k = 0)
};

// 1 / max_{K-window < k <= K} C_k^{1/k}. Throws std::invalid_argument when the
// table has fewer than `window` entries past C_0 or window < 2.
RootTestEstimate root_test_estimate(const CatalanTable& table, int window);

}  // namespace chase

#include "chase/catalan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace chase {

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  std::int64_t h = 0;
  for (Step s : steps_) {
    h += s == Step::Rise ? 1 : -1;
    if (h < 0) throw std::invalid_argument("Dyck path dips below height 0");
  }
  if (h != 0) throw std::invalid_argument("Dyck path does not return to height 0");
}

DyckPath DyckPath::parse(std::string_view spelling) {
  std::vector<Step> steps;
  steps.reserve(spelling.size());
  for (char c : spelling) {
    if (c == 'U' || c == 'u') {
      steps.push_back(Step::Rise);
    } else if (c == 'D' || c == 'd') {
      steps.push_back(Step::Fall);
    } else {
      throw std::invalid_argument("Dyck path spelling uses U and D only");
    }
  }
  return DyckPath(std::move(steps));
}

std::string DyckPath::spelling() const {
  std::string s;
  s.reserve(steps_.size());
  for (Step step : steps_) s.push_back(step == Step::Rise ? 'U' : 'D');
  return s;
}

namespace {

void extend(std::vector<Step>& prefix, int rises_left, int height,
            const std::function<void(const DyckPath&)>& visit) {
  if (rises_left == 0 && height == 0) {
    visit(DyckPath(prefix));
    return;
  }
  if (rises_left > 0) {
    prefix.push_back(Step::Rise);
    extend(prefix, rises_left - 1, height + 1, visit);
    prefix.pop_back();
  }
  if (height > 0) {
    prefix.push_back(Step::Fall);
    extend(prefix, rises_left, height - 1, visit);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_dyck_path(int k, const std::function<void(const DyckPath&)>& visit) {
  if (k < 0 || k > kMaxEnumeratedSemilength) {
    throw std::invalid_argument("Dyck path enumeration supports 0 <= k <= " +
                                std::to_string(kMaxEnumeratedSemilength));
  }
  std::vector<Step> prefix;
  prefix.reserve(static_cast<std::size_t>(2 * k));
  extend(prefix, k, 0, visit);
}

std::vector<DyckPath> enumerate_dyck_paths(int k) {
  std::vector<DyckPath> out;
  for_each_dyck_path(k, [&](const DyckPath& p) { out.push_back(p); });
  return out;
}

boost::multiprecision::cpp_int ordinary_catalan(int k) {
  boost::multiprecision::cpp_int c = 1;
  for (int n = 0; n < k; ++n) c = c * 2 * (2 * n + 1) / (n + 2);
  return c;
}

std::string_view to_string(ArithmeticMode mode) {
  switch (mode) {
    case ArithmeticMode::Exact: return "exact";
    case ArithmeticMode::Floating: return "floating";
    case ArithmeticMode::LogDomain: return "log";
  }
  return "?";
}

ArithmeticMode parse_arithmetic_mode(std::string_view text) {
  if (text == "exact") return ArithmeticMode::Exact;
  if (text == "floating" || text == "float") return ArithmeticMode::Floating;
  if (text == "log") return ArithmeticMode::LogDomain;
  throw std::invalid_argument("unknown arithmetic mode '" + std::string(text) + "'");
}

namespace {

// Heights reachable at step n that can still return to 0 by step 2K.
inline int height_limit(int n, int k_max) { return std::min(n, 2 * k_max - n); }

template <class T>
std::vector<T> transfer(const StepWeights& weights, int k_max, bool& underflow, bool rescale,
                        std::vector<double>* log_scale_at_return) {
  std::vector<T> up, down;
  for (int h = 0; h <= k_max; ++h) {
    up.push_back(weights.u<T>(h));
    down.push_back(weights.v<T>(h));
  }
  std::vector<T> cur(static_cast<std::size_t>(k_max) + 2, T(0)), next(cur.size(), T(0));
  std::vector<T> returns{T(1)};
  cur[0] = T(1);
  double log_scale = 0.0;
  if (log_scale_at_return) log_scale_at_return->push_back(0.0);

  for (int n = 0; n < 2 * k_max; ++n) {
    std::fill(next.begin(), next.end(), T(0));
    const int hmax = height_limit(n, k_max);
    const int next_hmax = height_limit(n + 1, k_max);
    for (int h = 0; h <= hmax; ++h) {
      const auto hs = static_cast<std::size_t>(h);
      if (cur[hs] == 0) continue;
      if (h + 1 <= next_hmax) {
        T add = cur[hs] * up[hs];
        if constexpr (std::is_floating_point_v<T>) {
          if (add == 0 && up[hs] != 0) underflow = true;
        }
        next[hs + 1] += add;
      }
      if (h > 0) {
        T add = cur[hs] * down[hs - 1];
        if constexpr (std::is_floating_point_v<T>) {
          if (add == 0) underflow = true;
        }
        next[hs - 1] += add;
      }
    }
    std::swap(cur, next);
    if constexpr (std::is_floating_point_v<T>) {
      if (rescale) {
        const T peak = *std::max_element(cur.begin(), cur.end());
        if (peak > 0) {
          for (auto& x : cur) x /= peak;
          log_scale += std::log(peak);
        }
      }
    }
    if ((n + 1) % 2 == 0) {
      returns.push_back(cur[0]);
      if (log_scale_at_return) log_scale_at_return->push_back(log_scale);
    }
  }
  return returns;
}

double safe_log(double x) { return x > 0 ? std::log(x) : -std::numeric_limits<double>::infinity(); }

}  // namespace

CatalanTable weighted_catalan_table(const StepWeights& weights, int k_max, ArithmeticMode mode) {
  if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
  CatalanTable table;
  table.mode = mode;
  table.weights_fingerprint = weights.profile().fingerprint();
  bool underflow = false;

  switch (mode) {
    case ArithmeticMode::Exact: {
      table.exact = transfer<Rational>(weights, k_max, underflow, false, nullptr);
      for (const auto& c : table.exact) {
        table.values.push_back(to_double(c));
        table.log_values.push_back(c > 0 ? std::log(to_double(c)) : -std::numeric_limits<double>::infinity());
      }
      // to_double may underflow for astronomically small C_k; recover the log
      // from numerator/denominator magnitudes.
      for (std::size_t k = 0; k < table.exact.size(); ++k) {
        if (table.exact[k] > 0 && table.values[k] == 0.0) {
          const auto& c = table.exact[k];
          const double num_bits = static_cast<double>(msb(boost::multiprecision::numerator(c)));
          const double den_bits = static_cast<double>(msb(boost::multiprecision::denominator(c)));
          table.log_values[k] = (num_bits - den_bits) * std::log(2.0);
        }
      }
      break;
    }
    case ArithmeticMode::Floating: {
      table.values = transfer<double>(weights, k_max, underflow, false, nullptr);
      for (double c : table.values) table.log_values.push_back(safe_log(c));
      if (underflow) {
        table.underflow = true;
        table.underflow_note =
            "intermediate path weights underflowed to 0; use log-domain or exact mode for this k range";
      }
      break;
    }
    case ArithmeticMode::LogDomain: {
      std::vector<double> scale;
      const auto scaled = transfer<double>(weights, k_max, underflow, true, &scale);
      for (std::size_t k = 0; k < scaled.size(); ++k) {
        const double lv = safe_log(scaled[k]) + scale[k];
        table.log_values.push_back(scaled[k] > 0 ? lv : -std::numeric_limits<double>::infinity());
        table.values.push_back(scaled[k] > 0 ? std::exp(lv) : 0.0);
      }
      break;
    }
  }
  return table;
}

Rational weighted_catalan_by_enumeration(const StepWeights& weights, int k) {
  Rational total = 0;
  for_each_dyck_path(k, [&](const DyckPath& p) { total += path_weight<Rational>(p, weights); });
  return total;
}

RootTestEstimate root_test_estimate(const CatalanTable& table, int window) {
  if (window < 2) throw std::invalid_argument("root test window must be >= 2");
  const int k_max = table.k_max();
  if (k_max < window) {
    throw std::invalid_argument("root test needs at least " + std::to_string(window) +
                                " coefficients past C_0, table has " + std::to_string(std::max(k_max, 0)));
  }
  RootTestEstimate est;
  est.window = window;
  const double inf = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= k_max; ++k) {
    const double lv = table.log_values[static_cast<std::size_t>(k)];
    est.inverse_roots.push_back(std::isfinite(lv) ? std::exp(-lv / k) : inf);
  }
  double best_log_root = -inf;
  for (int k = k_max - window + 1; k <= k_max; ++k) {
    const double lr = table.log_values[static_cast<std::size_t>(k)] / k;
    if (lr > best_log_root) {
      best_log_root = lr;
      est.argmax_k = k;
    }
  }
  est.M = std::isfinite(best_log_root) ? std::exp(-best_log_root) : inf;
  return est;
}

}  // namespace chase

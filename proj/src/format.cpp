#include "chase/format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace chase {

std::string_view version() { return CHASE_VERSION_STRING; }

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv_preamble(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& config) {
  out << "# chase " << version() << '\n';
  for (const auto& [key, value] : config) out << "# " << key << '=' << value << '\n';
}

void write_weights_csv(std::ostream& out, const StepWeights& weights, std::int64_t j_max) {
  out << "j,u,v,a,D_j\n";
  for (std::int64_t j = 0; j <= j_max; ++j) {
    out << j << ',' << format_real(weights.u(j)) << ',' << format_real(weights.v(j)) << ','
        << format_real(weights.a(j)) << ',' << format_real(weights.profile().cumulative_death(j)) << '\n';
  }
}

void write_catalan_csv(std::ostream& out, const CatalanTable& table, const StepWeights* enumeration_check) {
  out << "k,C_k,inverse_root,log_C_k,enumeration_match\n";
  const bool exact = table.mode == ArithmeticMode::Exact;
  for (int k = 0; k <= table.k_max(); ++k) {
    const auto idx = static_cast<std::size_t>(k);
    const double c = table.values[idx];
    const double inv_root =
        k == 0 ? std::nan("") : (c > 0 ? std::exp(-table.log_values[idx] / k) : std::numeric_limits<double>::infinity());
    out << k << ',' << format_real(c) << ',' << format_real(inv_root) << ',' << format_real(table.log_values[idx]) << ',';
    if (enumeration_check && k <= kMaxEnumeratedSemilength && k <= 8) {
      const Rational brute = weighted_catalan_by_enumeration(*enumeration_check, k);
      bool match;
      if (exact) {
        match = brute == table.exact[idx];
      } else {
        const double b = to_double(brute);
        match = std::abs(b - c) <= 1e-12 * std::max(std::abs(b), std::abs(c));
      }
      out << (match ? "1" : "0");
    }
    out << '\n';
  }
}

std::vector<LineRow> line_rows(const RateProfile& profile, const RenewalFrequencies& mc, int k_max) {
  const auto cat = weighted_catalan_table(StepWeights(profile), k_max, ArithmeticMode::LogDomain);
  const auto reach = reach_table(profile, k_max);
  std::vector<LineRow> rows;
  for (int k = 1; k <= k_max; ++k) {
    LineRow r;
    r.k = k;
    r.catalan = cat.values[static_cast<std::size_t>(k)];
    r.p_reach = reach.p_reach[static_cast<std::size_t>(k)];
    r.frequency = mc.frequency(k);
    r.standard_error = mc.standard_error(k);
    r.runs = mc.runs;
    rows.push_back(r);
  }
  return rows;
}

void write_line_csv(std::ostream& out, const std::vector<LineRow>& rows) {
  out << "k,C_k,P_reach,frequency,stderr,N\n";
  for (const auto& r : rows) {
    out << r.k << ',' << format_real(r.catalan) << ',' << format_real(r.p_reach) << ',' << format_real(r.frequency)
        << ',' << format_real(r.standard_error) << ',' << r.runs << '\n';
  }
}

void write_tree_runs_csv(std::ostream& out, const std::vector<SimOutcome>& outcomes) {
  out << "run,seed,blue_count,reached_cap,max_blue_depth,events,exhausted\n";
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    out << i << ',' << o.seed << ',' << o.blue_count << ',' << (o.reached_cap ? 1 : 0) << ',' << o.max_blue_depth
        << ',' << o.events << ',' << (o.exhausted ? 1 : 0) << '\n';
  }
}

}  // namespace chase

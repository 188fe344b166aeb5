#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "chase/catalan.hpp"
#include "chase/jumpchain.hpp"
#include "chase/rates.hpp"
#include "chase/treesim.hpp"

namespace chase {

std::string_view version();

// 17 significant digits; "inf", "-inf", "nan" for non-finite values.
std::string format_real(double x);

// Comment lines ("# key=value") placed ahead of every CSV document.
void write_csv_preamble(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& config);

void write_weights_csv(std::ostream& out, const StepWeights& weights, std::int64_t j_max);

// Columns k, C_k, C_k^{-1/k}, log C_k, and (k <= kMaxEnumeratedSemilength when
// `enumeration_check` holds) whether the transfer matches Dyck enumeration.
void write_catalan_csv(std::ostream& out, const CatalanTable& table, const StepWeights* enumeration_check);

struct LineRow {
  int k = 0;
  double catalan = 0.0;
  double p_reach = 0.0;
  double frequency = 0.0;
  double standard_error = 0.0;
  std::int64_t runs = 0;
};

std::vector<LineRow> line_rows(const RateProfile& profile, const RenewalFrequencies& mc, int k_max);
void write_line_csv(std::ostream& out, const std::vector<LineRow>& rows);

void write_tree_runs_csv(std::ostream& out, const std::vector<SimOutcome>& outcomes);

}  // namespace chase

#pragma once

#include "chase/rates.hpp"

namespace chase {

/// P(Y >= k) from a direct linear solve on the half-line process, without the
/// gap-chain decomposition. States are (blue position B, configuration ahead
/// of blue): either g live reds followed by white sites, or r live reds
/// followed by a dead site. Only sites 1..k matter for reaching k, so the
/// live gap is truncated at k + 1 with no loss.
double reach_probability_linear_solve(const RateProfile& profile, int k);

}  // namespace chase

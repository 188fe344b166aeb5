#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "chase/contfrac.hpp"
#include "chase/jumpchain.hpp"
#include "chase/rates.hpp"
#include "chase/treesim.hpp"

namespace chase {

using Json = nlohmann::ordered_json;

// Finite values as numbers, non-finite ones as the strings "inf", "-inf", "nan".
Json real_json(double x);

Json profile_json(const RateProfile& profile);
Json hypotheses_json(const HypothesisReport& report);
Json eval_json(const EvalResult& result);
Json radius_json(const RadiusEstimate& estimate);
Json phase_json(const PhaseVerdict& verdict);
Json critical_json(const CriticalResult& result);
Json critical_probes_json(const std::vector<CriticalProbe>& probes);
Json reach_bound_json(const ReachBoundReport& report);
Json blue_estimate_json(const BlueEstimate& estimate);

// {"tool": "chase", "version": ..., "config": {...}, "profile": {...}}
Json document_header(const std::vector<std::pair<std::string, std::string>>& config, const RateProfile* profile);

// Pretty printed with a trailing newline.
std::string dump(const Json& doc);

}  // namespace chase

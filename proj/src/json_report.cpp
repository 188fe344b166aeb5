#include "chase/json_report.hpp"

#include <cmath>

#include "chase/format.hpp"

namespace chase {

Json real_json(double x) {
  if (std::isfinite(x)) return x;
  return format_real(x);
}

Json profile_json(const RateProfile& profile) {
  auto seq = [](const RateSequence& s) {
    Json head = Json::array();
    for (const auto& v : s.head()) head.push_back(to_string(v));
    return Json{{"head", head}, {"tail", to_string(s.tail())}};
  };
  return Json{{"name", profile.name()},
              {"fingerprint", profile.fingerprint_hex()},
              {"lambda", seq(profile.lambda())},
              {"rho", seq(profile.rho())}};
}

Json hypotheses_json(const HypothesisReport& report) {
  Json growth{{"consistent", report.growth.consistent},
              {"c", real_json(report.growth.c)},
              {"m", real_json(report.growth.m)},
              {"local_slope_mid", real_json(report.growth.local_slope_mid)},
              {"local_slope_end", real_json(report.growth.local_slope_end)},
              {"note", report.growth.note}};
  if (report.growth.violated_at) growth["violated_at"] = *report.growth.violated_at;
  Json decay{{"consistent", report.decay.consistent}, {"note", report.decay.note}};
  if (report.decay.violated_at) decay["violated_at"] = *report.decay.violated_at;
  return Json{{"ell_max", report.ell_max},
              {"k_probe", report.k_probe},
              {"consistent", report.consistent()},
              {"tail_regime_holds", report.tail_regime_holds},
              {"product_growth", growth},
              {"weight_decay", decay}};
}

Json eval_json(const EvalResult& result) {
  Json j{{"status", std::string(to_string(result.status))},
         {"value", real_json(result.value)},
         {"depth", result.depth},
         {"reason", result.reason}};
  j["tail_index"] = result.tail ? Json(*result.tail) : Json(nullptr);
  return j;
}

Json radius_json(const RadiusEstimate& estimate) {
  Json j{{"infinite", estimate.infinite},
         {"point", real_json(estimate.point())},
         {"lo", real_json(estimate.lo)},
         {"hi", real_json(estimate.hi)},
         {"probes", estimate.probes.size()},
         {"inconclusive_probes", estimate.inconclusive_probes}};
  if (estimate.root_test) {
    j["root_test"] = Json{{"M", real_json(estimate.root_test->M)},
                          {"window", estimate.root_test->window},
                          {"argmax_k", estimate.root_test->argmax_k},
                          {"agrees_within_5_percent", estimate.root_test_agrees}};
  }
  return j;
}

Json phase_json(const PhaseVerdict& verdict) {
  return Json{{"verdict", std::string(to_string(verdict.verdict))},
              {"d", verdict.d},
              {"tol", real_json(verdict.tol)},
              {"M", radius_json(verdict.M)},
              {"g_at_d", eval_json(verdict.g_at_d)},
              {"hypotheses", hypotheses_json(verdict.hypotheses)},
              {"warnings", verdict.warnings}};
}

Json critical_probes_json(const std::vector<CriticalProbe>& probes) {
  Json arr = Json::array();
  for (const auto& p : probes) {
    arr.push_back(Json{{"t", real_json(p.t)},
                       {"verdict", std::string(to_string(p.verdict))},
                       {"M", real_json(p.M)},
                       {"coexists", p.coexists}});
  }
  return arr;
}

Json critical_json(const CriticalResult& result) {
  return Json{{"t_star", real_json(result.t_star)},
              {"lo", real_json(result.lo)},
              {"hi", real_json(result.hi)},
              {"coexists_below", result.coexists_below},
              {"probes", critical_probes_json(result.probes)}};
}

Json reach_bound_json(const ReachBoundReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back(Json{{"k", r.k},
                        {"p_reach", real_json(r.p_reach)},
                        {"C_k", real_json(r.catalan)},
                        {"ratio", real_json(r.ratio)},
                        {"upper_ok", r.upper_ok},
                        {"lower_lhs", real_json(r.lower_lhs)},
                        {"p_equal", real_json(r.p_equal)},
                        {"lower_ok", r.lower_ok},
                        {"sandwich_ok", r.sandwich_ok}});
  }
  return Json{{"c", real_json(report.c)},
              {"m", real_json(report.m)},
              {"c0_path", real_json(report.c0_path)},
              {"completion_factor", real_json(report.completion_factor)},
              {"c0", real_json(report.c0)},
              {"hypotheses_consistent", report.hypotheses_consistent},
              {"upper_holds", report.upper_holds},
              {"upper_holds_with_path_constant", report.upper_holds_with_path_constant},
              {"lower_holds", report.lower_holds},
              {"sandwich_holds", report.sandwich_holds},
              {"note", report.note},
              {"rows", rows}};
}

Json blue_estimate_json(const BlueEstimate& estimate) {
  return Json{{"runs", estimate.runs},
              {"mean_blue_count", real_json(estimate.mean)},
              {"standard_error", real_json(estimate.standard_error)},
              {"series", real_json(estimate.series)},
              {"gap", real_json(estimate.gap)},
              {"exhausted_runs", estimate.exhausted_runs},
              {"reached_cap_fraction", real_json(estimate.reached_cap_fraction)}};
}

Json document_header(const std::vector<std::pair<std::string, std::string>>& config, const RateProfile* profile) {
  Json cfg = Json::object();
  for (const auto& [k, v] : config) cfg[k] = v;
  Json doc{{"tool", "chase"}, {"version", std::string(version())}, {"config", cfg}};
  if (profile) doc["profile"] = profile_json(*profile);
  return doc;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace chase

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"

#include "chase/absorbing.hpp"
#include "chase/catalan.hpp"
#include "chase/contfrac.hpp"
#include "chase/format.hpp"
#include "chase/json_report.hpp"
#include "chase/jumpchain.hpp"
#include "chase/parallel.hpp"
#include "chase/profile_io.hpp"
#include "chase/rates.hpp"
#include "chase/treesim.hpp"

namespace chase::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Config = std::vector<std::pair<std::string, std::string>>;

struct Options {
  std::string profile_path;
  std::string format;
  std::string output;
  unsigned threads = default_threads();
  std::int64_t j_max = 10;
  int k_max = 20;
  std::string mode = "log";
  int window = 0;
  int d = 2;
  double tol = 1e-9;
  double z = 0.0;
  double t_lo = 0.0;
  double t_hi = 1.0;
  int grid = 9;
  std::uint64_t seed = 1;
  std::int64_t runs = 100000;
  int depth_cap = 10;
  std::int64_t max_events = kDefaultMaxEvents;
  std::int64_t max_steps = 1'000'000;
  std::string summary;
  std::string manifest;
};

std::string int_text(std::int64_t v) { return std::to_string(v); }

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open output file '" + path + "'");
  f << text;
  if (!f) throw InputError("failed writing output file '" + path + "'");
}

RateProfile require_profile(const Options& o) {
  if (o.profile_path.empty()) throw InputError("--profile is required");
  return load_profile(o.profile_path);
}

Config base_config(const std::string& command, const Options& o, const RateProfile& profile) {
  return {{"command", command}, {"profile", o.profile_path}, {"profile_fingerprint", profile.fingerprint_hex()}};
}

std::string csv_document(const Config& cfg, const std::function<void(std::ostream&)>& body) {
  std::ostringstream s;
  write_csv_preamble(s, cfg);
  body(s);
  return s.str();
}

void write_manifest(const Options& o, const Config& cfg, const RateProfile& profile, std::ostream& out) {
  if (o.manifest.empty()) return;
  Json doc = document_header(cfg, &profile);
  doc["kind"] = "run_manifest";
  write_text(o.manifest, dump(doc), out);
}

// ---------------------------------------------------------------------------

int cmd_weights(const Options& o, std::ostream& out) {
  if (o.j_max < 0) throw InputError("--j-max must be >= 0");
  const RateProfile profile = require_profile(o);
  const StepWeights w(profile);
  Config cfg = base_config("weights", o, profile);
  cfg.emplace_back("j_max", int_text(o.j_max));
  if (o.format == "json") {
    Json doc = document_header(cfg, &profile);
    Json rows = Json::array();
    for (std::int64_t j = 0; j <= o.j_max; ++j) {
      rows.push_back(Json{{"j", j},
                          {"u", real_json(w.u(j))},
                          {"v", real_json(w.v(j))},
                          {"a", real_json(w.a(j))},
                          {"D_j", real_json(profile.cumulative_death(j))}});
    }
    doc["v_minus_1"] = real_json(w.v(-1));
    doc["rows"] = rows;
    write_text(o.output, dump(doc), out);
  } else {
    write_text(o.output, csv_document(cfg, [&](std::ostream& s) { write_weights_csv(s, w, o.j_max); }), out);
  }
  return kOk;
}

int cmd_catalan(const Options& o, std::ostream& out) {
  if (o.k_max < 0) throw InputError("--k-max must be >= 0");
  const ArithmeticMode mode = parse_arithmetic_mode(o.mode);
  const RateProfile profile = require_profile(o);
  const StepWeights w(profile);
  const CatalanTable table = weighted_catalan_table(w, o.k_max, mode);
  Config cfg = base_config("catalan", o, profile);
  cfg.emplace_back("k_max", int_text(o.k_max));
  cfg.emplace_back("mode", std::string(to_string(mode)));
  const int window = o.window > 0 ? o.window : std::max(2, o.k_max / 5);
  std::optional<RootTestEstimate> root;
  if (o.k_max >= window && window >= 2) root = root_test_estimate(table, window);
  if (root) cfg.emplace_back("root_test_window", int_text(window));

  if (o.format == "json") {
    Json doc = document_header(cfg, &profile);
    Json rows = Json::array();
    for (int k = 0; k <= table.k_max(); ++k) {
      const auto idx = static_cast<std::size_t>(k);
      Json row{{"k", k}, {"C_k", real_json(table.values[idx])}, {"log_C_k", real_json(table.log_values[idx])}};
      if (mode == ArithmeticMode::Exact) row["exact"] = to_string(table.exact[idx]);
      rows.push_back(row);
    }
    doc["rows"] = rows;
    doc["underflow"] = table.underflow;
    if (table.underflow) doc["underflow_note"] = table.underflow_note;
    if (root) doc["root_test"] = Json{{"M", real_json(root->M)}, {"window", root->window}, {"argmax_k", root->argmax_k}};
    write_text(o.output, dump(doc), out);
  } else {
    if (root) {
      cfg.emplace_back("root_test_M", format_real(root->M));
      cfg.emplace_back("root_test_argmax_k", int_text(root->argmax_k));
    }
    write_text(o.output, csv_document(cfg, [&](std::ostream& s) { write_catalan_csv(s, table, &w); }), out);
  }
  return kOk;
}

int cmd_evaluate(const Options& o, std::ostream& out) {
  if (!(o.z > 0)) throw InputError("--z must be > 0");
  const RateProfile profile = require_profile(o);
  const StepWeights w(profile);
  const EvalResult r = evaluate_f(w, o.z);
  Config cfg = base_config("evaluate", o, profile);
  cfg.emplace_back("z", format_real(o.z));
  cfg.emplace_back("k_max", int_text(o.k_max));
  const CatalanTable table = weighted_catalan_table(w, o.k_max, ArithmeticMode::LogDomain);
  double partial = 0.0;
  for (int k = 0; k <= o.k_max; ++k) partial += std::exp(table.log_values[static_cast<std::size_t>(k)] + k * std::log(o.z));
  Json doc = document_header(cfg, &profile);
  doc["continued_fraction"] = eval_json(r);
  doc["series_partial_sum"] = real_json(partial);
  write_text(o.output, dump(doc), out);
  return r.status == EvalStatus::Inconclusive ? kInconclusive : kOk;
}

int phase_exit(Phase p) {
  switch (p) {
    case Phase::ExpectedCoexistence: return kOk;
    case Phase::NoExpectedCoexistence: return kNoCoexistence;
    case Phase::BoundaryInconclusive: return kInconclusive;
  }
  return kInconclusive;
}

int cmd_phase(const Options& o, std::ostream& out) {
  if (o.d < 2) throw InputError("--d must be >= 2 for the phase test");
  if (!(o.tol > 0)) throw InputError("--tol must be > 0");
  const RateProfile profile = require_profile(o);
  const PhaseVerdict v = classify_phase(profile, o.d, o.tol);
  Config cfg = base_config("phase", o, profile);
  cfg.emplace_back("d", int_text(o.d));
  cfg.emplace_back("tol", format_real(o.tol));
  Json doc = document_header(cfg, &profile);
  doc["phase"] = phase_json(v);
  write_text(o.output, dump(doc), out);
  return phase_exit(v.verdict);
}

int cmd_critical(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.d < 2) throw InputError("--d must be >= 2 for the phase test");
  if (!(o.tol > 0)) throw InputError("--tol must be > 0");
  if (!(o.t_lo >= 0) || !(o.t_hi > o.t_lo)) throw InputError("--t-lo/--t-hi must satisfy 0 <= t-lo < t-hi");
  const RateProfile profile = require_profile(o);
  Config cfg = base_config("critical", o, profile);
  cfg.emplace_back("d", int_text(o.d));
  cfg.emplace_back("tol", format_real(o.tol));
  cfg.emplace_back("t_lo", format_real(o.t_lo));
  cfg.emplace_back("t_hi", format_real(o.t_hi));
  cfg.emplace_back("grid", int_text(o.grid));
  Json doc = document_header(cfg, &profile);
  try {
    doc["critical"] = critical_json(critical_lambda(profile, o.d, o.t_lo, o.t_hi, o.tol, o.grid));
  } catch (const CriticalSearchError& e) {
    doc["error"] = e.what();
    doc["probes"] = critical_probes_json(e.probes());
    write_text(o.output, dump(doc), out);
    err << "chase critical: " << e.what() << '\n';
    return kPrecondition;
  }
  write_text(o.output, dump(doc), out);
  return kOk;
}

int cmd_simulate_line(const Options& o, std::ostream& out) {
  if (o.k_max < 1) throw InputError("--k-max must be >= 1");
  if (o.runs < 1) throw InputError("--runs must be >= 1");
  if (o.max_steps < 1) throw InputError("--max-steps must be >= 1");
  const RateProfile profile = require_profile(o);
  Config cfg = base_config("simulate line", o, profile);
  cfg.emplace_back("k_max", int_text(o.k_max));
  cfg.emplace_back("runs", int_text(o.runs));
  cfg.emplace_back("seed", std::to_string(o.seed));
  cfg.emplace_back("max_steps", int_text(o.max_steps));
  const auto mc = estimate_renewal_frequencies(profile, o.k_max, o.runs, o.seed, o.threads, o.max_steps);
  const auto rows = line_rows(profile, mc, o.k_max);
  if (o.format == "json") {
    Json doc = document_header(cfg, &profile);
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back(Json{{"k", r.k},
                         {"C_k", real_json(r.catalan)},
                         {"P_reach", real_json(r.p_reach)},
                         {"frequency", real_json(r.frequency)},
                         {"stderr", real_json(r.standard_error)},
                         {"N", r.runs}});
    }
    doc["exhausted_runs"] = mc.exhausted;
    doc["rows"] = arr;
    write_text(o.output, dump(doc), out);
  } else {
    cfg.emplace_back("exhausted_runs", int_text(mc.exhausted));
    write_text(o.output, csv_document(cfg, [&](std::ostream& s) { write_line_csv(s, rows); }), out);
  }
  write_manifest(o, cfg, profile, out);
  return kOk;
}

int cmd_simulate_tree(const Options& o, std::ostream& out) {
  if (o.d < 1) throw InputError("--d must be >= 1");
  if (o.depth_cap < 1) throw InputError("--depth-cap must be >= 1");
  if (o.runs < 1) throw InputError("--runs must be >= 1");
  if (o.max_events < 1) throw InputError("--max-events must be >= 1");
  const RateProfile profile = require_profile(o);
  Config cfg = base_config("simulate tree", o, profile);
  cfg.emplace_back("d", int_text(o.d));
  cfg.emplace_back("depth_cap", int_text(o.depth_cap));
  cfg.emplace_back("runs", int_text(o.runs));
  cfg.emplace_back("seed", std::to_string(o.seed));
  cfg.emplace_back("max_events", int_text(o.max_events));
  const auto outcomes = simulate_tree_runs(profile, o.d, o.depth_cap, o.runs, o.seed, o.threads, o.max_events);
  const BlueEstimate est = summarize_blue(outcomes, truncated_blue_series(profile, o.d, o.depth_cap));
  Json summary = document_header(cfg, &profile);
  summary["kind"] = "tree_summary";
  summary["estimate"] = blue_estimate_json(est);
  if (o.format == "json") {
    write_text(o.output, dump(summary), out);
  } else {
    write_text(o.output, csv_document(cfg, [&](std::ostream& s) { write_tree_runs_csv(s, outcomes); }), out);
  }
  if (!o.summary.empty()) write_text(o.summary, dump(summary), out);
  write_manifest(o, cfg, profile, out);
  return kOk;
}

// ---------------------------------------------------------------------------

struct CheckResult {
  std::string name;
  std::string status;  // pass, fail, skipped, flagged
  std::string detail;
};

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.runs < 1000) throw InputError("--runs must be >= 1000 for verify");
  if (o.k_max < 2) throw InputError("--k-max must be >= 2");
  if (o.d < 2) throw InputError("--d must be >= 2");
  const RateProfile profile = require_profile(o);
  const StepWeights w(profile);
  std::vector<CheckResult> checks;
  auto detail = [](std::initializer_list<std::pair<const char*, std::string>> kv) {
    std::string s;
    for (const auto& [k, v] : kv) s += (s.empty() ? "" : " ") + std::string(k) + "=" + v;
    return s;
  };

  const HypothesisReport hyp = check_hypotheses(profile);
  {
    std::string note;
    if (!hyp.growth.consistent) note += "product growth: " + hyp.growth.note;
    if (!hyp.decay.consistent) note += std::string(note.empty() ? "" : "; ") + "weight decay: " + hyp.decay.note;
    checks.push_back({"hypotheses", hyp.consistent() ? "pass" : "flagged",
                      hyp.consistent() ? detail({{"c", format_real(hyp.growth.c)}, {"m", format_real(hyp.growth.m)}})
                                       : note});
  }

  {
    const int k = std::min(8, o.k_max);
    const auto table = weighted_catalan_table(w, k, ArithmeticMode::Exact);
    int bad = -1;
    for (int i = 0; i <= k && bad < 0; ++i) {
      if (weighted_catalan_by_enumeration(w, i) != table.exact[static_cast<std::size_t>(i)]) bad = i;
    }
    checks.push_back({"catalan_enumeration", bad < 0 ? "pass" : "fail",
                      bad < 0 ? "exact match for k <= " + int_text(k) : "mismatch at k = " + int_text(bad)});
  }

  {
    const int k = std::min(8, o.k_max);
    const auto reach = reach_table(profile, k);
    double worst = 0.0;
    for (int i = 1; i <= k; ++i) {
      const double dp = reach.p_reach[static_cast<std::size_t>(i)];
      const double lin = reach_probability_linear_solve(profile, i);
      const double scale = std::max(std::abs(lin), 1e-300);
      worst = std::max(worst, std::abs(dp - lin) / scale);
    }
    checks.push_back({"reach_oracle", worst <= 1e-10 ? "pass" : "fail",
                      detail({{"k_max", int_text(k)}, {"max_relative_error", format_real(worst)}})});
  }

  {
    const int k = std::min(6, o.k_max);
    const auto mc = estimate_renewal_frequencies(profile, k, o.runs, o.seed, o.threads);
    const auto cat = weighted_catalan_table(w, k);
    double worst = 0.0;
    for (int i = 1; i <= k; ++i) {
      worst = std::max(worst, std::abs(mc.z_score(i, cat.values[static_cast<std::size_t>(i)])));
    }
    checks.push_back({"renewal_monte_carlo", worst <= 3.0 ? "pass" : "fail",
                      detail({{"k_max", int_text(k)}, {"runs", int_text(o.runs)}, {"max_z", format_real(worst)}})});
  }

  if (!hyp.consistent()) {
    checks.push_back({"reach_bound", "skipped", "rate hypotheses flagged; the polynomial bound is not expected to apply"});
  } else {
    const ReachBoundReport rep = reach_bound_check(profile, o.k_max, hyp.growth.c, hyp.growth.m, true);
    double worst = 0.0;
    for (const auto& r : rep.rows) {
      if (r.k >= 2) worst = std::max(worst, r.ratio);
    }
    const bool ok = rep.upper_holds && rep.lower_holds && rep.sandwich_holds;
    checks.push_back({"reach_bound", ok ? "pass" : "fail",
                      detail({{"c0", format_real(rep.c0)},
                              {"max_ratio", format_real(worst)},
                              {"upper", rep.upper_holds ? "1" : "0"},
                              {"lower", rep.lower_holds ? "1" : "0"},
                              {"sandwich", rep.sandwich_holds ? "1" : "0"}})});
  }

  {
    const PhaseVerdict v = classify_phase(profile, o.d);
    if (v.verdict != Phase::NoExpectedCoexistence) {
      checks.push_back({"tree_series", "skipped",
                        "phase at d = " + int_text(o.d) + " is " + std::string(to_string(v.verdict)) +
                            "; the blue-count series is not expected to converge"});
    } else {
      const std::int64_t runs = std::max<std::int64_t>(1000, o.runs / 10);
      const BlueEstimate est = expected_B_estimate(profile, o.d, o.depth_cap, runs, o.seed, o.threads);
      const double z = est.standard_error > 0 ? std::abs(est.gap) / est.standard_error : (est.gap == 0 ? 0.0 : 1e300);
      checks.push_back({"tree_series", z <= 3.0 && est.exhausted_runs == 0 ? "pass" : "fail",
                        detail({{"d", int_text(o.d)},
                                {"depth_cap", int_text(o.depth_cap)},
                                {"runs", int_text(runs)},
                                {"mean", format_real(est.mean)},
                                {"series", format_real(est.series)},
                                {"z", format_real(z)}})});
    }
  }

  Config cfg = base_config("verify", o, profile);
  cfg.emplace_back("k_max", int_text(o.k_max));
  cfg.emplace_back("runs", int_text(o.runs));
  cfg.emplace_back("seed", std::to_string(o.seed));
  cfg.emplace_back("d", int_text(o.d));
  cfg.emplace_back("depth_cap", int_text(o.depth_cap));
  const bool failed = std::any_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == "fail"; });
  if (o.format == "json") {
    Json doc = document_header(cfg, &profile);
    Json arr = Json::array();
    for (const auto& c : checks) arr.push_back(Json{{"check", c.name}, {"status", c.status}, {"detail", c.detail}});
    doc["checks"] = arr;
    doc["passed"] = !failed;
    write_text(o.output, dump(doc), out);
  } else {
    write_text(o.output, csv_document(cfg, [&](std::ostream& s) {
                 s << "check,status,detail\n";
                 for (const auto& c : checks) s << c.name << ',' << c.status << ",\"" << c.detail << "\"\n";
               }),
               out);
  }
  return failed ? kCheckFailed : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Distance-dependent chase-escape: weighted Catalan numbers, phase test and simulators", "chase"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);

  auto add_profile = [&](CLI::App* c) { c->add_option("--profile", o.profile_path, "Rate profile (JSON)")->required(); };
  auto add_format = [&](CLI::App* c, const std::string& def) {
    o.format = def;
    const std::vector<std::string> allowed = def == "json" ? std::vector<std::string>{"json"}
                                                           : std::vector<std::string>{"csv", "json"};
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed))->capture_default_str();
  };
  auto add_output = [&](CLI::App* c) { c->add_option("--output,-o", o.output, "Output file (default: stdout)"); };
  auto add_threads = [&](CLI::App* c) {
    c->add_option("--threads", o.threads, "Worker threads; output does not depend on it")->check(CLI::PositiveNumber);
  };

  auto* weights = app.add_subcommand("weights", "Step weights u, v, a and cumulative death D_j");
  add_profile(weights);
  weights->add_option("--j-max", o.j_max, "Largest j")->capture_default_str();
  add_output(weights);

  auto* catalan = app.add_subcommand("catalan", "Weighted Catalan numbers and root-test diagnostics");
  add_profile(catalan);
  catalan->add_option("--k-max", o.k_max, "Largest k")->capture_default_str();
  catalan->add_option("--mode", o.mode, "Arithmetic: exact, floating or log")->capture_default_str();
  catalan->add_option("--window", o.window, "Root-test window (default: k-max/5)");
  add_output(catalan);

  auto* evaluate = app.add_subcommand("evaluate", "Continued-fraction value of the generating function at z");
  add_profile(evaluate);
  evaluate->add_option("--z", o.z, "Evaluation point")->required();
  evaluate->add_option("--k-max", o.k_max, "Terms in the comparison partial sum")->capture_default_str();
  add_output(evaluate);

  auto* phase = app.add_subcommand("phase", "Expected-coexistence verdict on the d-ary tree");
  add_profile(phase);
  phase->add_option("--d", o.d, "Branching number")->required();
  phase->add_option("--tol", o.tol, "Radius bracket width")->capture_default_str();
  add_output(phase);

  auto* critical = app.add_subcommand("critical", "Scale t* of lambda at which the phase flips");
  add_profile(critical);
  critical->add_option("--d", o.d, "Branching number")->required();
  critical->add_option("--tol", o.tol, "Bracket width for t*")->capture_default_str();
  critical->add_option("--t-lo", o.t_lo, "Smallest scale")->capture_default_str();
  critical->add_option("--t-hi", o.t_hi, "Largest scale")->capture_default_str();
  critical->add_option("--grid", o.grid, "Monotonicity probes")->capture_default_str();
  add_output(critical);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo on the half-line or the truncated tree");
  simulate->require_subcommand(1);
  auto* line = simulate->add_subcommand("line", "Renewal frequencies of the gap chain");
  add_profile(line);
  line->add_option("--k-max", o.k_max, "Largest renewal index")->capture_default_str();
  line->add_option("--runs", o.runs, "Independent runs")->capture_default_str();
  line->add_option("--seed", o.seed, "Master seed")->capture_default_str();
  line->add_option("--max-steps", o.max_steps, "Step limit per run")->capture_default_str();
  line->add_option("--manifest", o.manifest, "Also write a run manifest (JSON)");
  add_threads(line);
  add_output(line);
  auto* tree = simulate->add_subcommand("tree", "Blue counts on the depth-truncated d-ary tree");
  add_profile(tree);
  tree->add_option("--d", o.d, "Branching number")->capture_default_str();
  tree->add_option("--depth-cap", o.depth_cap, "Deepest instantiated level")->capture_default_str();
  tree->add_option("--runs", o.runs, "Independent runs")->capture_default_str();
  tree->add_option("--seed", o.seed, "Master seed")->capture_default_str();
  tree->add_option("--max-events", o.max_events, "Event limit per run")->capture_default_str();
  tree->add_option("--summary", o.summary, "Also write the aggregate summary (JSON)");
  tree->add_option("--manifest", o.manifest, "Also write a run manifest (JSON)");
  add_threads(tree);
  add_output(tree);

  auto* verify = app.add_subcommand("verify", "Run the consistency checks on one profile");
  add_profile(verify);
  verify->add_option("--k-max", o.k_max, "Largest k for the bound check")->capture_default_str();
  verify->add_option("--runs", o.runs, "Monte Carlo budget")->capture_default_str();
  verify->add_option("--seed", o.seed, "Master seed")->capture_default_str();
  verify->add_option("--d", o.d, "Branching number for the tree check")->capture_default_str();
  verify->add_option("--depth-cap", o.depth_cap, "Depth cap for the tree check")->capture_default_str();
  add_threads(verify);
  add_output(verify);

  // One --format option per subcommand; defaults differ.
  for (auto* c : {weights, catalan, line, tree, verify}) add_format(c, "csv");
  for (auto* c : {evaluate, phase, critical}) add_format(c, "json");
  o.format.clear();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }
  if (o.format.empty()) o.format = (phase->parsed() || critical->parsed() || evaluate->parsed()) ? "json" : "csv";

  try {
    if (weights->parsed()) return cmd_weights(o, out);
    if (catalan->parsed()) return cmd_catalan(o, out);
    if (evaluate->parsed()) return cmd_evaluate(o, out);
    if (phase->parsed()) return cmd_phase(o, out);
    if (critical->parsed()) return cmd_critical(o, out, err);
    if (line->parsed()) return cmd_simulate_line(o, out);
    if (tree->parsed()) return cmd_simulate_tree(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const ProfileError& e) {
    err << "chase: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "chase: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "chase: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace chase::cli

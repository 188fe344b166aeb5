#include <cmath>

#include "doctest.h"

#include "chase/catalan.hpp"
#include "chase/contfrac.hpp"
#include "chase/profile_io.hpp"

using namespace chase;

namespace {

RateProfile mixed() {
  return parse_profile(R"({"lambda": {"head": [2, 1], "tail": 0.5}, "rho": {"head": [0.3], "tail": 1}})");
}

}  // namespace

TEST_CASE("approximant recursion") {
  ApproximantState s;
  CHECK(s.value() == 1.0);
  s.advance(0.25);  // 1 / (1 - 1/4)
  CHECK(s.value() == doctest::Approx(4.0 / 3.0));
  s.advance(0.25);  // 1 / (1 - 1/4 / (1 - 1/4))
  CHECK(s.value() == doctest::Approx(1.0 / (1.0 - 0.25 / 0.75)));
  CHECK(s.depth == 2);

  SUBCASE("joint rescaling keeps the ratio") {
    ApproximantState big;
    ApproximantState ref;
    for (int i = 0; i < 3000; ++i) {
      big.advance(-1e3);  // wild magnitudes
      ref.advance(-1e3);
      REQUIRE(std::isfinite(big.a_curr));
      REQUIRE(std::isfinite(big.b_curr));
    }
    CHECK(std::abs(big.b_curr) < std::ldexp(1.0, 600));
    CHECK(big.value() == doctest::Approx(ref.value()));
  }
}

TEST_CASE("tail index") {
  CHECK(tail_index(StepWeights(RateProfile::constant(1, 1)), 10.0).has_value());
  const auto j = *tail_index(StepWeights(RateProfile::constant(1, 1)), 10.0);
  const StepWeights unit(RateProfile::constant(1, 1));
  CHECK(unit.a(j) * 10.0 <= 0.25);
  if (j > 0) CHECK(unit.a(j - 1) * 10.0 > 0.25);
  CHECK(tail_index(StepWeights(RateProfile::constant(1, 0)), 1.0) == 0);
  CHECK_FALSE(tail_index(StepWeights(RateProfile::constant(1, 0)), 2.0).has_value());
  CHECK_THROWS_AS(tail_index(unit, 0.0), std::invalid_argument);
}

TEST_CASE("evaluation against the closed form for constant quarter weights") {
  const StepWeights w(RateProfile::constant(1, 0));
  const auto r = evaluate_f(w, 0.5);
  REQUIRE(r.status == EvalStatus::Converged);
  CHECK(r.value == doctest::Approx(2.0 / (1.0 + std::sqrt(0.5))).epsilon(1e-12));
  CHECK(r.value == doctest::Approx(1.171572875).epsilon(1e-9));
  const auto tiny = evaluate_f(StepWeights(mixed()), 1e-12);
  CHECK(tiny.status == EvalStatus::Converged);
  CHECK(tiny.value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(evaluate_f(w, 1.5).status == EvalStatus::Diverged);
  CHECK(evaluate_f(w, 0.99).status == EvalStatus::Converged);
  CHECK_THROWS_AS(evaluate_f(w, -1.0), std::invalid_argument);
}

TEST_CASE("terminating fractions") {
  const auto p = parse_profile(R"({"lambda": {"head": [1, 1], "tail": 0}, "rho": {"head": [], "tail": 0}})");
  const StepWeights w(p);
  const auto r = evaluate_f(w, 1.0);
  REQUIRE(r.status == EvalStatus::Converged);
  CHECK(r.value == doctest::Approx((1 - 0.5) / (1 - 0.75)));
  const auto m = estimate_M(w, 1e-10);
  CHECK_FALSE(m.infinite);
  CHECK(m.point() == doctest::Approx(4.0 / 3.0).epsilon(1e-9));
  const auto none = estimate_M(StepWeights(RateProfile::constant(0, 1)), 1e-9);
  CHECK(none.infinite);
  CHECK(std::isinf(none.point()));
}

TEST_CASE("series agreement inside the disk") {
  for (const auto& p : {RateProfile::constant(1, 0), RateProfile::constant(1, 1), mixed()}) {
    const StepWeights w(p);
    const auto m = estimate_M(w, 1e-9);
    const double z = 0.5 * m.point();
    const auto t = weighted_catalan_table(w, 200);
    double sum = 0.0;
    for (int k = 0; k <= 200; ++k) sum += t.values[static_cast<std::size_t>(k)] * std::pow(z, k);
    const auto r = evaluate_f(w, z);
    REQUIRE(r.status == EvalStatus::Converged);
    CHECK(std::abs(r.value - sum) <= 1e-9);
  }
}

TEST_CASE("approximant differences contract past the tail index") {
  const StepWeights w(mixed());
  const double z = 0.5 * estimate_M(w, 1e-9).point();
  const auto j = tail_index(w, z).value();
  ApproximantState s;
  std::vector<double> f;
  for (std::int64_t n = 1; n <= j + 60; ++n) {
    s.advance(w.a(n - 1) * z);
    f.push_back(s.value());
  }
  for (std::size_t n = static_cast<std::size_t>(j) + 5; n + 2 < f.size(); ++n) {
    const double d1 = std::abs(f[n + 1] - f[n]);
    const double d2 = std::abs(f[n + 2] - f[n + 1]);
    if (d1 < 1e-15) break;
    REQUIRE(d2 <= d1);
  }
}

TEST_CASE("radius estimates") {
  const auto m1 = estimate_M(StepWeights(RateProfile::constant(1, 0)), 1e-9);
  CHECK(std::abs(m1.point() - 1.0) <= 1e-9);
  CHECK(m1.width() <= 1e-9);
  const auto m2 = estimate_M(StepWeights(RateProfile::constant(0.1716, 0)), 1e-9);
  CHECK(m2.point() == doctest::Approx(1.1716 * 1.1716 / (4 * 0.1716)).epsilon(1e-9));
  for (const auto& p : {RateProfile::constant(1, 0), RateProfile::constant(1, 1), mixed()}) {
    const auto m = estimate_M(StepWeights(p), 1e-9);
    REQUIRE(m.root_test.has_value());
    CHECK(m.root_test_agrees);
  }
}

TEST_CASE("phase verdicts") {
  CHECK(classify_phase(RateProfile::constant(1, 0), 2).verdict == Phase::ExpectedCoexistence);
  const auto sub = classify_phase(RateProfile::constant(0.05, 0), 2);
  CHECK(sub.verdict == Phase::NoExpectedCoexistence);
  CHECK(sub.M.point() == doctest::Approx(5.5125).epsilon(1e-9));
  CHECK(classify_phase(RateProfile::constant(0, 0.3), 2).verdict == Phase::NoExpectedCoexistence);
  CHECK_THROWS_AS(classify_phase(RateProfile::constant(1, 0), 1), std::invalid_argument);

  // lambda at the d = 2 boundary: M = 2 up to rounding
  const double crit = 3 - 2 * std::sqrt(2.0);
  CHECK(classify_phase(RateProfile::constant(crit, 0), 2, 1e-6).verdict == Phase::BoundaryInconclusive);

  // verdicts carry warnings when hypotheses fail
  CHECK_FALSE(classify_phase(RateProfile::constant(1, 0), 2).warnings.empty());
}

TEST_CASE("phase is invariant under head extension by tail values") {
  const auto a = mixed();
  const auto b = parse_profile(R"({"lambda": {"head": [2, 1, 0.5, 0.5, 0.5], "tail": 0.5},
                                   "rho": {"head": [0.3, 1, 1, 1], "tail": 1}})");
  for (int d : {2, 3, 5, 8}) {
    const auto va = classify_phase(a, d);
    const auto vb = classify_phase(b, d);
    CHECK(va.verdict == vb.verdict);
    CHECK(va.M.point() == doctest::Approx(vb.M.point()).epsilon(1e-8));
  }
}

TEST_CASE("critical scale for rho = 0") {
  const auto base = RateProfile::constant(1, 0);
  const auto c2 = critical_lambda(base, 2, 0.0, 1.0, 1e-9);
  CHECK(std::abs(c2.t_star - (3 - 2 * std::sqrt(2.0))) <= 1e-6);
  CHECK_FALSE(c2.coexists_below);
  const auto c3 = critical_lambda(base, 3, 0.0, 1.0, 1e-9);
  CHECK(std::abs(c3.t_star - (5 - 2 * std::sqrt(6.0))) <= 1e-6);
  CHECK_THROWS_AS(critical_lambda(base, 1, 0.0, 1.0, 1e-9), std::invalid_argument);
  try {
    critical_lambda(base, 2, 0.5, 1.0, 1e-9);
    FAIL("expected a search error");
  } catch (const CriticalSearchError& e) {
    CHECK(e.probes().size() >= 2);
  }
}

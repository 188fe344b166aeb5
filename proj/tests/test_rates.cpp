#include <cmath>

#include "doctest.h"

#include "chase/profile_io.hpp"
#include "chase/rates.hpp"

using namespace chase;

namespace {

RateProfile profile(const std::string& lambda, const std::string& rho) {
  return parse_profile(R"({"lambda": )" + lambda + R"(, "rho": )" + rho + "}");
}

}  // namespace

TEST_CASE("rate lookup falls back to the tail") {
  const RateSequence tail_only({}, Rational(1));
  CHECK(tail_only.at(7) == 1.0);
  const RateSequence s({Rational(1, 2), Rational(3, 2)}, Rational(2));
  CHECK(s.at(2) == 1.5);
  CHECK(s.at(3) == 2.0);
  CHECK(s.at<Rational>(1) == Rational(1, 2));
  CHECK_THROWS_AS(s.at(0), std::out_of_range);
  CHECK_THROWS_AS(RateSequence({Rational(-1)}, Rational(0)), std::invalid_argument);
}

TEST_CASE("cumulative death") {
  CHECK(RateProfile::constant(1, 0).cumulative_death(10) == 0.0);
  const auto p = profile(R"({"head": [], "tail": 1})", R"({"head": [], "tail": 0.3})");
  CHECK(p.cumulative_death<Rational>(4) == Rational(6, 5));
  const auto q = profile(R"({"head": [], "tail": 1})", R"({"head": [0.5, 1.5], "tail": 2.0})");
  CHECK(q.cumulative_death(3) == 4.0);
  CHECK(q.cumulative_death(0) == 0.0);

  SUBCASE("closed form equals naive summation") {
    const auto r = profile(R"({"head": [1], "tail": 1})", R"({"head": [0.3, 0.1, 2.5], "tail": 0.7})");
    Rational naive(0);
    double naive_d = 0.0;
    for (int j = 1; j <= 10000; ++j) {
      naive += r.rate<Rational>(RateKind::Rho, j);
      naive_d += r.rate(RateKind::Rho, j);
      if (j % 997 == 0 || j < 10) {
        REQUIRE(r.cumulative_death<Rational>(j) == naive);
        REQUIRE(r.cumulative_death<Rational>(j) - r.cumulative_death<Rational>(j - 1) == r.rate<Rational>(RateKind::Rho, j));
      }
    }
    CHECK(r.cumulative_death<Rational>(10000) == naive);
    CHECK(std::abs(r.cumulative_death(10000) - naive_d) <= 1e-12 * naive_d);
  }
}

TEST_CASE("step weights by hand") {
  const StepWeights flat(RateProfile::constant(1, 0));
  CHECK(flat.u(5) == 0.5);
  CHECK(flat.v(5) == 0.5);
  CHECK(flat.a(5) == 0.25);

  const StepWeights inert(RateProfile::constant(0, 2));
  CHECK(inert.u(0) == 0.0);
  CHECK(inert.a(0) == 0.0);

  const StepWeights unit(RateProfile::constant(1, 1));
  CHECK(unit.u<Rational>(0) == Rational(1, 3));
  CHECK(unit.v<Rational>(0) == Rational(1, 4));
  CHECK(unit.a<Rational>(0) == Rational(1, 12));
  CHECK(unit.v<Rational>(-1) == Rational(1, 3));

  CHECK_THROWS_AS(step_weights(RateProfile::constant(1, 1), -1), std::out_of_range);
  CHECK_THROWS_AS(unit.u(-1), std::out_of_range);
  CHECK_NOTHROW(unit.v(-1));
  CHECK_THROWS_AS(unit.v(-2), std::out_of_range);
}

TEST_CASE("step weight identities and monotonicity") {
  const auto p = profile(R"({"head": [2, 0, 1], "tail": 0.5})", R"({"head": [0.3], "tail": 1})");
  const StepWeights w(p);
  for (int j = 0; j < 40; ++j) {
    const double u = w.u(j);
    const double v = w.v(j);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(v > 0.0);
    CHECK(v <= 1.0);
    const Rational lam = p.rate<Rational>(RateKind::Lambda, j + 1);
    if (lam > 0) CHECK(w.u<Rational>(j) / lam == w.v<Rational>(j - 1));
  }
  // raising an early death rate lowers every later rise weight with lambda > 0
  const auto more_death = profile(R"({"head": [2, 0, 1], "tail": 0.5})", R"({"head": [0.8], "tail": 1})");
  const StepWeights w2(more_death);
  for (int j = 0; j < 20; ++j) {
    if (p.rate(RateKind::Lambda, j + 1) > 0) CHECK(w2.u(j) < w.u(j));
  }
}

TEST_CASE("profile fingerprints and scaling") {
  const auto a = profile(R"({"head": [1], "tail": 1})", R"({"head": [], "tail": 0})");
  const auto b = RateProfile::constant(1, 0);
  CHECK(a.fingerprint() != b.fingerprint());  // representation differs (head entry)
  CHECK(a.fingerprint() == profile(R"({"head": [1], "tail": 1})", R"({"head": [], "tail": 0})").fingerprint());
  const auto s = b.with_lambda_scaled(Rational(1, 4));
  CHECK(s.rate<Rational>(RateKind::Lambda, 9) == Rational(1, 4));
  CHECK(s.rho().tail() == 0);
}

TEST_CASE("hypothesis checks") {
  SUBCASE("lambda = 1, rho = 1: polynomial products, decaying weights") {
    const auto h = check_hypotheses(RateProfile::constant(1, 1));
    CHECK(h.growth.consistent);
    CHECK(h.decay.consistent);
    CHECK(h.tail_regime_holds);
    // prod_{i=3}^{l-2} (i+2)/(i+1) = l/4
    for (const auto& [ell, prod] : h.growth.products) {
      REQUIRE(prod == doctest::Approx(ell / 4.0).epsilon(1e-12));
    }
    CHECK(h.growth.m == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(h.growth.c == doctest::Approx(0.25).epsilon(1e-9));
    for (const auto& [ell, prod] : h.growth.products) {
      REQUIRE(prod <= h.growth.c * std::pow(double(ell), h.growth.m) * (1 + 1e-12));
    }
  }
  SUBCASE("lambda = 0: unit products, zero weights") {
    const auto h = check_hypotheses(RateProfile::constant(0, 0.5));
    for (const auto& [ell, prod] : h.growth.products) REQUIRE(prod == 1.0);
    CHECK(h.growth.c == 1.0);
    CHECK(h.growth.m == 0.0);
    for (double a : h.decay.a) REQUIRE(a == 0.0);
    CHECK(h.consistent());
  }
  SUBCASE("lambda = 1, rho = 0: weights stay at 1/4") {
    const auto h = check_hypotheses(RateProfile::constant(1, 0));
    CHECK_FALSE(h.decay.consistent);
    REQUIRE(h.decay.violated_at.has_value());
    CHECK_FALSE(h.growth.consistent);
    CHECK_FALSE(h.tail_regime_holds);
    for (double a : h.decay.a) REQUIRE(a == 0.25);
  }
  CHECK_THROWS_AS(check_hypotheses(RateProfile::constant(1, 1), 4), std::invalid_argument);
}

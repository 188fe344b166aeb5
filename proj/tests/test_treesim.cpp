#include <cmath>

#include "doctest.h"
#include "oracles.hpp"

#include "chase/jumpchain.hpp"
#include "chase/profile_io.hpp"
#include "chase/treesim.hpp"

using namespace chase;

namespace {

RateProfile mixed() {
  return parse_profile(R"({"lambda": {"head": [2, 1], "tail": 0.5}, "rho": {"head": [0.3], "tail": 1}})");
}

// Full consistency sweep of a simulator state against definitions.
void check_state(const TreeSimulator& sim, const RateProfile& p) {
  const auto& s = sim.state();
  std::int64_t blue = 0;
  for (VertexId v = 0; v < static_cast<VertexId>(s.size()); ++v) {
    const SiteState st = s.state(v);
    if (st == SiteState::Blue) ++blue;
    if (v > 0 && st == SiteState::Blue) REQUIRE(s.state(s.parent(v)) == SiteState::Blue);  // connected
    if (v > 0) REQUIRE(s.depth(v) == s.depth(s.parent(v)) + 1);
    REQUIRE(s.depth(v) <= s.depth_cap());
    REQUIRE(s.spawned_children(v) <= (v == 0 ? 1 : s.d()));
    if (st == SiteState::Red) {
      REQUIRE(nearest_blue_distance(s, v) == nearest_blue_distance_by_walk(s, v));
      const auto r = sim.rates(v);
      if (s.frozen(v)) {
        REQUIRE(r.capture + r.spread + r.death == 0.0);
      } else {
        const int ell = nearest_blue_distance(s, v);
        REQUIRE(r.capture == (s.state(s.parent(v)) == SiteState::Blue ? 1.0 : 0.0));
        REQUIRE(r.death == p.rate(RateKind::Rho, ell));
        const double white = s.depth(v) < s.depth_cap() ? s.d() - s.spawned_children(v) : 0;
        REQUIRE(r.spread == white * p.rate(RateKind::Lambda, ell));
      }
    } else {
      const auto r = sim.rates(v);
      REQUIRE(r.capture + r.spread + r.death == 0.0);
    }
  }
  REQUIRE(blue == sim.blue_count());
}

}  // namespace

TEST_CASE("initial configuration") {
  TreeSimulator sim(mixed(), 3, 5, 1);
  const auto& s = sim.state();
  CHECK(s.size() == 2);
  CHECK(s.state(0) == SiteState::Blue);
  CHECK(s.state(1) == SiteState::Red);
  CHECK(nearest_blue_distance(s, 1) == 1);
  CHECK(sim.total_rate() == doctest::Approx(1.0 + 3 * 2.0 + 0.3));
  CHECK_THROWS_AS(TreeSimulator(mixed(), 0, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(TreeSimulator(mixed(), 2, 0, 1), std::invalid_argument);
}

TEST_CASE("no spreading, no death: exactly two blue vertices") {
  for (int d : {1, 2, 5}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto o = simulate_tree(RateProfile::constant(0, 0), d, 8, seed);
      REQUIRE(o.blue_count == 2);
      REQUIRE(o.events == 1);
      REQUIRE_FALSE(o.exhausted);
    }
  }
  CHECK(truncated_blue_series(RateProfile::constant(0, 0), 3, 10) == 2.0);
}

TEST_CASE("event log replay") {
  const auto p = mixed();
  TreeSimulator sim(p, 2, 14, 2024);
  std::vector<SiteState> before;
  int replayed = 0;
  std::uint64_t seed = 2024;
  while (replayed < 10000) {
    before.clear();
    for (VertexId v = 0; v < static_cast<VertexId>(sim.state().size()); ++v) before.push_back(sim.state().state(v));
    const auto parent_state = [&](VertexId v) { return before[static_cast<std::size_t>(sim.state().parent(v))]; };
    if (!sim.step()) {
      sim.reset(++seed);
      continue;
    }
    ++replayed;
    const TreeEvent e = *sim.last_event();
    switch (e.kind) {
      case TreeEventKind::Capture:
        REQUIRE(before[static_cast<std::size_t>(e.vertex)] == SiteState::Red);
        REQUIRE(parent_state(e.vertex) == SiteState::Blue);
        REQUIRE(sim.state().state(e.vertex) == SiteState::Blue);
        break;
      case TreeEventKind::Spread:
        REQUIRE(static_cast<std::size_t>(e.vertex) == before.size());  // newly instantiated white vertex
        REQUIRE(sim.state().parent(e.vertex) == e.source);
        REQUIRE(before[static_cast<std::size_t>(e.source)] == SiteState::Red);
        REQUIRE(sim.state().state(e.vertex) == SiteState::Red);
        break;
      case TreeEventKind::Death:
        REQUIRE(before[static_cast<std::size_t>(e.vertex)] == SiteState::Red);
        REQUIRE(sim.state().state(e.vertex) == SiteState::Dead);
        break;
    }
    // blue and dead are absorbing
    for (std::size_t v = 0; v < before.size(); ++v) {
      if (before[v] == SiteState::Blue || before[v] == SiteState::Dead) {
        REQUIRE(sim.state().state(static_cast<VertexId>(v)) == before[v]);
      }
    }
    check_state(sim, p);
  }
}

TEST_CASE("after blue takes the root its red children are at distance 1") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    TreeSimulator sim(RateProfile::constant(1.5, 0.2), 3, 6, seed);
    while (sim.step() && sim.state().state(1) != SiteState::Blue) {
    }
    if (sim.state().state(1) != SiteState::Blue) continue;
    for (VertexId c : sim.state().children(1)) {
      if (sim.state().state(c) == SiteState::Red) REQUIRE(nearest_blue_distance(sim.state(), c) == 1);
    }
  }
}

TEST_CASE("determinism and thread independence") {
  const auto a = simulate_tree_runs(mixed(), 2, 10, 300, 99, 1);
  const auto b = simulate_tree_runs(mixed(), 2, 10, 300, 99, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].seed == derive_seed(99, i));
    REQUIRE(a[i].blue_count == b[i].blue_count);
    REQUIRE(a[i].events == b[i].events);
    REQUIRE(a[i].per_depth_blue == b[i].per_depth_blue);
  }
  const auto single = simulate_tree(mixed(), 2, 10, derive_seed(99, 7));
  CHECK(single.blue_count == a[7].blue_count);
  CHECK(single.sim_time == a[7].sim_time);
}

TEST_CASE("event limit is flagged") {
  const auto o = simulate_tree(RateProfile::constant(2, 0), 3, 12, 5, 50);
  CHECK(o.exhausted);
  CHECK(o.events == 50);
  CHECK(o.blue_count >= 1);
}

TEST_CASE("outcome bookkeeping") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto o = simulate_tree(mixed(), 2, 8, seed);
    std::int64_t sum = 0;
    for (auto c : o.per_depth_blue) sum += c;
    REQUIRE(sum == o.blue_count);
    REQUIRE(o.per_depth_blue[0] == 1);
    REQUIRE(o.reached_cap == (o.per_depth_blue[8] > 0));
    REQUIRE(o.max_blue_depth <= 8);
  }
}

TEST_CASE("series against simulation and the line") {
  SUBCASE("d = 1 reduces to the half-line reach probabilities") {
    const auto p = mixed();
    const auto reach = reach_table(p, 8);
    const auto runs = simulate_tree_runs(p, 1, 7, 40000, 3);
    std::vector<double> observed(8, 0.0), expected(8, 0.0);
    for (const auto& o : runs) observed[static_cast<std::size_t>(o.max_blue_depth)] += 1;
    for (int k = 0; k < 7; ++k) expected[static_cast<std::size_t>(k)] = reach.p_equal(k) * 40000;
    expected[7] = reach.p_reach[7] * 40000;
    CHECK(oracle::chi_square_p_value(observed, expected) > 1e-3);
  }
  SUBCASE("series identity at d = 2") {
    const auto est = expected_B_estimate(mixed(), 2, 10, 20000, 8);
    CHECK(std::abs(est.gap) <= 4 * est.standard_error);
    CHECK(est.series == doctest::Approx(truncated_blue_series(mixed(), 2, 10)));
  }
  SUBCASE("series closed form at d = 1") {
    const auto p = RateProfile::constant(1, 1);
    const auto reach = reach_table(p, 6);
    double s = 1.0;
    for (int n = 1; n <= 6; ++n) s += reach.p_reach[static_cast<std::size_t>(n)];
    CHECK(truncated_blue_series(p, 1, 6) == doctest::Approx(s));
  }
}

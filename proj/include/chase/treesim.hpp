#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "chase/random.hpp"
#include "chase/rates.hpp"

namespace chase {

enum class SiteState : std::uint8_t { White, Blue, Red, Dead };

using VertexId = std::int32_t;
inline constexpr VertexId kNoVertex = -1;

/// Instantiated part of the depth-truncated d-ary tree. Vertex 0 is the extra
/// blue vertex at depth 0 and vertex 1 the tree root at depth 1; every other
/// vertex is created white-to-red by a spread from its parent, so uncreated
/// vertices are white.
class TreeState {
 public:
  TreeState(int d, int depth_cap);

  int d() const noexcept { return d_; }
  int depth_cap() const noexcept { return depth_cap_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  SiteState state(VertexId v) const { return nodes_.at(index(v)).state; }
  int depth(VertexId v) const { return nodes_.at(index(v)).depth; }
  VertexId parent(VertexId v) const { return nodes_.at(index(v)).parent; }
  // Depth of the deepest blue vertex on the path from vertex 0 to v (cached).
  int blue_depth(VertexId v) const { return nodes_.at(index(v)).blue_depth; }
  int spawned_children(VertexId v) const { return nodes_.at(index(v)).spawned; }
  std::vector<VertexId> children(VertexId v) const;
  // Red vertex whose parent has died or has a dead ancestor; it can never turn blue.
  bool frozen(VertexId v) const { return nodes_.at(index(v)).frozen; }

 private:
  friend class TreeSimulator;

  struct Node {
    SiteState state = SiteState::White;
    bool frozen = false;
    int depth = 0;
    int blue_depth = 0;
    int spawned = 0;
    VertexId parent = kNoVertex;
    VertexId first_child = kNoVertex;
    VertexId next_sibling = kNoVertex;
  };

  static std::size_t index(VertexId v) { return static_cast<std::size_t>(v); }
  void reset();

  int d_;
  int depth_cap_;
  std::vector<Node> nodes_;
};

// depth(u) - depth of the deepest blue ancestor, from the cache.
int nearest_blue_distance(const TreeState& state, VertexId u);
// Same quantity by walking the path up to vertex 0.
int nearest_blue_distance_by_walk(const TreeState& state, VertexId u);

enum class TreeEventKind : std::uint8_t {
  Capture,  // red vertex turns blue (its parent is blue)
  Spread,   // a white child of a red vertex turns red
  Death,    // red vertex turns dead
};

struct TreeEvent {
  TreeEventKind kind;
  VertexId vertex;  // the vertex whose state changed
  VertexId source;  // the parent that caused it (capture, spread) or the vertex itself (death)
  double time;
};

/// Per-run summary. blue_count includes the extra blue vertex at depth 0.
struct SimOutcome {
  std::int64_t blue_count = 1;
  bool reached_cap = false;
  std::vector<std::int64_t> per_depth_blue;  // index 0..depth_cap
  int max_blue_depth = 0;
  std::int64_t events = 0;
  double sim_time = 0.0;
  double wall_time = 0.0;  // seconds; not part of any deterministic output
  std::uint64_t seed = 0;
  bool exhausted = false;  // stopped by max_events with transitions still active
};

inline constexpr std::int64_t kDefaultMaxEvents = 100'000'000;

/// Gillespie simulation of the chase-escape dynamics on the truncated tree.
///
/// Each live red vertex u carries three rates: 1 for capture when its parent
/// is blue, lambda_l times its number of white children for spread (zero at
/// depth_cap), and rho_l for death, with l = nearest_blue_distance(u). After
/// a capture at x, every instantiated vertex below x gets its cached blue
/// depth and rates recomputed; after a death the red vertices below are frozen.
class TreeSimulator {
 public:
  TreeSimulator(const RateProfile& profile, int d, int depth_cap, std::uint64_t seed);

  // Restart from the initial configuration with a new seed.
  void reset(std::uint64_t seed);

  // Performs one event; returns false (and does nothing) when no transition is active.
  bool step();
  std::optional<TreeEvent> last_event() const noexcept { return last_; }

  const TreeState& state() const noexcept { return state_; }
  double total_rate() const noexcept { return tree_.empty() ? 0.0 : tree_[1]; }
  double time() const noexcept { return time_; }
  std::int64_t events() const noexcept { return events_; }

  // Rates currently attached to a vertex (all zero unless it is a live red).
  struct VertexRates {
    double capture = 0.0;
    double spread = 0.0;
    double death = 0.0;
  };
  VertexRates rates(VertexId v) const;

  std::int64_t blue_count() const noexcept { return blue_count_; }
  SimOutcome outcome() const;

 private:
  double lambda_at(int ell) const { return lambda_[static_cast<std::size_t>(ell)]; }
  double rho_at(int ell) const { return rho_[static_cast<std::size_t>(ell)]; }

  VertexId add_child(VertexId parent);
  void refresh(VertexId v);
  void set_weight(VertexId v, double w);
  void grow_tree(std::size_t capacity);
  VertexId sample_vertex(double x) const;

  void capture(VertexId v);
  void spread(VertexId v);
  void die(VertexId v);

  std::vector<double> lambda_;  // index 1..depth_cap + 1
  std::vector<double> rho_;
  TreeState state_;
  std::vector<VertexRates> rates_;
  std::vector<double> tree_;  // sum tree over vertex ids, leaves at [capacity, 2 capacity)
  std::size_t capacity_ = 0;
  Rng rng_;
  std::uint64_t seed_;
  double time_ = 0.0;
  std::int64_t events_ = 0;
  std::int64_t blue_count_ = 1;
  std::vector<std::int64_t> per_depth_blue_;
  std::optional<TreeEvent> last_;
  std::vector<VertexId> stack_;
};

SimOutcome simulate_tree(const RateProfile& profile, int d, int depth_cap, std::uint64_t seed,
                         std::int64_t max_events = kDefaultMaxEvents);

// Runs in fixed order; run i uses derive_seed(master_seed, i).
std::vector<SimOutcome> simulate_tree_runs(const RateProfile& profile, int d, int depth_cap, std::int64_t runs,
                                           std::uint64_t master_seed, unsigned threads = 1,
                                           std::int64_t max_events = kDefaultMaxEvents);

// E|B restricted to depth <= depth_cap| = 1 + sum_{n=1}^{depth_cap} d^{n-1} P(Y >= n):
// the d^{n-1} vertices at depth n are each blue with the half-line probability of reaching n.
double truncated_blue_series(const RateProfile& profile, int d, int depth_cap);

struct BlueEstimate {
  std::int64_t runs = 0;
  double mean = 0.0;
  double standard_error = 0.0;
  double series = 0.0;
  double gap = 0.0;  // mean - series
  std::int64_t exhausted_runs = 0;
  double reached_cap_fraction = 0.0;
};

BlueEstimate summarize_blue(const std::vector<SimOutcome>& outcomes, double series);
BlueEstimate expected_B_estimate(const RateProfile& profile, int d, int depth_cap, std::int64_t runs,
                                 std::uint64_t master_seed, unsigned threads = 1,
                                 std::int64_t max_events = kDefaultMaxEvents);

}  // namespace chase

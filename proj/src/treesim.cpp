#include "chase/treesim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "chase/jumpchain.hpp"
#include "chase/parallel.hpp"

namespace chase {

TreeState::TreeState(int d, int depth_cap) : d_(d), depth_cap_(depth_cap) {
  if (d < 1) throw std::invalid_argument("tree simulation requires d >= 1");
  if (depth_cap < 1) throw std::invalid_argument("tree simulation requires depth_cap >= 1");
  reset();
}

void TreeState::reset() {
  nodes_.clear();
  Node extra;
  extra.state = SiteState::Blue;
  extra.spawned = 1;
  extra.first_child = 1;
  Node root;
  root.state = SiteState::Red;
  root.depth = 1;
  root.parent = 0;
  nodes_.push_back(extra);
  nodes_.push_back(root);
}

std::vector<VertexId> TreeState::children(VertexId v) const {
  std::vector<VertexId> out;
  for (VertexId c = nodes_.at(index(v)).first_child; c != kNoVertex; c = nodes_[index(c)].next_sibling) {
    out.push_back(c);
  }
  return out;
}

int nearest_blue_distance(const TreeState& state, VertexId u) { return state.depth(u) - state.blue_depth(u); }

int nearest_blue_distance_by_walk(const TreeState& state, VertexId u) {
  VertexId w = u;
  while (state.state(w) != SiteState::Blue) w = state.parent(w);
  return state.depth(u) - state.depth(w);
}

TreeSimulator::TreeSimulator(const RateProfile& profile, int d, int depth_cap, std::uint64_t seed)
    : state_(d, depth_cap), rng_(seed), seed_(seed) {
  lambda_.assign(static_cast<std::size_t>(depth_cap) + 2, 0.0);
  rho_.assign(static_cast<std::size_t>(depth_cap) + 2, 0.0);
  for (int ell = 1; ell <= depth_cap + 1; ++ell) {
    lambda_[static_cast<std::size_t>(ell)] = profile.rate(RateKind::Lambda, ell);
    rho_[static_cast<std::size_t>(ell)] = profile.rate(RateKind::Rho, ell);
  }
  reset(seed);
}

void TreeSimulator::reset(std::uint64_t seed) {
  rng_ = Rng(seed);
  seed_ = seed;
  time_ = 0.0;
  events_ = 0;
  blue_count_ = 1;
  last_.reset();
  state_.reset();
  per_depth_blue_.assign(static_cast<std::size_t>(state_.depth_cap()) + 1, 0);
  per_depth_blue_[0] = 1;
  rates_.assign(2, {});
  capacity_ = 0;
  tree_.clear();
  grow_tree(64);
  refresh(1);
}

void TreeSimulator::grow_tree(std::size_t capacity) {
  std::size_t cap = std::max<std::size_t>(capacity_, 1);
  while (cap < capacity) cap *= 2;
  std::vector<double> next(2 * cap, 0.0);
  for (std::size_t v = 0; v < rates_.size(); ++v) {
    const auto& r = rates_[v];
    next[cap + v] = r.capture + r.spread + r.death;
  }
  for (std::size_t i = cap - 1; i >= 1; --i) next[i] = next[2 * i] + next[2 * i + 1];
  tree_ = std::move(next);
  capacity_ = cap;
}

void TreeSimulator::set_weight(VertexId v, double w) {
  std::size_t i = capacity_ + static_cast<std::size_t>(v);
  tree_[i] = w;
  // Parents are recomputed from both children so no rounding drift accumulates.
  for (i /= 2; i >= 1; i /= 2) tree_[i] = tree_[2 * i] + tree_[2 * i + 1];
}

VertexId TreeSimulator::sample_vertex(double x) const {
  std::size_t i = 1;
  while (i < capacity_) {
    const double left = tree_[2 * i];
    if (x < left) {
      i = 2 * i;
    } else {
      x -= left;
      i = 2 * i + 1;
    }
  }
  return static_cast<VertexId>(i - capacity_);
}

void TreeSimulator::refresh(VertexId v) {
  const auto& node = state_.nodes_[static_cast<std::size_t>(v)];
  VertexRates r;
  if (node.state == SiteState::Red && !node.frozen) {
    const int ell = node.depth - node.blue_depth;
    if (state_.nodes_[static_cast<std::size_t>(node.parent)].state == SiteState::Blue) r.capture = 1.0;
    if (node.depth < state_.depth_cap()) r.spread = static_cast<double>(state_.d() - node.spawned) * lambda_at(ell);
    r.death = rho_at(ell);
  }
  rates_[static_cast<std::size_t>(v)] = r;
  set_weight(v, r.capture + r.spread + r.death);
}

TreeSimulator::VertexRates TreeSimulator::rates(VertexId v) const { return rates_.at(static_cast<std::size_t>(v)); }

VertexId TreeSimulator::add_child(VertexId parent) {
  const auto id = static_cast<VertexId>(state_.nodes_.size());
  auto& p = state_.nodes_[static_cast<std::size_t>(parent)];
  TreeState::Node child;
  child.state = SiteState::Red;
  child.depth = p.depth + 1;
  child.blue_depth = p.blue_depth;
  child.parent = parent;
  child.next_sibling = p.first_child;
  p.first_child = id;
  ++p.spawned;
  state_.nodes_.push_back(child);
  rates_.emplace_back();
  if (rates_.size() > capacity_) grow_tree(rates_.size());
  return id;
}

void TreeSimulator::capture(VertexId v) {
  auto& node = state_.nodes_[static_cast<std::size_t>(v)];
  node.state = SiteState::Blue;
  node.blue_depth = node.depth;
  ++blue_count_;
  ++per_depth_blue_[static_cast<std::size_t>(node.depth)];
  refresh(v);
  const int bd = node.depth;
  stack_.clear();
  stack_.push_back(node.first_child);
  while (!stack_.empty()) {
    const VertexId u = stack_.back();
    stack_.pop_back();
    if (u == kNoVertex) continue;
    auto& n = state_.nodes_[static_cast<std::size_t>(u)];
    stack_.push_back(n.next_sibling);
    n.blue_depth = bd;
    refresh(u);
    stack_.push_back(n.first_child);
  }
}

void TreeSimulator::spread(VertexId v) {
  const VertexId c = add_child(v);
  refresh(v);
  refresh(c);
}

void TreeSimulator::die(VertexId v) {
  auto& node = state_.nodes_[static_cast<std::size_t>(v)];
  node.state = SiteState::Dead;
  refresh(v);
  stack_.clear();
  stack_.push_back(node.first_child);
  while (!stack_.empty()) {
    const VertexId u = stack_.back();
    stack_.pop_back();
    if (u == kNoVertex) continue;
    auto& n = state_.nodes_[static_cast<std::size_t>(u)];
    stack_.push_back(n.next_sibling);
    if (n.frozen) continue;  // already below an earlier death
    n.frozen = true;
    refresh(u);
    stack_.push_back(n.first_child);
  }
}

bool TreeSimulator::step() {
  const double total = total_rate();
  if (!(total > 0.0)) return false;
  time_ += rng_.exponential(total);
  VertexId v = kNoVertex;
  double w = 0.0;
  do {
    v = sample_vertex(rng_.uniform() * total);
    w = tree_[capacity_ + static_cast<std::size_t>(v)];
  } while (!(w > 0.0));

  const VertexRates r = rates_[static_cast<std::size_t>(v)];
  const double y = rng_.uniform() * w;
  TreeEventKind kind;
  if (y < r.capture) {
    kind = TreeEventKind::Capture;
  } else if (y < r.capture + r.spread || r.death == 0.0) {
    kind = r.spread > 0.0 ? TreeEventKind::Spread : TreeEventKind::Capture;
  } else {
    kind = TreeEventKind::Death;
  }

  const VertexId parent = state_.parent(v);
  switch (kind) {
    case TreeEventKind::Capture:
      capture(v);
      last_ = TreeEvent{kind, v, parent, time_};
      break;
    case TreeEventKind::Spread: {
      const VertexId c = static_cast<VertexId>(state_.size());
      spread(v);
      last_ = TreeEvent{kind, c, v, time_};
      break;
    }
    case TreeEventKind::Death:
      die(v);
      last_ = TreeEvent{kind, v, v, time_};
      break;
  }
  ++events_;
  return true;
}

SimOutcome TreeSimulator::outcome() const {
  SimOutcome out;
  out.blue_count = blue_count_;
  out.per_depth_blue = per_depth_blue_;
  out.reached_cap = per_depth_blue_.back() > 0;
  for (std::size_t k = 0; k < per_depth_blue_.size(); ++k) {
    if (per_depth_blue_[k] > 0) out.max_blue_depth = static_cast<int>(k);
  }
  out.events = events_;
  out.sim_time = time_;
  out.seed = seed_;
  return out;
}

namespace {

SimOutcome run_to_end(TreeSimulator& sim, std::int64_t max_events) {
  const auto start = std::chrono::steady_clock::now();
  bool active = true;
  while (sim.events() < max_events && (active = sim.step())) {
  }
  SimOutcome out = sim.outcome();
  out.exhausted = active && sim.total_rate() > 0.0;
  out.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

constexpr std::int64_t kTreeBatch = 256;

}  // namespace

SimOutcome simulate_tree(const RateProfile& profile, int d, int depth_cap, std::uint64_t seed,
                         std::int64_t max_events) {
  if (max_events < 1) throw std::invalid_argument("simulate_tree requires max_events >= 1");
  TreeSimulator sim(profile, d, depth_cap, seed);
  return run_to_end(sim, max_events);
}

std::vector<SimOutcome> simulate_tree_runs(const RateProfile& profile, int d, int depth_cap, std::int64_t runs,
                                           std::uint64_t master_seed, unsigned threads, std::int64_t max_events) {
  if (runs < 1) throw std::invalid_argument("tree simulation requires runs >= 1");
  if (max_events < 1) throw std::invalid_argument("simulate_tree requires max_events >= 1");
  const auto batches = static_cast<std::size_t>((runs + kTreeBatch - 1) / kTreeBatch);
  auto parts = run_batches<std::vector<SimOutcome>>(batches, threads, [&](std::size_t b) {
    const std::int64_t begin = static_cast<std::int64_t>(b) * kTreeBatch;
    const std::int64_t end = std::min(runs, begin + kTreeBatch);
    std::vector<SimOutcome> out;
    out.reserve(static_cast<std::size_t>(end - begin));
    TreeSimulator sim(profile, d, depth_cap, derive_seed(master_seed, static_cast<std::uint64_t>(begin)));
    for (std::int64_t i = begin; i < end; ++i) {
      sim.reset(derive_seed(master_seed, static_cast<std::uint64_t>(i)));
      out.push_back(run_to_end(sim, max_events));
    }
    return out;
  });
  std::vector<SimOutcome> all;
  all.reserve(static_cast<std::size_t>(runs));
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(all));
  return all;
}

double truncated_blue_series(const RateProfile& profile, int d, int depth_cap) {
  if (d < 1) throw std::invalid_argument("series requires d >= 1");
  if (depth_cap < 0) throw std::invalid_argument("series requires depth_cap >= 0");
  const auto reach = reach_table(profile, depth_cap);
  double total = 1.0;
  double width = 1.0;  // d^{n-1}
  for (int n = 1; n <= depth_cap; ++n) {
    total += width * reach.p_reach[static_cast<std::size_t>(n)];
    width *= d;
  }
  return total;
}

BlueEstimate summarize_blue(const std::vector<SimOutcome>& outcomes, double series) {
  BlueEstimate est;
  est.series = series;
  est.runs = static_cast<std::int64_t>(outcomes.size());
  if (outcomes.empty()) return est;
  double sum = 0.0;
  std::int64_t capped = 0;
  for (const auto& o : outcomes) {
    sum += static_cast<double>(o.blue_count);
    if (o.exhausted) ++est.exhausted_runs;
    if (o.reached_cap) ++capped;
  }
  const double n = static_cast<double>(outcomes.size());
  est.mean = sum / n;
  double ss = 0.0;
  for (const auto& o : outcomes) {
    const double dev = static_cast<double>(o.blue_count) - est.mean;
    ss += dev * dev;
  }
  est.standard_error = outcomes.size() > 1 ? std::sqrt(ss / (n - 1) / n) : 0.0;
  est.gap = est.mean - series;
  est.reached_cap_fraction = static_cast<double>(capped) / n;
  return est;
}

BlueEstimate expected_B_estimate(const RateProfile& profile, int d, int depth_cap, std::int64_t runs,
                                 std::uint64_t master_seed, unsigned threads, std::int64_t max_events) {
  const auto outcomes = simulate_tree_runs(profile, d, depth_cap, runs, master_seed, threads, max_events);
  return summarize_blue(outcomes, truncated_blue_series(profile, d, depth_cap));
}

}  // namespace chase

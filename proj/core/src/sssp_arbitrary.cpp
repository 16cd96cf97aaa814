#include "disksssp/sssp_arbitrary.hpp"

#include <algorithm>
#include <cmath>

#include "disksssp/geometry.hpp"

namespace disksssp {

ArbitrarySolver::ArbitrarySolver(const DiskInstance& inst,
                                 WeightedSiteSet::Strategy strategy)
    : inst_(inst) {
  const int n = inst.n();
  dist_.assign(n, kInf);
  prev_.assign(n, -1);
  in_r_.assign(n, 1);
  remaining_ = n;
  qt_.build(inst, strategy);
  pair_states_ = std::vector<PairState>(qt_.pair_count());
  six_c_.resize(qt_.pair_count());
  for (int p = 0; p < qt_.pair_count(); ++p)
    six_c_[p] = std::ldexp(3.0, qt_.pair(p).level + 1);

  // Seed every neighbor of the source with the direct edge; the straight
  // segment is the shortest path to any neighbor, so these values are final.
  const Vertex& s = inst.vertices[inst.source];
  dist_[s.id] = 0;
  for (const Vertex& v : inst.vertices)
    if (v.id != s.id && is_edge(s, v)) {
      dist_[v.id] = edge_weight(s, v);
      prev_[v.id] = s.id;
    }
  for (int v = 0; v < n; ++v) vertex_queue_.push({dist_[v], v});
}

ArbitrarySolver::Round ArbitrarySolver::next_round() {
  Round r;
  if (remaining_ == 0) return r;
  while (!vertex_queue_.empty()) {
    auto [key, v] = vertex_queue_.top();
    if (in_r_[v] && dist_[v] == key) break;
    vertex_queue_.pop();
  }
  while (!up_queue_.empty()) {
    auto [key, p] = up_queue_.top();
    if (pair_states_[p].alarm_up == key) break;
    up_queue_.pop();
  }
  while (!down_queue_.empty()) {
    auto [key, p] = down_queue_.top();
    if (pair_states_[p].alarm_down == key) break;
    down_queue_.pop();
  }
  // Every unsettled vertex keeps a live entry, so the vertex queue is
  // nonempty here. Tie order: downward alarm, upward alarm, vertex round.
  r.kind = Round::kVertex;
  r.key = vertex_queue_.top().first;
  if (!up_queue_.empty() && up_queue_.top().first <= r.key) {
    r.kind = Round::kAlarmUp;
    r.key = up_queue_.top().first;
  }
  if (!down_queue_.empty() && down_queue_.top().first <= r.key) {
    r.kind = Round::kAlarmDown;
    r.key = down_queue_.top().first;
  }
  switch (r.kind) {
    case Round::kVertex:
      r.vertex = vertex_queue_.top().second;
      r.cell = qt_.mid_cell_of(r.vertex);
      break;
    case Round::kAlarmUp:
      r.pair = up_queue_.top().second;
      break;
    case Round::kAlarmDown:
      r.pair = down_queue_.top().second;
      r.vertex = pair_states_[r.pair].queue.top().second;
      break;
    default:
      break;
  }
  return r;
}

bool ArbitrarySolver::step() {
  Round r = next_round();
  if (r.kind == Round::kFinished) return false;
  if (r.key < last_key_) stats_.keys_monotone = false;
  last_key_ = r.key;
  last_round_ = r;
  switch (r.kind) {
    case Round::kVertex:
      vertex_queue_.pop();
      run_vertex_round(r.vertex, r.cell);
      break;
    case Round::kAlarmUp:
      up_queue_.pop();
      run_up_round(r.pair, r.key);
      break;
    case Round::kAlarmDown:
      down_queue_.pop();
      run_down_round(r.pair);
      break;
    default:
      break;
  }
  return true;
}

void ArbitrarySolver::relax_targets(const std::vector<LabeledVertex>& U,
                                    const std::vector<int>& targets, bool requeue) {
  if (U.empty() || targets.empty()) return;
  std::vector<double> old;
  old.reserve(targets.size());
  for (int t : targets) old.push_back(dist_[t]);
  update(U, targets, inst_.vertices, dist_, prev_);
  if (!requeue) return;
  for (std::size_t i = 0; i < targets.size(); ++i)
    if (dist_[targets[i]] < old[i] && in_r_[targets[i]])
      vertex_queue_.push({dist_[targets[i]], targets[i]});
}

void ArbitrarySolver::settle_small(const PairLink& link, int u) {
  PairState& ps = pair_states_[link.pair];
  SmallEntry e{dist_[u], u, link.radius};
  auto it = std::lower_bound(ps.settled.begin(), ps.settled.end(), e);
  const std::size_t idx = it - ps.settled.begin();
  ps.settled.insert(it, e);
  ps.prefix_min.insert(ps.prefix_min.begin() + idx, 0);
  for (std::size_t j = idx; j < ps.settled.size(); ++j)
    ps.prefix_min[j] =
        std::min(j ? ps.prefix_min[j - 1] : kInf, ps.settled[j].radius);
}

void ArbitrarySolver::run_vertex_round(int v, int cell) {
  const std::vector<int>& mids = qt_.node(cell).mid;
  const std::vector<int>& nearby = qt_.boxplus(cell);

  std::vector<int> nearby_mids;
  std::vector<LabeledVertex> pull;
  for (int c2 : nearby)
    for (int u : qt_.node(c2).mid) {
      nearby_mids.push_back(u);
      if (dist_[u] < kInf) pull.push_back(label(inst_.vertices[u], dist_[u]));
    }
  relax_targets(pull, mids, true);

  std::vector<LabeledVertex> push;
  for (int u : mids)
    if (dist_[u] < kInf) push.push_back(label(inst_.vertices[u], dist_[u]));
  relax_targets(push, nearby_mids, true);

  // Schedule the upward alarms this cell is responsible for; a pending alarm
  // is left untouched.
  if (dist_[v] < kInf)
    for (const ArmEntry& arm : qt_.cell_arms(cell)) {
      PairState& ps = pair_states_[arm.pair];
      if (ps.alarm_up == kInf) {
        ps.alarm_up = dist_[v] + 0.25 * arm.radius;
        up_queue_.push({ps.alarm_up, arm.pair});
      }
    }

  for (int u : mids) {
    if (dist_[u] < kInf) {
      for (int p : qt_.pairs_with_large(u)) {
        PairState& ps = pair_states_[p];
        const double prio = dist_[u] + inst_.vertices[u].r - six_c_[p];
        ps.queue.push({prio, u});
        ps.inc.insert(label(inst_.vertices[u], dist_[u]));
        if (prio < ps.alarm_down) {
          ps.alarm_down = prio;
          down_queue_.push({prio, p});
        }
      }
      for (const PairLink& link : qt_.pairs_with_small(u)) settle_small(link, u);
    }
    in_r_[u] = 0;
    --remaining_;
  }
  ++stats_.vertex_rounds;
}

void ArbitrarySolver::run_up_round(int pair, double key) {
  PairState& ps = pair_states_[pair];
  const ConePair& cp = qt_.pair(pair);

  const double lo_key = ps.has_k1 ? ps.k1 : -kInf;
  auto first = std::lower_bound(ps.settled.begin(), ps.settled.end(),
                                SmallEntry{lo_key, std::numeric_limits<int>::min(), 0});
  auto last = std::upper_bound(ps.settled.begin(), ps.settled.end(),
                               SmallEntry{key, std::numeric_limits<int>::max(), 0});
  if (first != last) {
    std::vector<LabeledVertex> sources;
    double r1 = kInf;
    for (auto it = first; it != last; ++it) {
      sources.push_back(label(inst_.vertices[it->id], dist_[it->id]));
      r1 = std::min(r1, it->radius);
    }
    double r2 = kInf;
    if (ps.has_k2) {
      auto at = std::upper_bound(ps.settled.begin(), ps.settled.end(),
                                 SmallEntry{ps.k2, std::numeric_limits<int>::max(), 0});
      if (at != ps.settled.begin()) r2 = ps.prefix_min[at - ps.settled.begin() - 1];
    }
    const double lo_r = std::min(r1, r2), hi_r = std::max(r1, r2);
    auto rf = std::lower_bound(cp.large_by_r.begin(), cp.large_by_r.end(),
                               std::make_pair(lo_r, std::numeric_limits<int>::min()));
    auto rl = std::upper_bound(cp.large_by_r.begin(), cp.large_by_r.end(),
                               std::make_pair(hi_r, std::numeric_limits<int>::max()));
    std::vector<int> targets;
    for (auto it = rf; it != rl; ++it) targets.push_back(it->second);
    std::sort(targets.begin(), targets.end());
    relax_targets(sources, targets, true);
  }

  ps.k2 = ps.k1;
  ps.has_k2 = ps.has_k1;
  ps.k1 = key;
  ps.has_k1 = true;
  ps.alarm_up = kInf;
  ++ps.up_count;
  stats_.max_up_rounds_per_pair = std::max(stats_.max_up_rounds_per_pair, ps.up_count);
  ++stats_.up_rounds;
}

void ArbitrarySolver::run_down_round(int pair) {
  PairState& ps = pair_states_[pair];
  const ConePair& cp = qt_.pair(pair);
  const int head = ps.queue.top().second;
  const double r_head = inst_.vertices[head].r;

  std::vector<int> targets;
  while (ps.cursor < static_cast<int>(cp.small_by_rv.size()) &&
         cp.small_by_rv[ps.cursor].first <= r_head) {
    targets.push_back(cp.small_by_rv[ps.cursor].second);
    ++ps.cursor;
  }
  if (!targets.empty()) {
    std::vector<double> old;
    old.reserve(targets.size());
    for (int t : targets) old.push_back(dist_[t]);
    ps.inc.query(targets, inst_.vertices, dist_, prev_);
    for (std::size_t i = 0; i < targets.size(); ++i)
      if (dist_[targets[i]] < old[i] && in_r_[targets[i]])
        vertex_queue_.push({dist_[targets[i]], targets[i]});
  }

  ps.queue.pop();
  ps.alarm_down = ps.queue.empty() ? kInf : ps.queue.top().first;
  if (ps.alarm_down < kInf) down_queue_.push({ps.alarm_down, pair});
  ++stats_.down_rounds;
}

void ArbitrarySolver::post_process() {
  if (post_done_) return;
  post_done_ = true;
  for (int p = 0; p < qt_.pair_count(); ++p) {
    const ConePair& cp = qt_.pair(p);
    if (cp.post.empty()) continue;
    const std::vector<int>& smalls = qt_.small_of(p);
    std::vector<LabeledVertex> sources;
    for (int u : cp.post)
      if (dist_[u] < kInf) sources.push_back(label(inst_.vertices[u], dist_[u]));
    if (sources.empty()) continue;
    std::vector<double> old;
    old.reserve(smalls.size());
    for (int t : smalls) old.push_back(dist_[t]);
    update(sources, smalls, inst_.vertices, dist_, prev_);
    for (std::size_t i = 0; i < smalls.size(); ++i)
      if (dist_[smalls[i]] < old[i]) ++stats_.post_improvements;
  }
}

SsspResult ArbitrarySolver::run() {
  while (step()) {
  }
  post_process();
  return {dist_, prev_};
}

SsspResult solve_arbitrary(const DiskInstance& inst, WeightedSiteSet::Strategy strategy) {
  ArbitrarySolver solver(inst, strategy);
  return solver.run();
}

}  // namespace disksssp

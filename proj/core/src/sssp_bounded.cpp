#include "disksssp/sssp_bounded.hpp"

#include <algorithm>
#include <cmath>

#include "disksssp/geometry.hpp"
#include "disksssp/update_engine.hpp"

namespace disksssp {

BoundedSolver::BoundedSolver(const DiskInstance& inst, WeightedSiteSet::Strategy strategy)
    : inst_(inst) {
  const int n = inst.n();
  dist_.assign(n, kInf);
  prev_.assign(n, -1);
  in_r_.assign(n, 1);
  remaining_ = n;
  grid_.build(inst, strategy);
  grid_.compute_larger_lists(inst);
  alarm_count_.assign(grid_.cell_count(), 0);

  // Seed every neighbor of the source with the direct edge; together with the
  // mid cells forming cliques, this makes the source cell correct immediately.
  const Vertex& s = inst.vertices[inst.source];
  dist_[s.id] = 0;
  for (const Vertex& v : inst.vertices)
    if (v.id != s.id && is_edge(s, v)) {
      dist_[v.id] = edge_weight(s, v);
      prev_[v.id] = s.id;
    }
  for (int v = 0; v < n; ++v) vertex_queue_.push({dist_[v], v});
}

BoundedSolver::Round BoundedSolver::next_round() {
  Round r;
  if (remaining_ == 0) return r;
  // Entries are stale unless their key still matches the live value.
  while (!vertex_queue_.empty()) {
    auto [key, v] = vertex_queue_.top();
    if (in_r_[v] && dist_[v] == key) break;
    vertex_queue_.pop();
  }
  while (!alarm_queue_.empty()) {
    auto [key, c] = alarm_queue_.top();
    if (grid_.cell(c).alarm == key) break;
    alarm_queue_.pop();
  }
  // Every unprocessed vertex has a live entry, so the vertex queue is nonempty
  // here. Alarms win ties: firing earlier only corrects more values sooner.
  double vertex_key = vertex_queue_.top().first;
  if (!alarm_queue_.empty() && alarm_queue_.top().first <= vertex_key) {
    r.kind = Round::kAlarm;
    r.key = alarm_queue_.top().first;
    r.cell = alarm_queue_.top().second;
  } else {
    r.kind = Round::kVertex;
    r.key = vertex_key;
    r.vertex = vertex_queue_.top().second;
    r.cell = grid_.mid_cell_of(r.vertex);
  }
  return r;
}

bool BoundedSolver::step() {
  Round r = next_round();
  if (r.kind == Round::kFinished) return false;
  if (r.key < last_key_) stats_.keys_monotone = false;
  last_key_ = r.key;
  if (r.kind == Round::kAlarm) {
    alarm_queue_.pop();
    run_alarm_round(r.cell);
  } else {
    vertex_queue_.pop();
    run_vertex_round(r.vertex, r.cell);
  }
  return true;
}

SsspResult BoundedSolver::run() {
  while (step()) {
  }
  SsspResult res;
  res.dist = dist_;
  res.prev = prev_;
  return res;
}

void BoundedSolver::relax_batch(const std::vector<int>& sources, const std::vector<int>& targets,
                                bool requeue) {
  if (sources.empty() || targets.empty()) return;
  std::vector<LabeledVertex> labels;
  labels.reserve(sources.size());
  for (int u : sources)
    if (std::isfinite(dist_[u])) labels.push_back(label(inst_.vertices[u], dist_[u]));
  if (labels.empty()) return;
  if (!requeue) {
    update(labels, targets, inst_.vertices, dist_, prev_);
    return;
  }
  std::vector<double> before(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) before[i] = dist_[targets[i]];
  update(labels, targets, inst_.vertices, dist_, prev_);
  // Only unprocessed vertices need queue entries; processed targets keep the
  // improved value (a late fix for a leaf of the tree) without a new round.
  for (std::size_t i = 0; i < targets.size(); ++i)
    if (dist_[targets[i]] != before[i] && in_r_[targets[i]])
      vertex_queue_.push({dist_[targets[i]], targets[i]});
}

void BoundedSolver::run_vertex_round(int v, int cv) {
  ++stats_.vertex_rounds;
  const std::vector<int>& around = grid_.boxplus(cv);

  // Pull pass: every mid vertex nearby may be the predecessor of one of ours.
  std::vector<int> sources, targets;
  for (int ci : around) {
    const std::vector<int>& mid = grid_.cell(ci).mid;
    sources.insert(sources.end(), mid.begin(), mid.end());
  }
  targets.assign(grid_.cell(cv).mid.begin(), grid_.cell(cv).mid.end());
  relax_batch(sources, targets, /*requeue=*/false);

  // Push pass: our now-settled mid vertices relax all nearby mid and small
  // vertices, processed ones included — a processed small whose best edge
  // comes from a larger disk is a leaf of the tree and gets its final value
  // here, after its own round. Small lists overlap across levels, hence the
  // dedup.
  sources.assign(grid_.cell(cv).mid.begin(), grid_.cell(cv).mid.end());
  targets.clear();
  for (int ci : around) {
    const CellRecord& rec = grid_.cell(ci);
    targets.insert(targets.end(), rec.mid.begin(), rec.mid.end());
    targets.insert(targets.end(), rec.small.begin(), rec.small.end());
  }
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  relax_batch(sources, targets, /*requeue=*/true);

  // Much larger cells with an edge into this one learn their values lazily:
  // wake them 2|c| after the key, just before those values could be selected.
  double dv = dist_[v];
  for (int ci : grid_.cell(cv).larger) {
    CellRecord& rec = grid_.cell(ci);
    if (rec.alarm == kInf && std::isfinite(dv)) {
      rec.alarm = dv + std::ldexp(1.0, rec.key.level + 1);
      alarm_queue_.push({rec.alarm, ci});
    }
  }

  for (int w : grid_.cell(cv).mid)
    if (in_r_[w]) {
      in_r_[w] = 0;
      --remaining_;
    }
}

void BoundedSolver::run_alarm_round(int ci) {
  ++stats_.alarm_rounds;
  stats_.max_alarm_rounds_per_cell =
      std::max(stats_.max_alarm_rounds_per_cell, ++alarm_count_[ci]);

  std::vector<int> sources, targets;
  for (int cj : grid_.boxplus(ci)) {
    const std::vector<int>& small = grid_.cell(cj).small;
    sources.insert(sources.end(), small.begin(), small.end());
  }
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
  // All mids, processed or not: an alarm may ring after this cell's own round,
  // and the late value still has to land.
  targets.assign(grid_.cell(ci).mid.begin(), grid_.cell(ci).mid.end());
  relax_batch(sources, targets, /*requeue=*/true);
  grid_.cell(ci).alarm = kInf;
}

SsspResult solve_bounded(const DiskInstance& inst, WeightedSiteSet::Strategy strategy) {
  return BoundedSolver(inst, strategy).run();
}

}  // namespace disksssp

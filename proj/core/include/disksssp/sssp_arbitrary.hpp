#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <utility>
#include <vector>

#include "disksssp/instance.hpp"
#include "disksssp/quadtree.hpp"
#include "disksssp/result.hpp"
#include "disksssp/update_engine.hpp"

namespace disksssp {

struct ArbitraryStats {
  std::int64_t vertex_rounds = 0;
  std::int64_t up_rounds = 0;    // small-to-large alarm rounds
  std::int64_t down_rounds = 0;  // large-to-small alarm rounds
  std::int64_t post_improvements = 0;
  int max_up_rounds_per_pair = 0;
  bool keys_monotone = true;
};

// Exact single-source shortest paths for disk graphs without any radius-ratio
// assumption. Vertices settle a mid cell at a time as in the bounded solver;
// edges whose radius ratio reaches the band factor are relaxed lazily through
// the cell/cone pairs: an upward alarm batches corrections from settled small
// vertices to the pair's large side, a downward alarm batches them back from
// settled large vertices to the small side, and a final sweep fixes the
// leaves of the shortest-path tree that only a deeply containing disk serves.
class ArbitrarySolver {
 public:
  struct Round {
    enum Kind { kFinished, kVertex, kAlarmUp, kAlarmDown } kind = kFinished;
    double key = kInf;
    int vertex = -1;  // round vertex; on kAlarmDown the popped queue head
    int cell = -1;    // node id of the round vertex's mid cell
    int pair = -1;    // cone pair of an alarm round
  };

  explicit ArbitrarySolver(const DiskInstance& inst,
                           WeightedSiteSet::Strategy strategy =
                               WeightedSiteSet::default_strategy());

  // All rounds plus the final sweep.
  SsspResult run();

  // The next round to execute, skipping stale queue entries. kFinished once
  // every vertex has settled.
  Round next_round();
  // Executes one round; false when none remain (the final sweep is separate).
  bool step();
  bool rounds_done() const { return remaining_ == 0; }
  // Final sweep over the pairs' deeply-containing members; idempotent.
  void post_process();

  const std::vector<double>& dist() const { return dist_; }
  const std::vector<int>& prev() const { return prev_; }
  QuadtreePaths& paths() { return qt_; }
  const ArbitraryStats& stats() const { return stats_; }
  const Round& last_round() const { return last_round_; }
  double alarm_up_of(int pair) const { return pair_states_[pair].alarm_up; }
  double alarm_down_of(int pair) const { return pair_states_[pair].alarm_down; }

 private:
  struct SmallEntry {
    double key;  // dist at settle time; entries are never re-keyed
    int id;
    double radius;  // radius of its minimum-radius large-side neighbor
    bool operator<(const SmallEntry& o) const {
      return key != o.key ? key < o.key : id < o.id;
    }
  };
  struct PairState {
    double alarm_up = kInf;
    double alarm_down = kInf;
    std::priority_queue<std::pair<double, int>, std::vector<std::pair<double, int>>,
                        std::greater<>>
        queue;
    IncrementalUpdateStructure inc;
    double k1 = 0, k2 = 0;  // two most recent upward-alarm keys
    bool has_k1 = false, has_k2 = false;
    std::vector<SmallEntry> settled;  // sorted by (key, id)
    std::vector<double> prefix_min;   // running min of radius over settled
    int cursor = 0;                   // consumed prefix of small_by_rv
    int up_count = 0;
  };

  void run_vertex_round(int v, int cell);
  void run_up_round(int pair, double key);
  void run_down_round(int pair);
  void relax_targets(const std::vector<LabeledVertex>& U, const std::vector<int>& targets,
                     bool requeue);
  void settle_small(const PairLink& link, int u);

  const DiskInstance& inst_;
  QuadtreePaths qt_;
  std::vector<double> dist_;
  std::vector<int> prev_;
  std::vector<char> in_r_;
  int remaining_ = 0;
  std::vector<PairState> pair_states_;
  std::vector<double> six_c_;  // per pair: 6 * (lowest cell diameter)
  using Heap = std::priority_queue<std::pair<double, int>,
                                   std::vector<std::pair<double, int>>, std::greater<>>;
  Heap vertex_queue_;
  Heap up_queue_;
  Heap down_queue_;
  double last_key_ = -kInf;
  Round last_round_;
  bool post_done_ = false;
  ArbitraryStats stats_;
};

SsspResult solve_arbitrary(const DiskInstance& inst,
                           WeightedSiteSet::Strategy strategy =
                               WeightedSiteSet::default_strategy());

}  // namespace disksssp

#pragma once

#include <cstdint>
#include <queue>
#include <vector>

#include "disksssp/grid.hpp"
#include "disksssp/instance.hpp"
#include "disksssp/result.hpp"
#include "disksssp/weighted_nn.hpp"

namespace disksssp {

// Cell-batched Dijkstra for disk graphs with a moderate radius ratio: vertices are
// settled one whole mid cell at a time, and per-cell alarms defer pulling distances
// out of much smaller neighbors until just before those values are needed.

struct BoundedStats {
  std::int64_t vertex_rounds = 0;  // rounds that settle a mid cell
  std::int64_t alarm_rounds = 0;   // rounds that fire a cell alarm
  int max_alarm_rounds_per_cell = 0;
  bool keys_monotone = true;  // the selected round keys never decreased
};

class BoundedSolver {
 public:
  struct Round {
    enum Kind { kFinished, kVertex, kAlarm } kind = kFinished;
    double key = kInf;
    int vertex = -1;  // kVertex: the minimum-dist unprocessed vertex
    int cell = -1;    // kVertex: its mid cell; kAlarm: the firing cell
  };

  explicit BoundedSolver(const DiskInstance& inst,
                         WeightedSiteSet::Strategy strategy = WeightedSiteSet::default_strategy());

  SsspResult run();    // executes rounds until every vertex is processed
  Round next_round();  // what step() would do now; skips stale queue entries
  bool step();         // one round; false when already finished
  bool finished() const { return remaining_ == 0; }

  const std::vector<double>& dist() const { return dist_; }
  const std::vector<int>& prev() const { return prev_; }
  GridIndex& grid() { return grid_; }
  const BoundedStats& stats() const { return stats_; }
  int alarm_rounds_of(int cell_idx) const { return alarm_count_[cell_idx]; }

 private:
  void run_vertex_round(int v, int cv);
  void run_alarm_round(int ci);
  void relax_batch(const std::vector<int>& sources, const std::vector<int>& targets, bool requeue);

  const DiskInstance& inst_;
  GridIndex grid_;
  std::vector<double> dist_;
  std::vector<int> prev_;
  std::vector<char> in_r_;
  int remaining_ = 0;
  double last_key_ = -kInf;
  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> vertex_queue_;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> alarm_queue_;
  std::vector<int> alarm_count_;
  BoundedStats stats_;
};

SsspResult solve_bounded(const DiskInstance& inst,
                         WeightedSiteSet::Strategy strategy = WeightedSiteSet::default_strategy());

}  // namespace disksssp

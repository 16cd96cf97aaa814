#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "disksssp/geometry.hpp"
#include "disksssp/instance.hpp"
#include "disksssp/weighted_nn.hpp"

namespace disksssp {

// Hierarchical grid of axis-parallel square cells. A level-i cell has diameter
// |c| = 2^i (side 2^i/sqrt2). Points are scaled once to xi = coord * sqrt2, so a
// level-i cell has side exactly 2^i in scaled units; halving via ldexp is exact,
// which makes integer cell indices nest exactly across levels.

struct CellKey {
  int level = 0;
  std::int64_t ix = 0;
  std::int64_t iy = 0;
  friend bool operator==(const CellKey&, const CellKey&) = default;
};

struct CellKeyHash {
  std::size_t operator()(const CellKey& k) const;
};

// Scaled coordinate xi = x * sqrt2.
double xi_coord(double x);
// floor(xi / 2^level), the level-`level` slab containing xi.
std::int64_t cell_index(double xi, int level);
CellKey cell_key_at(double x, double y, int level);
// The unique i with r in [8*2^i, 16*2^i); exact because 8*2^i is a power of two.
int level_mid(double r);

struct CellRecord {
  CellKey key;
  std::vector<int> mid;     // vertices v in c with r_v in [8|c|, 16|c|), ascending id
  std::vector<int> small;   // vertices v in c with r_v in [1, 8|c|), ascending id
  std::vector<int> larger;  // cells of strictly larger diameter whose mid set has an
                            // edge to an element of ours (filled by compute_larger_lists)
  double alarm = kInf;      // owned by the solver; the index itself never reads it
};

class GridIndex {
 public:
  // Materializes every nonempty mid cell, plus small memberships for each vertex
  // at levels (level_mid(r_v), max mid level]. Only nonempty cells get records.
  void build(const DiskInstance& inst,
             WeightedSiteSet::Strategy strategy = WeightedSiteSet::default_strategy());

  int cell_count() const { return static_cast<int>(cells_.size()); }
  const CellRecord& cell(int idx) const { return cells_[idx]; }
  CellRecord& cell(int idx) { return cells_[idx]; }
  int find(const CellKey& key) const;  // -1 when the cell is not materialized
  int mid_cell_of(int vid) const { return mid_cell_[vid]; }
  int min_mid_level() const { return min_mid_level_; }
  int max_mid_level() const { return max_mid_level_; }

  // Materialized cells of levels i-1, i, i+1 fully contained in the axis square of
  // diameter 142|c| centered on c. Includes c itself. Cached after the first call.
  const std::vector<int>& boxplus(int idx);

  // Fills CellRecord::larger for every cell with a nonempty mid set: candidates are
  // the larger cells whose 142-square contains c, kept when a nearest-site query
  // certifies an edge between the two mid sets.
  void compute_larger_lists(const DiskInstance& inst);

 private:
  struct LevelIndex {
    std::vector<std::int64_t> xs;                                 // ascending column keys
    std::vector<std::vector<std::pair<std::int64_t, int>>> cols;  // (iy, cell idx) ascending
  };

  int get_or_create(const CellKey& key);
  void scan_range(int level, std::int64_t xlo, std::int64_t xhi, std::int64_t ylo,
                  std::int64_t yhi, std::vector<int>& out) const;

  std::vector<CellRecord> cells_;
  std::unordered_map<CellKey, int, CellKeyHash> index_;
  std::unordered_map<int, LevelIndex> levels_;
  std::vector<int> mid_cell_;
  std::vector<std::vector<int>> boxplus_cache_;
  std::vector<char> boxplus_ready_;
  int min_mid_level_ = 0;
  int max_mid_level_ = 0;
  WeightedSiteSet::Strategy strategy_ = WeightedSiteSet::default_strategy();
};

}  // namespace disksssp

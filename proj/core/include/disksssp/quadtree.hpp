#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "disksssp/grid.hpp"
#include "disksssp/instance.hpp"
#include "disksssp/weighted_nn.hpp"

namespace disksssp {

// Radius band factor for the wide mid bands: P_mid(c) holds the vertices of c
// with radius in [kBand*|c|, 2*kBand*|c|). An edge whose radius ratio reaches
// kBand is handled through the cell/cone pairs instead of the nearby-cell
// family.
inline constexpr int kBandBits = 10;
inline constexpr std::int64_t kBand = 1024;  // 2^kBandBits

// Number of congruent angular sectors a cone family splits the plane into.
inline constexpr int kSectorCount = 629;

// Unique level i with r in [kBand*2^i, 2*kBand*2^i); requires r >= 1.
int band_level(double r);

// Diameter of a level-i cell in input coordinates.
double cell_diameter(int level);

// Center of a cell on the grid's own axes (see QuadtreePaths::center_x for
// the mapping back to input coordinates).
double cell_center_x(const CellKey& key);
double cell_center_y(const CellKey& key);

// Sector index in [0, kSectorCount) of point p around the apex; sectors are
// half-open, starting at angle 0; the apex itself maps to sector 0.
int cone_sector(double apex_x, double apex_y, double px, double py);

struct QuadNode {
  CellKey key;
  int parent = -1;
  std::vector<int> children;  // ordered by (ix, iy, level) ascending
  std::vector<int> mid;       // vertex ids with this cell as their mid cell
  bool ext = false;           // added beyond the base split tree
  std::int64_t subtree = 1;   // node count of the subtree rooted here
  int heavy = -1;             // child with the largest subtree (ties: first)
  int path = -1;              // heavy path id
  int pos = -1;               // position on that path, 0 = top
};

struct HeavyPath {
  std::vector<int> nodes;       // top to bottom; bottom is always a leaf
  int root_piece = -1;          // dissection interval covering the whole path
  std::vector<int> leaf_piece;  // leaf interval per position
};

// Interval of a heavy path produced by a weighted-median dissection. The
// piece family plays the role of canonical paths: every root-to-node tree
// path is the disjoint union of O(log) pieces (see cover_to).
struct PathPiece {
  int path = -1;
  int begin = 0;
  int end = 0;     // inclusive positions on the heavy path
  int split = -1;  // last position of the left child interval
  int left = -1;
  int right = -1;
  int parent = -1;
  int top_node = -1;
  int bottom_node = -1;    // the piece's lowest cell
  std::vector<int> small;  // vertices whose root-path cover uses this piece
};

// One (lowest cell, cone sector) pair; materialized only when both the small
// side (the piece's list) and the large/post side are nonempty.
struct ConePair {
  int piece = -1;
  int sector = -1;
  int cell = -1;  // node id of the piece's lowest cell
  int level = 0;  // level of that cell
  double apex_x = 0;
  double apex_y = 0;
  double radius = 0;        // cone radius: 3*kBand*(top cell diameter)
  std::vector<int> large;   // in-band members straddling the annulus
  std::vector<int> post;    // members containing the apex region deeply;
                            // handled only by the final sweep
  std::vector<std::pair<double, int>> large_by_r;   // (r, id) ascending
  std::vector<std::pair<double, int>> small_by_rv;  // (min adjacent large
                                                    // radius, id) ascending
};

// For a small vertex: one pair it belongs to plus its minimum-radius
// neighbor among that pair's large side.
struct PairLink {
  int pair = -1;
  double radius = 0;  // radius of that neighbor
  int vertex = -1;    // its id
};

// Aggregated PairLink per mid cell: minimum link radius over the cell's
// vertices, used to schedule upward alarms.
struct ArmEntry {
  int pair = -1;
  double radius = 0;
};

// Compressed quadtree over the vertex centers, extended with every mid cell
// and with level-complete ancestor chains above each mid cell, plus the
// heavy-path piece family and the cell/cone-pair adjacency lists.
class QuadtreePaths {
 public:
  QuadtreePaths() = default;

  void build(const DiskInstance& inst,
             WeightedSiteSet::Strategy strategy = WeightedSiteSet::default_strategy());

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int base_node_count() const { return base_node_count_; }
  const QuadNode& node(int i) const { return nodes_[i]; }
  int root() const { return root_; }
  int find(const CellKey& key) const;
  // Cell key of an input point on this tree's grid. The grid is anchored so
  // that every input point gets nonnegative coordinates — dyadic cells on
  // fixed axes never merge a point set straddling an axis into one root — so
  // tree keys are only comparable with keys produced by this method.
  CellKey key_at(double x, double y, int level) const;
  // Cell center mapped back to input coordinates.
  double center_x(const CellKey& key) const;
  double center_y(const CellKey& key) const;
  int level_of_vertex(int v) const { return lev_[v]; }
  int mid_cell_of(int v) const { return mid_cell_[v]; }
  int window_top_of(int v) const { return window_top_[v]; }

  // Materialized cells of comparable level contained in the fixed-ratio box
  // around the node's center; includes the node itself. Cached per node.
  const std::vector<int>& boxplus(int node_id);

  int path_count() const { return static_cast<int>(paths_.size()); }
  const HeavyPath& path(int i) const { return paths_[i]; }
  int piece_count() const { return static_cast<int>(pieces_.size()); }
  const PathPiece& piece(int i) const { return pieces_[i]; }

  // Piece ids whose node intervals partition the path from the root down to
  // the given node (inclusive).
  std::vector<int> cover_to(int node_id) const;
  // Dissection chain: every piece whose interval contains the node.
  std::vector<int> pieces_containing(int node_id) const;
  // Precomputed cover_to(window_top_of(v)).
  const std::vector<int>& cover_of(int v) const { return cover_[v]; }

  int pair_count() const { return static_cast<int>(pairs_.size()); }
  const ConePair& pair(int i) const { return pairs_[i]; }
  int find_pair(int piece, int sector) const;
  const std::vector<int>& small_of(int pair_id) const {
    return pieces_[pairs_[pair_id].piece].small;
  }

  // Pairs where v sits on the small side and has a large-side neighbor.
  const std::vector<PairLink>& pairs_with_small(int v) const { return small_links_[v]; }
  // Pairs where v sits on the large side and has a small-side neighbor.
  const std::vector<int>& pairs_with_large(int v) const { return large_links_[v]; }
  // Arm entries aggregated over the cell's vertices (empty for most nodes).
  const std::vector<ArmEntry>& cell_arms(int node_id) const { return arms_[node_id]; }

  struct Totals {
    std::int64_t small_in_pieces = 0;  // sum over pieces of |small|
    std::int64_t small_in_pairs = 0;   // sum over pairs of |small side|
    std::int64_t large_in_pairs = 0;
    std::int64_t post_in_pairs = 0;
    int ext_nodes = 0;
  };
  const Totals& totals() const { return totals_; }

 private:
  struct LevelCells {
    std::vector<std::int64_t> xs;  // distinct ix, ascending
    std::vector<std::vector<std::pair<std::int64_t, int>>> cols;  // (iy, node)
  };

  int get_or_create(const CellKey& key, bool ext);
  void build_base(const DiskInstance& inst);
  void extend_and_link(const DiskInstance& inst);
  void build_paths();
  int dissect(int path_id, int a, int b,
              const std::vector<std::int64_t>& prefix, int parent);
  void classify_small(const DiskInstance& inst);
  void classify_large(const DiskInstance& inst, WeightedSiteSet::Strategy strategy);
  std::vector<int> scan_box(const CellKey& around, int target_level) const;

  std::vector<QuadNode> nodes_;
  std::unordered_map<CellKey, int, CellKeyHash> map_;
  std::unordered_map<int, LevelCells> levels_;
  int root_ = -1;
  int base_node_count_ = 0;
  double off_x_ = 0;  // grid anchor: keys index (x + off_x_, y + off_y_)
  double off_y_ = 0;
  std::vector<int> lev_;
  std::vector<int> mid_cell_;
  std::vector<int> window_top_;
  std::vector<HeavyPath> paths_;
  std::vector<PathPiece> pieces_;
  std::vector<ConePair> pairs_;
  std::unordered_map<std::int64_t, int> pair_map_;
  std::vector<std::vector<int>> cover_;
  std::vector<std::vector<PairLink>> small_links_;
  std::vector<std::vector<int>> large_links_;
  std::vector<std::vector<ArmEntry>> arms_;
  std::vector<std::vector<int>> boxplus_cache_;
  std::vector<char> boxplus_done_;
  Totals totals_;
};

}  // namespace disksssp

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_set>
#include <vector>

#include "disksssp/geometry.hpp"
#include "disksssp/weighted_nn.hpp"

namespace disksssp {

// A vertex with its tentative distance frozen at structure-build time.
struct LabeledVertex {
  int id = -1;
  double x = 0;
  double y = 0;
  double r = 1;
  double dist = 0;

  double k1() const { return dist + r; }
  double k2() const { return -r; }
  double k3() const { return dist; }
};

inline LabeledVertex label(const Vertex& v, double dist) {
  return {v.id, v.x, v.y, v.r, dist};
}

inline Vertex as_vertex(const LabeledVertex& u) { return {u.id, u.x, u.y, u.r}; }

struct Relaxation {
  double value = kInf;  // dist(u) + |uv|
  int prev = -1;
};

// Balanced tree whose leaves are U sorted ascending by (k1 = dist+r, id).
// Every node carries Vor1 (weights k2 = -r) for the leftmost-adjacent-leaf
// descent and Vor2 (weights k3 = dist) for suffix minimization.
class UpdateTree {
 public:
  // Throws std::logic_error if U is empty or contains a non-finite dist.
  explicit UpdateTree(std::vector<LabeledVertex> leaves);

  // Lex-min (dist(u)+|uv|, u.id) over u in U adjacent to v; absent when no
  // u is adjacent. The minimum is found by descending to the adjacent leaf
  // of smallest k1 and then minimizing Vor2 over the k1-suffix it starts;
  // the suffix argmin is adjacent by the radius-monotonicity lemma.
  std::optional<Relaxation> best(const Vertex& v) const;

  // best() thresholded: present only when value < current_dist.
  std::optional<Relaxation> relax_one(const Vertex& v, double current_dist) const;

  const std::vector<LabeledVertex>& leaves() const { return leaves_; }

  struct Node {
    int lo, hi;  // leaf range [lo, hi)
    int left = -1, right = -1;
    WeightedSiteSet vor1, vor2;
  };
  const std::vector<Node>& nodes() const { return nodes_; }
  int root() const { return root_; }

 private:
  int build(int lo, int hi);
  void suffix_min(int t, int pos, const Vertex& v, Relaxation& best_rel) const;

  std::vector<LabeledVertex> leaves_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

// update() switches to the plain double loop below this size; both paths
// share the exact lex-min and strict-improvement semantics.
inline constexpr int kUpdateNaiveCutoff = 32;

// Batched relaxation: for each v in V, dist[v] := min(dist[v], best over
// adjacent u in U of u.dist + |uv|), prev[v] updated on strict improvement.
// U's dist values are the caller's snapshot and stay frozen for the call.
void update(const std::vector<LabeledVertex>& U, const std::vector<int>& V,
            const std::vector<Vertex>& vertices, std::vector<double>& dist,
            std::vector<int>& prev);

// Insert-only Update structure: a binary counter of UpdateTrees with
// power-of-two sizes; equal sizes merge by rebuilding from scratch.
class IncrementalUpdateStructure {
 public:
  // Throws std::logic_error when the id was inserted before.
  void insert(const LabeledVertex& v);

  // Lex-min relaxation across all trees, unthresholded.
  std::optional<Relaxation> best(const Vertex& v) const;

  // Equivalent to update(all inserted, V, ...).
  void query(const std::vector<int>& V, const std::vector<Vertex>& vertices,
             std::vector<double>& dist, std::vector<int>& prev) const;

  std::size_t size() const { return count_; }

  // Leaves written by merge rebuilds (builds of size >= 2); the amortized
  // bound is m * ceil(log2 m) over m inserts.
  std::uint64_t rebuilt_leaves() const { return rebuilt_leaves_; }

  std::vector<std::size_t> tree_sizes() const;  // descending

 private:
  std::vector<std::unique_ptr<UpdateTree>> levels_;  // levels_[i] has 2^i leaves
  std::unordered_set<int> inserted_;
  std::size_t count_ = 0;
  std::uint64_t rebuilt_leaves_ = 0;
};

}  // namespace disksssp

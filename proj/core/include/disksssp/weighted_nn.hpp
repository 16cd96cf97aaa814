#pragma once

#include <cstddef>
#include <vector>

#include "disksssp/geometry.hpp"

namespace disksssp {

struct WeightedSite {
  int id = -1;
  double x = 0;
  double y = 0;
  double w = 0;  // additive weight, may be negative
};

struct NearestHit {
  int id = -1;
  double value = kInf;  // euclidean(q, site) + w(site)
  double x = 0, y = 0, w = 0;  // the winning site, so callers avoid a lookup
  bool found() const { return id >= 0; }
};

// Exact additively-weighted nearest-neighbor search: nearest() minimizes
// euclidean(q, site) + w(site), ties by smallest site id, and always returns
// the same (id, value) as a linear scan. The accelerated strategy is a
// kd-tree searched best-first; a subtree is pruned only when
// dist(q, bbox) + min_w > best, which never discards the optimum because both
// terms lower-bound every site's value under monotone IEEE rounding.
class WeightedSiteSet {
 public:
  enum class Strategy { kTree, kLinear };

  static Strategy default_strategy() {
#ifdef DISKSSSP_DEFAULT_LINEAR_NN
    return Strategy::kLinear;
#else
    return Strategy::kTree;
#endif
  }

  WeightedSiteSet() = default;
  explicit WeightedSiteSet(std::vector<WeightedSite> sites,
                           Strategy strategy = default_strategy());

  // banned_id, when >= 0, removes that one site from consideration — the
  // batched relaxation uses it to exclude a query vertex that is itself a
  // site. Pruning stays sound because the bound lower-bounds every site
  // individually.
  NearestHit nearest(double qx, double qy, int banned_id = -1) const;

  // Diagnostic variant recording every pruned subtree, so tests can re-scan
  // them and verify pruning soundness.
  NearestHit nearest_traced(double qx, double qy, std::vector<int>* pruned_nodes) const;

  // Sites covered by the (internal) node index, for the soundness re-scan.
  std::vector<WeightedSite> node_sites(int node) const;

  std::size_t size() const { return sites_.size(); }
  bool empty() const { return sites_.empty(); }
  const std::vector<WeightedSite>& sites() const { return sites_; }

 private:
  struct Node {
    double x0, y0, x1, y1;  // tight bounding box of the subtree's sites
    double min_w;
    int begin, end;  // site range [begin, end)
    int left = -1, right = -1;
  };

  int build(int begin, int end, int depth);
  NearestHit nearest_impl(double qx, double qy, int banned_id,
                          std::vector<int>* pruned_nodes) const;

  std::vector<WeightedSite> sites_;  // reordered during build
  std::vector<Node> nodes_;
  int root_ = -1;
  Strategy strategy_ = Strategy::kTree;
};

}  // namespace disksssp

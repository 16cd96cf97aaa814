#include "disksssp/update_engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace disksssp {

namespace {

// Shared lex-min on (value, id) so all paths tie-break identically.
bool improves(const Relaxation& cand, const Relaxation& best) {
  return cand.value < best.value || (cand.value == best.value && cand.prev < best.prev);
}

}  // namespace

UpdateTree::UpdateTree(std::vector<LabeledVertex> leaves) : leaves_(std::move(leaves)) {
  if (leaves_.empty()) throw std::logic_error("UpdateTree needs a nonempty U");
  for (const LabeledVertex& u : leaves_) {
    if (!std::isfinite(u.dist)) throw std::logic_error("UpdateTree dist values must be finite");
  }
  std::sort(leaves_.begin(), leaves_.end(), [](const LabeledVertex& a, const LabeledVertex& b) {
    double ka = a.k1(), kb = b.k1();
    return ka != kb ? ka < kb : a.id < b.id;
  });
  nodes_.reserve(2 * leaves_.size());
  root_ = build(0, static_cast<int>(leaves_.size()));
}

int UpdateTree::build(int lo, int hi) {
  int idx = static_cast<int>(nodes_.size());
  nodes_.emplace_back();
  nodes_[idx].lo = lo;
  nodes_[idx].hi = hi;
  std::vector<WeightedSite> vor1_sites(hi - lo), vor2_sites(hi - lo);
  for (int i = lo; i < hi; ++i) {
    const LabeledVertex& u = leaves_[i];
    vor1_sites[i - lo] = {u.id, u.x, u.y, u.k2()};
    vor2_sites[i - lo] = {u.id, u.x, u.y, u.k3()};
  }
  nodes_[idx].vor1 = WeightedSiteSet(std::move(vor1_sites));
  nodes_[idx].vor2 = WeightedSiteSet(std::move(vor2_sites));
  if (hi - lo > 1) {
    int mid = lo + (hi - lo) / 2;
    int l = build(lo, mid);
    int r = build(mid, hi);
    nodes_[idx].left = l;
    nodes_[idx].right = r;
  }
  return idx;
}

std::optional<Relaxation> UpdateTree::best(const Vertex& v) const {
  // The query vertex may itself be a leaf (solver rounds pass overlapping
  // U and V); it is never its own relaxation source, so it is excluded
  // from every index query, matching the u != v edge-predicate contract.
  const int banned = v.id;

  // Descend to the adjacent leaf with the smallest (k1, id): the Vor1 argmin
  // of a subtree minimizes |uv| - r_u, so it is adjacent iff the subtree
  // holds any adjacent vertex. Adjacency itself is always decided by
  // is_edge, the one predicate every solver shares.
  int t = root_;
  while (nodes_[t].left >= 0) {
    const Node& nd = nodes_[t];
    NearestHit hit = nodes_[nd.left].vor1.nearest(v.x, v.y, banned);
    // Vor1 weights are -r, so the winning site's radius is -w exactly.
    bool go_left = hit.found() && is_edge(Vertex{hit.id, hit.x, hit.y, -hit.w}, v);
    t = go_left ? nd.left : nd.right;
  }
  const LabeledVertex& u0 = leaves_[nodes_[t].lo];
  if (u0.id == banned || !is_edge(as_vertex(u0), v)) return std::nullopt;

  // Lex-min of Vor2 over the k1-suffix starting at u0, via its canonical
  // node cover. The suffix argmin is adjacent by the radius-monotonicity
  // lemma, so no edge re-check is needed.
  Relaxation best_rel;
  suffix_min(root_, nodes_[t].lo, v, best_rel);
  return best_rel;
}

void UpdateTree::suffix_min(int t, int pos, const Vertex& v, Relaxation& best_rel) const {
  const Node& nd = nodes_[t];
  if (nd.hi <= pos) return;
  if (pos <= nd.lo) {
    NearestHit hit = nd.vor2.nearest(v.x, v.y, v.id);
    if (hit.found() && improves({hit.value, hit.id}, best_rel)) {
      best_rel = {hit.value, hit.id};
    }
    return;
  }
  suffix_min(nd.left, pos, v, best_rel);
  suffix_min(nd.right, pos, v, best_rel);
}

std::optional<Relaxation> UpdateTree::relax_one(const Vertex& v, double current_dist) const {
  auto rel = best(v);
  if (!rel || !(rel->value < current_dist)) return std::nullopt;
  return rel;
}

void update(const std::vector<LabeledVertex>& U, const std::vector<int>& V,
            const std::vector<Vertex>& vertices, std::vector<double>& dist,
            std::vector<int>& prev) {
  if (U.empty() || V.empty()) return;
  if (static_cast<int>(U.size()) <= kUpdateNaiveCutoff) {
    for (int vid : V) {
      const Vertex& v = vertices[vid];
      Relaxation best_rel;
      for (const LabeledVertex& u : U) {
        if (u.id == vid || !is_edge(as_vertex(u), v)) continue;
        Relaxation cand{u.dist + edge_weight(as_vertex(u), v), u.id};
        if (improves(cand, best_rel)) best_rel = cand;
      }
      if (best_rel.value < dist[vid]) {
        dist[vid] = best_rel.value;
        prev[vid] = best_rel.prev;
      }
    }
    return;
  }
  UpdateTree tree(U);
  for (int vid : V) {
    auto rel = tree.best(vertices[vid]);
    if (rel && rel->value < dist[vid]) {
      dist[vid] = rel->value;
      prev[vid] = rel->prev;
    }
  }
}

void IncrementalUpdateStructure::insert(const LabeledVertex& v) {
  if (!inserted_.insert(v.id).second) {
    throw std::logic_error("duplicate insert of vertex " + std::to_string(v.id));
  }
  std::vector<LabeledVertex> pending{v};
  std::size_t level = 0;
  while (level < levels_.size() && levels_[level]) {
    const auto& leaves = levels_[level]->leaves();
    pending.insert(pending.end(), leaves.begin(), leaves.end());
    levels_[level].reset();
    ++level;
  }
  if (level >= levels_.size()) levels_.resize(level + 1);
  if (pending.size() >= 2) rebuilt_leaves_ += pending.size();
  levels_[level] = std::make_unique<UpdateTree>(std::move(pending));
  ++count_;
}

std::optional<Relaxation> IncrementalUpdateStructure::best(const Vertex& v) const {
  Relaxation best_rel;
  bool found = false;
  for (const auto& tree : levels_) {
    if (!tree) continue;
    auto rel = tree->best(v);
    if (rel && improves(*rel, best_rel)) {
      best_rel = *rel;
      found = true;
    }
  }
  if (!found) return std::nullopt;
  return best_rel;
}

void IncrementalUpdateStructure::query(const std::vector<int>& V,
                                       const std::vector<Vertex>& vertices,
                                       std::vector<double>& dist, std::vector<int>& prev) const {
  for (int vid : V) {
    auto rel = best(vertices[vid]);
    if (rel && rel->value < dist[vid]) {
      dist[vid] = rel->value;
      prev[vid] = rel->prev;
    }
  }
}

std::vector<std::size_t> IncrementalUpdateStructure::tree_sizes() const {
  std::vector<std::size_t> out;
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    if (*it) out.push_back((*it)->leaves().size());
  }
  return out;
}

}  // namespace disksssp

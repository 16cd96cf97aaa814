#include "disksssp/weighted_nn.hpp"

#include <algorithm>
#include <cmath>

namespace disksssp {

namespace {

constexpr int kLeafSize = 16;

double box_dist(double qx, double qy, double x0, double y0, double x1, double y1) {
  double dx = qx < x0 ? x0 - qx : (qx > x1 ? qx - x1 : 0.0);
  double dy = qy < y0 ? y0 - qy : (qy > y1 ? qy - y1 : 0.0);
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace

WeightedSiteSet::WeightedSiteSet(std::vector<WeightedSite> sites, Strategy strategy)
    : sites_(std::move(sites)), strategy_(strategy) {
  // A set that fits one leaf gains nothing from a node: the scan answers
  // directly, and skipping the node array keeps tiny sets allocation-free.
  if (strategy_ == Strategy::kTree && static_cast<int>(sites_.size()) > kLeafSize) {
    nodes_.reserve(2 * sites_.size() / kLeafSize + 2);
    root_ = build(0, static_cast<int>(sites_.size()), 0);
  }
}

int WeightedSiteSet::build(int begin, int end, int depth) {
  Node node;
  node.begin = begin;
  node.end = end;
  node.x0 = node.y0 = kInf;
  node.x1 = node.y1 = -kInf;
  node.min_w = kInf;
  for (int i = begin; i < end; ++i) {
    const WeightedSite& s = sites_[i];
    node.x0 = std::min(node.x0, s.x);
    node.x1 = std::max(node.x1, s.x);
    node.y0 = std::min(node.y0, s.y);
    node.y1 = std::max(node.y1, s.y);
    node.min_w = std::min(node.min_w, s.w);
  }
  int idx = static_cast<int>(nodes_.size());
  nodes_.push_back(node);
  if (end - begin > kLeafSize) {
    int mid = begin + (end - begin) / 2;
    bool by_x = depth % 2 == 0;
    std::nth_element(sites_.begin() + begin, sites_.begin() + mid, sites_.begin() + end,
                     [by_x](const WeightedSite& a, const WeightedSite& b) {
                       double ka = by_x ? a.x : a.y;
                       double kb = by_x ? b.x : b.y;
                       return ka != kb ? ka < kb : a.id < b.id;
                     });
    int left = build(begin, mid, depth + 1);
    int right = build(mid, end, depth + 1);
    nodes_[idx].left = left;
    nodes_[idx].right = right;
  }
  return idx;
}

NearestHit WeightedSiteSet::nearest(double qx, double qy, int banned_id) const {
  return nearest_impl(qx, qy, banned_id, nullptr);
}

NearestHit WeightedSiteSet::nearest_traced(double qx, double qy,
                                           std::vector<int>* pruned_nodes) const {
  return nearest_impl(qx, qy, -1, pruned_nodes);
}

NearestHit WeightedSiteSet::nearest_impl(double qx, double qy, int banned_id,
                                         std::vector<int>* pruned_nodes) const {
  NearestHit best;
  if (sites_.empty()) return best;

  auto scan = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      const WeightedSite& s = sites_[i];
      if (s.id == banned_id) continue;
      double value = center_dist(qx, qy, s.x, s.y) + s.w;
      if (value < best.value || (value == best.value && s.id < best.id)) {
        best = {s.id, value, s.x, s.y, s.w};
      }
    }
  };

  if (strategy_ == Strategy::kLinear || root_ < 0) {
    scan(0, static_cast<int>(sites_.size()));
    return best;
  }

  // Iterative best-first descent; strict-greater pruning keeps exact ties
  // reachable so the smallest id among argmins is always found.
  auto bound_of = [&](int node) {
    const Node& nd = nodes_[node];
    return box_dist(qx, qy, nd.x0, nd.y0, nd.x1, nd.y1) + nd.min_w;
  };
  // Depth-first order keeps the open list at most one entry per level; 96
  // levels cover any splittable input, so a fixed buffer avoids a per-query
  // allocation on this hot path.
  std::pair<double, int> stack[96];
  int top = 0;
  stack[top++] = {bound_of(root_), root_};
  while (top > 0) {
    auto [bound, idx] = stack[--top];
    if (bound > best.value) {
      if (pruned_nodes) pruned_nodes->push_back(idx);
      continue;
    }
    const Node& nd = nodes_[idx];
    if (nd.left < 0) {
      scan(nd.begin, nd.end);
      continue;
    }
    double bl = bound_of(nd.left);
    double br = bound_of(nd.right);
    // Push the farther child first so the nearer one is explored next.
    if (bl <= br) {
      stack[top++] = {br, nd.right};
      stack[top++] = {bl, nd.left};
    } else {
      stack[top++] = {bl, nd.left};
      stack[top++] = {br, nd.right};
    }
  }
  return best;
}

std::vector<WeightedSite> WeightedSiteSet::node_sites(int node) const {
  const Node& nd = nodes_[node];
  return std::vector<WeightedSite>(sites_.begin() + nd.begin, sites_.begin() + nd.end);
}

}  // namespace disksssp

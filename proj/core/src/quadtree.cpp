#include "disksssp/quadtree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

#include "disksssp/geometry.hpp"

namespace disksssp {

namespace {

// b must be positive; rounds toward -infinity / +infinity.
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return q * b > a ? q - 1 : q;
}
std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// Half the side length of the fixed-ratio box around a cell center, in
// doubled-index units at the cell's own level: the box has diameter
// 8 * kBand^2 * |c|.
constexpr std::int64_t kBoxHalf = std::int64_t{1} << (3 + 2 * kBandBits);

CellKey ancestor_key(const CellKey& key, int level) {
  int up = level - key.level;
  return CellKey{level, key.ix >> up, key.iy >> up};
}

}  // namespace

int band_level(double r) { return std::ilogb(r) - kBandBits; }

double cell_diameter(int level) { return std::ldexp(1.0, level); }

double cell_center_x(const CellKey& key) {
  return std::ldexp(static_cast<double>(key.ix) + 0.5, key.level) / std::sqrt(2.0);
}

double cell_center_y(const CellKey& key) {
  return std::ldexp(static_cast<double>(key.iy) + 0.5, key.level) / std::sqrt(2.0);
}

int cone_sector(double apex_x, double apex_y, double px, double py) {
  double t = std::atan2(py - apex_y, px - apex_x);
  if (t < 0) t += 2 * std::numbers::pi_v<double>;
  int s = static_cast<int>(t / (2 * std::numbers::pi_v<double> / kSectorCount));
  if (s < 0) s = 0;
  if (s >= kSectorCount) s = kSectorCount - 1;
  return s;
}

int QuadtreePaths::find(const CellKey& key) const {
  auto it = map_.find(key);
  return it == map_.end() ? -1 : it->second;
}

CellKey QuadtreePaths::key_at(double x, double y, int level) const {
  return cell_key_at(x + off_x_, y + off_y_, level);
}

double QuadtreePaths::center_x(const CellKey& key) const {
  return cell_center_x(key) - off_x_;
}

double QuadtreePaths::center_y(const CellKey& key) const {
  return cell_center_y(key) - off_y_;
}

int QuadtreePaths::find_pair(int piece, int sector) const {
  auto it = pair_map_.find(static_cast<std::int64_t>(piece) * kSectorCount + sector);
  return it == pair_map_.end() ? -1 : it->second;
}

int QuadtreePaths::get_or_create(const CellKey& key, bool ext) {
  auto [it, inserted] = map_.try_emplace(key, static_cast<int>(nodes_.size()));
  if (inserted) {
    QuadNode nd;
    nd.key = key;
    nd.ext = ext;
    nodes_.push_back(std::move(nd));
  }
  return it->second;
}

void QuadtreePaths::build(const DiskInstance& inst, WeightedSiteSet::Strategy strategy) {
  nodes_.clear();
  map_.clear();
  levels_.clear();
  paths_.clear();
  pieces_.clear();
  pairs_.clear();
  pair_map_.clear();
  totals_ = Totals{};

  const int n = inst.n();
  lev_.resize(n);
  for (int v = 0; v < n; ++v) lev_[v] = band_level(inst.vertices[v].r);

  // Dyadic cells on fixed axes never merge opposite signs into one cell, so
  // anchor the grid to keep every coordinate nonnegative. Sets that already
  // are keep the natural origin anchor.
  double min_x = inst.vertices[0].x, min_y = inst.vertices[0].y;
  for (const Vertex& p : inst.vertices) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
  }
  off_x_ = min_x < 0 ? 1.0 - min_x : 0.0;
  off_y_ = min_y < 0 ? 1.0 - min_y : 0.0;

  if (n == 1) {
    root_ = get_or_create(key_at(inst.vertices[0].x, inst.vertices[0].y, lev_[0]),
                          false);
    base_node_count_ = 1;
  } else {
    build_base(inst);
  }
  extend_and_link(inst);
  build_paths();
  classify_small(inst);
  classify_large(inst, strategy);

  boxplus_cache_.assign(nodes_.size(), {});
  boxplus_done_.assign(nodes_.size(), 0);
}

void QuadtreePaths::build_base(const DiskInstance& inst) {
  const int n = inst.n();
  int lev_max = lev_[0], lev_min = lev_[0];
  for (int v = 1; v < n; ++v) {
    lev_max = std::max(lev_max, lev_[v]);
    lev_min = std::min(lev_min, lev_[v]);
  }

  auto single_cell_at = [&](const std::vector<int>& pts, int level) {
    CellKey k0 = key_at(inst.vertices[pts[0]].x, inst.vertices[pts[0]].y, level);
    for (int p : pts) {
      CellKey k = key_at(inst.vertices[p].x, inst.vertices[p].y, level);
      if (!(k == k0)) return false;
    }
    return true;
  };

  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  int l0 = lev_min;
  while (!single_cell_at(all, l0)) ++l0;
  const int root_level = std::max(l0, lev_max + kBandBits);
  root_ = get_or_create(
      key_at(inst.vertices[0].x, inst.vertices[0].y, root_level), false);

  struct Task {
    std::vector<int> pts;
    CellKey enclosing;
  };
  std::vector<Task> stack;
  stack.push_back({std::move(all), nodes_[root_].key});
  while (!stack.empty()) {
    Task t = std::move(stack.back());
    stack.pop_back();
    if (t.pts.size() == 1) {
      get_or_create(t.enclosing, false);
      continue;
    }
    int floor_level = lev_[t.pts[0]];
    for (int p : t.pts) floor_level = std::min(floor_level, lev_[p]);
    if (t.enclosing.level <= floor_level) {
      get_or_create(t.enclosing, false);
      continue;
    }
    int le = floor_level;
    while (!single_cell_at(t.pts, le)) ++le;
    const Vertex& rep = inst.vertices[t.pts[0]];
    if (le == floor_level) {
      // Not separable above the smallest mid-cell level: keep one leaf there.
      get_or_create(key_at(rep.x, rep.y, le), false);
      continue;
    }
    get_or_create(key_at(rep.x, rep.y, le), false);
    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<int>> groups;
    for (int p : t.pts) {
      CellKey k = key_at(inst.vertices[p].x, inst.vertices[p].y, le - 1);
      groups[{k.ix, k.iy}].push_back(p);
    }
    for (auto& [ixy, pts] : groups)
      stack.push_back({std::move(pts), CellKey{le - 1, ixy.first, ixy.second}});
  }
  base_node_count_ = static_cast<int>(nodes_.size());
  if (base_node_count_ > 2 * n)
    throw std::logic_error("base split tree exceeded its node budget");
}

void QuadtreePaths::extend_and_link(const DiskInstance& inst) {
  const int n = inst.n();
  const int root_level = nodes_[root_].key.level;

  for (int v = 0; v < n; ++v) {
    const Vertex& p = inst.vertices[v];
    get_or_create(key_at(p.x, p.y, lev_[v]), true);
    // A node at every level of the window above the mid cell, so that every
    // tree edge on a root-to-window-top path is a unit-level step and piece
    // windows tile without gaps.
    for (int l = lev_[v] + kBandBits; l <= root_level; ++l)
      get_or_create(key_at(p.x, p.y, l), true);
  }

  const int m = static_cast<int>(nodes_.size());
  totals_.ext_nodes = 0;
  for (const QuadNode& nd : nodes_)
    if (nd.ext) ++totals_.ext_nodes;

  for (int i = 0; i < m; ++i) {
    nodes_[i].parent = -1;
    nodes_[i].children.clear();
    nodes_[i].subtree = 1;
    nodes_[i].mid.clear();
  }
  for (int i = 0; i < m; ++i) {
    if (i == root_) continue;
    for (int l = nodes_[i].key.level + 1; l <= root_level; ++l) {
      int a = find(ancestor_key(nodes_[i].key, l));
      if (a >= 0) {
        nodes_[i].parent = a;
        break;
      }
    }
    if (nodes_[i].parent < 0) throw std::logic_error("disconnected quadtree node");
  }
  for (int i = 0; i < m; ++i)
    if (i != root_) nodes_[nodes_[i].parent].children.push_back(i);
  std::vector<int> by_level(m);
  for (int i = 0; i < m; ++i) by_level[i] = i;
  std::sort(by_level.begin(), by_level.end(), [&](int a, int b) {
    if (nodes_[a].key.level != nodes_[b].key.level)
      return nodes_[a].key.level < nodes_[b].key.level;
    return a < b;
  });
  for (int i : by_level) {
    std::sort(nodes_[i].children.begin(), nodes_[i].children.end(), [&](int a, int b) {
      if (nodes_[a].key.ix != nodes_[b].key.ix) return nodes_[a].key.ix < nodes_[b].key.ix;
      if (nodes_[a].key.iy != nodes_[b].key.iy) return nodes_[a].key.iy < nodes_[b].key.iy;
      // Siblings at different levels can share (ix, iy); the level breaks the
      // tie so the order never depends on insertion history.
      return nodes_[a].key.level < nodes_[b].key.level;
    });
    if (i != root_) nodes_[nodes_[i].parent].subtree += nodes_[i].subtree;
    if (nodes_[i].children.size() == 1 && !nodes_[i].ext &&
        !nodes_[nodes_[i].children[0]].ext && i != root_)
      throw std::logic_error("single-child node outside extension chains");
  }

  mid_cell_.assign(n, -1);
  window_top_.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    const Vertex& p = inst.vertices[v];
    mid_cell_[v] = find(key_at(p.x, p.y, lev_[v]));
    nodes_[mid_cell_[v]].mid.push_back(v);
    window_top_[v] =
        n == 1 ? root_ : find(key_at(p.x, p.y, lev_[v] + kBandBits));
  }

  for (int i = 0; i < m; ++i) {
    LevelCells& lc = levels_[nodes_[i].key.level];
    lc.xs.push_back(nodes_[i].key.ix);
  }
  for (auto& [level, lc] : levels_) {
    std::sort(lc.xs.begin(), lc.xs.end());
    lc.xs.erase(std::unique(lc.xs.begin(), lc.xs.end()), lc.xs.end());
    lc.cols.assign(lc.xs.size(), {});
  }
  for (int i = 0; i < m; ++i) {
    LevelCells& lc = levels_[nodes_[i].key.level];
    auto it = std::lower_bound(lc.xs.begin(), lc.xs.end(), nodes_[i].key.ix);
    lc.cols[it - lc.xs.begin()].push_back({nodes_[i].key.iy, i});
  }
  for (auto& [level, lc] : levels_)
    for (auto& col : lc.cols) std::sort(col.begin(), col.end());
}

void QuadtreePaths::build_paths() {
  const int m = static_cast<int>(nodes_.size());
  for (int i = 0; i < m; ++i) {
    const QuadNode& nd = nodes_[i];
    if (nd.children.empty()) continue;
    int best = nd.children[0];
    for (int c : nd.children)
      if (nodes_[c].subtree > nodes_[best].subtree) best = c;
    nodes_[i].heavy = best;
  }
  for (int i = 0; i < m; ++i) {
    const QuadNode& nd = nodes_[i];
    if (nd.parent != -1 && nodes_[nd.parent].heavy == i) continue;
    int pid = static_cast<int>(paths_.size());
    paths_.emplace_back();
    HeavyPath& hp = paths_.back();
    for (int cur = i; cur != -1; cur = nodes_[cur].heavy) {
      nodes_[cur].path = pid;
      nodes_[cur].pos = static_cast<int>(hp.nodes.size());
      hp.nodes.push_back(cur);
    }
  }

  for (int pid = 0; pid < static_cast<int>(paths_.size()); ++pid) {
    HeavyPath& hp = paths_[pid];
    const int len = static_cast<int>(hp.nodes.size());
    hp.leaf_piece.assign(len, -1);
    // Node weights: share of the subtree not passed on down the path. The
    // bottom node is a leaf, so the weights sum to the top node's subtree.
    std::vector<std::int64_t> prefix(len);
    for (int j = 0; j < len; ++j) {
      std::int64_t w = nodes_[hp.nodes[j]].subtree -
                       (j + 1 < len ? nodes_[hp.nodes[j + 1]].subtree : 0);
      prefix[j] = w + (j ? prefix[j - 1] : 0);
    }
    if (nodes_[hp.nodes[len - 1]].subtree != 1)
      throw std::logic_error("heavy path does not end at a leaf");
    hp.root_piece = dissect(pid, 0, len - 1, prefix, -1);
  }
}

// Weighted-median dissection: split so that each half carries at least half
// of the remaining weight on the right-recursion side; every prefix [0, t]
// of the path is then covered by O(log total weight) intervals.
int QuadtreePaths::dissect(int path_id, int a, int b,
                           const std::vector<std::int64_t>& prefix, int parent) {
  struct Frame {
    int a, b, parent;
    bool right_side;
  };
  std::vector<Frame> stack;
  stack.push_back({a, b, parent, false});
  int result = -1;
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    int id = static_cast<int>(pieces_.size());
    pieces_.emplace_back();
    PathPiece& pc = pieces_.back();
    pc.path = path_id;
    pc.begin = f.a;
    pc.end = f.b;
    pc.parent = f.parent;
    pc.top_node = paths_[path_id].nodes[f.a];
    pc.bottom_node = paths_[path_id].nodes[f.b];
    if (f.parent == -1) result = id;
    else if (f.right_side) pieces_[f.parent].right = id;
    else pieces_[f.parent].left = id;
    if (f.a == f.b) {
      paths_[path_id].leaf_piece[f.a] = id;
      continue;
    }
    std::int64_t before = f.a ? prefix[f.a - 1] : 0;
    std::int64_t total = prefix[f.b] - before;
    int s = f.a;
    while (2 * (prefix[s] - before) < total) ++s;
    s = std::min(s, f.b - 1);
    pieces_[id].split = s;
    // Push right first so the left interval gets the next id (pre-order).
    stack.push_back({s + 1, f.b, id, true});
    stack.push_back({f.a, s, id, false});
  }
  return result;
}

std::vector<int> QuadtreePaths::cover_to(int node_id) const {
  std::vector<int> out;
  int cur = node_id;
  while (cur != -1) {
    const QuadNode& nd = nodes_[cur];
    int t = nd.pos;
    int q = paths_[nd.path].root_piece;
    while (true) {
      const PathPiece& pc = pieces_[q];
      if (t == pc.end) {
        out.push_back(q);
        break;
      }
      if (t <= pc.split) {
        q = pc.left;
      } else {
        out.push_back(pc.left);
        q = pc.right;
      }
    }
    cur = nodes_[paths_[nd.path].nodes[0]].parent;
  }
  return out;
}

std::vector<int> QuadtreePaths::pieces_containing(int node_id) const {
  std::vector<int> out;
  const QuadNode& nd = nodes_[node_id];
  for (int q = paths_[nd.path].leaf_piece[nd.pos]; q != -1; q = pieces_[q].parent)
    out.push_back(q);
  return out;
}

void QuadtreePaths::classify_small(const DiskInstance& inst) {
  const int n = inst.n();
  cover_.assign(n, {});
  for (int v = 0; v < n; ++v) {
    cover_[v] = cover_to(window_top_[v]);
    for (int q : cover_[v]) pieces_[q].small.push_back(v);
    totals_.small_in_pieces += static_cast<std::int64_t>(cover_[v].size());
  }
}

std::vector<int> QuadtreePaths::scan_box(const CellKey& around, int target_level) const {
  std::vector<int> out;
  auto lit = levels_.find(target_level);
  if (lit == levels_.end()) return out;
  const LevelCells& lc = lit->second;
  const int e = target_level - around.level + 1;
  auto range1d = [&](std::int64_t idx) -> std::pair<std::int64_t, std::int64_t> {
    std::int64_t lo = 2 * idx + 1 - kBoxHalf, hi = 2 * idx + 1 + kBoxHalf;
    if (e >= 0)
      return {ceil_div(lo, std::int64_t{1} << e),
              floor_div(hi, std::int64_t{1} << e) - 1};
    return {lo << -e, (hi << -e) - 1};
  };
  auto [xlo, xhi] = range1d(around.ix);
  auto [ylo, yhi] = range1d(around.iy);
  if (xlo > xhi || ylo > yhi) return out;
  auto xs = std::lower_bound(lc.xs.begin(), lc.xs.end(), xlo);
  for (; xs != lc.xs.end() && *xs <= xhi; ++xs) {
    const auto& col = lc.cols[xs - lc.xs.begin()];
    auto it = std::lower_bound(col.begin(), col.end(),
                               std::make_pair(ylo, std::numeric_limits<int>::min()));
    for (; it != col.end() && it->first <= yhi; ++it) out.push_back(it->second);
  }
  return out;
}

const std::vector<int>& QuadtreePaths::boxplus(int node_id) {
  if (boxplus_done_[node_id]) return boxplus_cache_[node_id];
  const CellKey key = nodes_[node_id].key;
  std::vector<int> out;
  for (int l = key.level - kBandBits; l <= key.level + kBandBits; ++l) {
    std::vector<int> part = scan_box(key, l);
    out.insert(out.end(), part.begin(), part.end());
  }
  boxplus_cache_[node_id] = std::move(out);
  boxplus_done_[node_id] = 1;
  return boxplus_cache_[node_id];
}

void QuadtreePaths::classify_large(const DiskInstance& inst,
                                   WeightedSiteSet::Strategy strategy) {
  const int n = inst.n();
  small_links_.assign(n, {});
  large_links_.assign(n, {});
  arms_.assign(nodes_.size(), {});

  for (int u = 0; u < n; ++u) {
    const Vertex& vu = inst.vertices[u];
    const CellKey cu = nodes_[mid_cell_[u]].key;
    // Any pair whose cone can take u has a piece passing through a cell of
    // u's own level inside the box around u, so the same-level slice of the
    // box plus each hit's dissection chain enumerates all candidates.
    for (int c2 : scan_box(cu, cu.level)) {
      const QuadNode& hit = nodes_[c2];
      for (int q = paths_[hit.path].leaf_piece[hit.pos]; q != -1;
           q = pieces_[q].parent) {
        const PathPiece& pc = pieces_[q];
        if (pc.small.empty()) continue;
        const CellKey bot = nodes_[pc.bottom_node].key;
        const double ax = center_x(bot), ay = center_y(bot);
        const double cone_r =
            std::ldexp(3.0, nodes_[pc.top_node].key.level + kBandBits);
        const double dctr = center_dist(vu.x, vu.y, ax, ay);
        if (dctr > cone_r) continue;
        const double gap = vu.r - dctr;
        const double five = std::ldexp(5.0, bot.level);
        const bool is_post = gap >= five;
        if (!is_post && gap <= -five) continue;
        const int sector = cone_sector(ax, ay, vu.x, vu.y);
        const std::int64_t pkey =
            static_cast<std::int64_t>(q) * kSectorCount + sector;
        auto [it, inserted] = pair_map_.try_emplace(pkey, static_cast<int>(pairs_.size()));
        if (inserted) {
          pairs_.emplace_back();
          ConePair& cp = pairs_.back();
          cp.piece = q;
          cp.sector = sector;
          cp.cell = pc.bottom_node;
          cp.level = bot.level;
          cp.apex_x = ax;
          cp.apex_y = ay;
          cp.radius = cone_r;
        }
        if (is_post) pairs_[it->second].post.push_back(u);
        else pairs_[it->second].large.push_back(u);
      }
    }
  }

  // Adjacency structure per pair: who on the small side can reach the large
  // side, and the minimum-radius large neighbor of each small vertex.
  struct Seg {
    int lo, hi;  // over large_by_r [lo, hi)
    int left = -1, right = -1;
    WeightedSiteSet nn;
  };
  for (int pid = 0; pid < static_cast<int>(pairs_.size()); ++pid) {
    ConePair& cp = pairs_[pid];
    const std::vector<int>& smalls = pieces_[cp.piece].small;
    totals_.small_in_pairs += static_cast<std::int64_t>(smalls.size());
    totals_.large_in_pairs += static_cast<std::int64_t>(cp.large.size());
    totals_.post_in_pairs += static_cast<std::int64_t>(cp.post.size());

    cp.large_by_r.reserve(cp.large.size());
    for (int u : cp.large) cp.large_by_r.push_back({inst.vertices[u].r, u});
    std::sort(cp.large_by_r.begin(), cp.large_by_r.end());

    if (cp.large.empty()) continue;
    std::vector<WeightedSite> ssites;
    ssites.reserve(smalls.size());
    for (int w : smalls) {
      const Vertex& vw = inst.vertices[w];
      ssites.push_back({w, vw.x, vw.y, -vw.r});
    }
    WeightedSiteSet small_nn(std::move(ssites), strategy);
    for (int u : cp.large) {
      const Vertex& vu = inst.vertices[u];
      NearestHit hit = small_nn.nearest(vu.x, vu.y);
      if (hit.found() && hit.value <= vu.r) large_links_[u].push_back(pid);
    }

    std::vector<Seg> segs;
    auto build_seg = [&](auto&& self, int lo, int hi) -> int {
      int id = static_cast<int>(segs.size());
      segs.emplace_back();
      segs[id].lo = lo;
      segs[id].hi = hi;
      std::vector<WeightedSite> sites;
      sites.reserve(hi - lo);
      for (int j = lo; j < hi; ++j) {
        const Vertex& vv = inst.vertices[cp.large_by_r[j].second];
        sites.push_back({vv.id, vv.x, vv.y, -vv.r});
      }
      segs[id].nn = WeightedSiteSet(std::move(sites), strategy);
      if (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        segs[id].left = self(self, lo, mid);
        segs[id].right = self(self, mid, hi);
      }
      return id;
    };
    build_seg(build_seg, 0, static_cast<int>(cp.large_by_r.size()));

    for (int w : smalls) {
      const Vertex& vw = inst.vertices[w];
      NearestHit root_hit = segs[0].nn.nearest(vw.x, vw.y);
      if (!root_hit.found() || root_hit.value > vw.r) continue;
      int cur = 0;
      while (segs[cur].left != -1) {
        NearestHit lh = segs[segs[cur].left].nn.nearest(vw.x, vw.y);
        cur = (lh.found() && lh.value <= vw.r) ? segs[cur].left : segs[cur].right;
      }
      const auto [r_min, v_min] = cp.large_by_r[segs[cur].lo];
      small_links_[w].push_back({pid, r_min, v_min});
      cp.small_by_rv.push_back({r_min, w});
    }
    std::sort(cp.small_by_rv.begin(), cp.small_by_rv.end());
  }

  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
    if (nodes_[i].mid.empty()) continue;
    std::map<int, double> best;
    for (int v : nodes_[i].mid)
      for (const PairLink& link : small_links_[v]) {
        auto [it, inserted] = best.try_emplace(link.pair, link.radius);
        if (!inserted && link.radius < it->second) it->second = link.radius;
      }
    arms_[i].reserve(best.size());
    for (auto [pair, radius] : best) arms_[i].push_back({pair, radius});
  }
}

}  // namespace disksssp

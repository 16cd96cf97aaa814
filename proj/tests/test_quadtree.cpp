#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "disksssp/geometry.hpp"
#include "disksssp/grid.hpp"
#include "disksssp/instance.hpp"
#include "disksssp/quadtree.hpp"
#include "support/naive.hpp"

using namespace disksssp;
using disksssp::testing::random_instance;
using disksssp::testing::u01;

namespace {

int ceil_log2(std::int64_t n) {
  int k = 0;
  while ((std::int64_t{1} << k) < n) ++k;
  return k;
}

CellKey ancestor_at(const CellKey& key, int level) {
  return CellKey{level, key.ix >> (level - key.level), key.iy >> (level - key.level)};
}

// Ancestor chain of a node, from the node itself up to the root.
std::vector<int> chain_to_root(const QuadtreePaths& qt, int node) {
  std::vector<int> out;
  for (int cur = node; cur != -1; cur = qt.node(cur).parent) out.push_back(cur);
  return out;
}

void check_tree(QuadtreePaths& qt, const DiskInstance& inst) {
  const int m = qt.node_count();
  const int n = inst.n();
  REQUIRE(m >= 1);
  CHECK(qt.base_node_count() <= 2 * n);

  const int root = qt.root();
  CHECK(qt.node(root).parent == -1);
  for (int i = 0; i < m; ++i) {
    const QuadNode& nd = qt.node(i);
    CAPTURE(i);
    CHECK(qt.find(nd.key) == i);
    if (i != root) {
      REQUIRE(nd.parent >= 0);
      const QuadNode& pa = qt.node(nd.parent);
      CHECK(pa.key.level > nd.key.level);
      CHECK(ancestor_at(nd.key, pa.key.level) == pa.key);
      // The parent is the nearest materialized ancestor: no node strictly
      // between them on the ancestor chain.
      for (int l = nd.key.level + 1; l < pa.key.level; ++l)
        CHECK(qt.find(ancestor_at(nd.key, l)) == -1);
    }
    std::int64_t sub = 1;
    for (std::size_t j = 0; j < nd.children.size(); ++j) {
      const QuadNode& ch = qt.node(nd.children[j]);
      CHECK(ch.parent == i);
      if (j) {
        const QuadNode& pr = qt.node(nd.children[j - 1]);
        CHECK(std::make_tuple(pr.key.ix, pr.key.iy, pr.key.level) <
              std::make_tuple(ch.key.ix, ch.key.iy, ch.key.level));
      }
      sub += ch.subtree;
    }
    CHECK(nd.subtree == sub);
    if (nd.children.empty()) {
      CHECK(nd.heavy == -1);
    } else {
      int best = nd.children[0];
      for (int c : nd.children)
        if (qt.node(c).subtree > qt.node(best).subtree) best = c;
      CHECK(nd.heavy == best);
    }
    if (nd.children.size() == 1 && i != root)
      CHECK((nd.ext || qt.node(nd.children[0]).ext));
  }

  for (int v = 0; v < n; ++v) {
    const Vertex& p = inst.vertices[v];
    const int lv = band_level(p.r);
    CHECK(qt.level_of_vertex(v) == lv);
    const QuadNode& mc = qt.node(qt.mid_cell_of(v));
    CHECK(mc.key == qt.key_at(p.x, p.y, lv));
    CHECK(std::find(mc.mid.begin(), mc.mid.end(), v) != mc.mid.end());
    CHECK(p.r >= kBand * cell_diameter(lv));
    CHECK(p.r < 2 * kBand * cell_diameter(lv));
    const QuadNode& wt = qt.node(qt.window_top_of(v));
    if (n > 1) {
      CHECK(wt.key == qt.key_at(p.x, p.y, lv + kBandBits));
      // Unit-level parent steps all the way to the root, so piece windows
      // tile the band range without gaps.
      for (int cur = qt.window_top_of(v); cur != qt.root();) {
        int pa = qt.node(cur).parent;
        CHECK(qt.node(pa).key.level == qt.node(cur).key.level + 1);
        cur = pa;
      }
    }
  }

  // Heavy paths partition the nodes; each runs top to bottom ending at a leaf.
  std::vector<char> seen(m, 0);
  for (int pid = 0; pid < qt.path_count(); ++pid) {
    const HeavyPath& hp = qt.path(pid);
    REQUIRE(!hp.nodes.empty());
    for (std::size_t j = 0; j < hp.nodes.size(); ++j) {
      const QuadNode& nd = qt.node(hp.nodes[j]);
      CHECK(nd.path == pid);
      CHECK(nd.pos == static_cast<int>(j));
      CHECK(!seen[hp.nodes[j]]);
      seen[hp.nodes[j]] = 1;
      if (j) CHECK(qt.node(hp.nodes[j - 1]).heavy == hp.nodes[j]);
    }
    int top = hp.nodes.front(), bot = hp.nodes.back();
    CHECK((top == root || qt.node(qt.node(top).parent).heavy != top));
    CHECK(qt.node(bot).children.empty());

    // Piece tree over the path: contiguous intervals, children split at the
    // weighted median, leaves are single positions.
    const int len = static_cast<int>(hp.nodes.size());
    REQUIRE(hp.root_piece >= 0);
    std::vector<int> stack{hp.root_piece};
    int leaves_seen = 0;
    while (!stack.empty()) {
      int q = stack.back();
      stack.pop_back();
      const PathPiece& pc = qt.piece(q);
      CHECK(pc.path == pid);
      CHECK(pc.begin <= pc.end);
      CHECK(pc.top_node == hp.nodes[pc.begin]);
      CHECK(pc.bottom_node == hp.nodes[pc.end]);
      if (pc.begin == pc.end) {
        CHECK(hp.leaf_piece[pc.begin] == q);
        CHECK(pc.left == -1);
        CHECK(pc.right == -1);
        ++leaves_seen;
        continue;
      }
      REQUIRE(pc.left >= 0);
      REQUIRE(pc.right >= 0);
      CHECK(pc.begin <= pc.split);
      CHECK(pc.split < pc.end);
      CHECK(qt.piece(pc.left).begin == pc.begin);
      CHECK(qt.piece(pc.left).end == pc.split);
      CHECK(qt.piece(pc.right).begin == pc.split + 1);
      CHECK(qt.piece(pc.right).end == pc.end);
      CHECK(qt.piece(pc.left).parent == q);
      CHECK(qt.piece(pc.right).parent == q);
      stack.push_back(pc.left);
      stack.push_back(pc.right);
    }
    CHECK(leaves_seen == len);
  }
  for (int i = 0; i < m; ++i) CHECK(seen[i]);

  // Covers: for every node, the cover pieces are disjoint, concatenate to the
  // exact ancestor chain, and there are only logarithmically many of them.
  const int cover_bound = 2 * ceil_log2(m) + 2;
  for (int t = 0; t < m; ++t) {
    CAPTURE(t);
    std::vector<int> want = chain_to_root(qt, t);
    std::sort(want.begin(), want.end());
    std::vector<int> got;
    std::vector<int> cov = qt.cover_to(t);
    CHECK(static_cast<int>(cov.size()) <= cover_bound);
    for (int q : cov) {
      const PathPiece& pc = qt.piece(q);
      for (int j = pc.begin; j <= pc.end; ++j)
        got.push_back(qt.path(pc.path).nodes[j]);
    }
    CHECK(got.size() == want.size());
    std::sort(got.begin(), got.end());
    CHECK(got == want);

    std::vector<int> chain = qt.pieces_containing(t);
    CHECK(static_cast<int>(chain.size()) <= 4 * ceil_log2(m + 1) + 4);
    for (int q : chain) {
      const PathPiece& pc = qt.piece(q);
      CHECK(pc.path == qt.node(t).path);
      CHECK(pc.begin <= qt.node(t).pos);
      CHECK(pc.end >= qt.node(t).pos);
    }
  }

  // Small side: the precomputed covers and the per-piece lists agree.
  std::int64_t small_total = 0;
  for (int v = 0; v < n; ++v) {
    std::vector<int> cov = qt.cover_of(v);
    CHECK(cov == qt.cover_to(qt.window_top_of(v)));
    small_total += static_cast<std::int64_t>(cov.size());
    for (int q : cov) {
      const std::vector<int>& sm = qt.piece(q).small;
      CHECK(std::find(sm.begin(), sm.end(), v) != sm.end());
    }
  }
  CHECK(qt.totals().small_in_pieces == small_total);
  CHECK(small_total <= static_cast<std::int64_t>(n) * cover_bound);
  std::int64_t piece_total = 0;
  for (int q = 0; q < qt.piece_count(); ++q) {
    piece_total += static_cast<std::int64_t>(qt.piece(q).small.size());
    CHECK(std::is_sorted(qt.piece(q).small.begin(), qt.piece(q).small.end()));
  }
  CHECK(piece_total == small_total);
}

// Definitional pair membership: radius band matching a level of the piece,
// center inside the cone, and the boundary gap within / beyond the annulus
// width. Uses the same arithmetic expressions as the builder so the
// comparison is exact.
struct BrutePair {
  std::vector<int> large, post;
};

std::map<std::pair<int, int>, BrutePair> brute_pairs(const QuadtreePaths& qt,
                                                     const DiskInstance& inst) {
  std::map<std::pair<int, int>, BrutePair> out;
  for (int q = 0; q < qt.piece_count(); ++q) {
    const PathPiece& pc = qt.piece(q);
    if (pc.small.empty()) continue;
    const CellKey bot = qt.node(pc.bottom_node).key;
    const CellKey top = qt.node(pc.top_node).key;
    const double ax = qt.center_x(bot), ay = qt.center_y(bot);
    const double cone_r = std::ldexp(3.0, top.level + kBandBits);
    const double five = std::ldexp(5.0, bot.level);
    for (int u = 0; u < inst.n(); ++u) {
      if (qt.level_of_vertex(u) < bot.level || qt.level_of_vertex(u) > top.level)
        continue;
      const Vertex& vu = inst.vertices[u];
      const double dctr = center_dist(vu.x, vu.y, ax, ay);
      if (dctr > cone_r) continue;
      const double gap = vu.r - dctr;
      const bool is_post = gap >= five;
      if (!is_post && gap <= -five) continue;
      BrutePair& bp = out[{q, cone_sector(ax, ay, vu.x, vu.y)}];
      (is_post ? bp.post : bp.large).push_back(u);
    }
  }
  return out;
}

void check_pairs(QuadtreePaths& qt, const DiskInstance& inst) {
  auto want = brute_pairs(qt, inst);
  int found = 0;
  for (auto& [key, bp] : want) {
    int pid = qt.find_pair(key.first, key.second);
    CAPTURE(key.first);
    CAPTURE(key.second);
    REQUIRE(pid >= 0);
    ++found;
    const ConePair& cp = qt.pair(pid);
    CHECK(cp.piece == key.first);
    CHECK(cp.sector == key.second);
    CHECK(cp.cell == qt.piece(key.first).bottom_node);
    CHECK(cp.level == qt.node(cp.cell).key.level);
    CHECK(cp.large == bp.large);
    CHECK(cp.post == bp.post);
  }
  CHECK(found == qt.pair_count());

  std::int64_t large_total = 0, post_total = 0;
  std::vector<std::vector<int>> want_large_links(inst.n());
  std::vector<std::vector<PairLink>> want_small_links(inst.n());
  for (int pid = 0; pid < qt.pair_count(); ++pid) {
    const ConePair& cp = qt.pair(pid);
    large_total += static_cast<std::int64_t>(cp.large.size());
    post_total += static_cast<std::int64_t>(cp.post.size());

    std::vector<std::pair<double, int>> by_r;
    for (int u : cp.large) by_r.push_back({inst.vertices[u].r, u});
    std::sort(by_r.begin(), by_r.end());
    CHECK(cp.large_by_r == by_r);

    // Minimum-radius adjacent large per small, with the same weighted
    // nearest-site value expression the builder uses.
    std::vector<std::pair<double, int>> by_rv;
    for (int w : qt.small_of(pid)) {
      const Vertex& vw = inst.vertices[w];
      bool any = false;
      std::pair<double, int> best;
      for (auto [r, u] : by_r) {
        const Vertex& vu = inst.vertices[u];
        if (center_dist(vw.x, vw.y, vu.x, vu.y) + -vu.r <= vw.r) {
          if (!any) best = {r, u};
          any = true;
        }
      }
      if (any) {
        want_small_links[w].push_back({pid, best.first, best.second});
        by_rv.push_back({best.first, w});
      }
    }
    std::sort(by_rv.begin(), by_rv.end());
    CHECK(cp.small_by_rv == by_rv);

    for (int u : cp.large) {
      const Vertex& vu = inst.vertices[u];
      for (int w : qt.small_of(pid)) {
        const Vertex& vw = inst.vertices[w];
        if (center_dist(vu.x, vu.y, vw.x, vw.y) + -vw.r <= vu.r) {
          want_large_links[u].push_back(pid);
          break;
        }
      }
    }
  }
  CHECK(qt.totals().large_in_pairs == large_total);
  CHECK(qt.totals().post_in_pairs == post_total);
  for (int v = 0; v < inst.n(); ++v) {
    CHECK(qt.pairs_with_large(v) == want_large_links[v]);
    const std::vector<PairLink>& links = qt.pairs_with_small(v);
    REQUIRE(links.size() == want_small_links[v].size());
    for (std::size_t j = 0; j < links.size(); ++j) {
      CHECK(links[j].pair == want_small_links[v][j].pair);
      CHECK(links[j].radius == want_small_links[v][j].radius);
      CHECK(links[j].vertex == want_small_links[v][j].vertex);
    }
  }

  // Arm entries: per cell, the minimum link radius over its mid vertices.
  for (int i = 0; i < qt.node_count(); ++i) {
    std::map<int, double> best;
    for (int v : qt.node(i).mid)
      for (const PairLink& link : qt.pairs_with_small(v)) {
        auto [it, inserted] = best.try_emplace(link.pair, link.radius);
        if (!inserted && link.radius < it->second) it->second = link.radius;
      }
    const std::vector<ArmEntry>& arms = qt.cell_arms(i);
    REQUIRE(arms.size() == best.size());
    std::size_t j = 0;
    for (auto [pair, radius] : best) {
      CHECK(arms[j].pair == pair);
      CHECK(arms[j].radius == radius);
      ++j;
    }
  }
}

// Edge coverage: a regular edge is seen by both endpoint cells' nearby
// families; an irregular one by a cone pair, on the large side when the edge
// is not redundant.
void check_edge_cover(QuadtreePaths& qt, const DiskInstance& inst) {
  for (int a = 0; a < inst.n(); ++a)
    for (int b = a + 1; b < inst.n(); ++b) {
      const Vertex* u = &inst.vertices[a];
      const Vertex* w = &inst.vertices[b];
      if (!is_edge(*u, *w)) continue;
      if (u->r < w->r) std::swap(u, w);
      CAPTURE(u->id);
      CAPTURE(w->id);
      if (u->r / w->r < static_cast<double>(kBand)) {
        const std::vector<int>& near_w = qt.boxplus(qt.mid_cell_of(w->id));
        const std::vector<int>& near_u = qt.boxplus(qt.mid_cell_of(u->id));
        CHECK(std::find(near_w.begin(), near_w.end(), qt.mid_cell_of(u->id)) !=
              near_w.end());
        CHECK(std::find(near_u.begin(), near_u.end(), qt.mid_cell_of(w->id)) !=
              near_u.end());
      } else {
        const bool redundant = center_dist(*u, *w) < u->r - w->r;
        bool in_large = false, in_post = false;
        for (int pid = 0; pid < qt.pair_count(); ++pid) {
          const ConePair& cp = qt.pair(pid);
          const std::vector<int>& sm = qt.small_of(pid);
          if (std::find(sm.begin(), sm.end(), w->id) == sm.end()) continue;
          if (std::find(cp.large.begin(), cp.large.end(), u->id) != cp.large.end())
            in_large = true;
          if (std::find(cp.post.begin(), cp.post.end(), u->id) != cp.post.end())
            in_post = true;
        }
        CHECK((in_large || in_post));
        if (!redundant) CHECK(in_large);
      }
    }
}

}  // namespace

TEST_CASE("single vertex collapses to one node, one piece, one deep pair") {
  DiskInstance inst = parse_instance("1 0\n3 4 7\n");
  QuadtreePaths qt;
  qt.build(inst);
  CHECK(qt.node_count() == 1);
  CHECK(qt.root() == qt.mid_cell_of(0));
  CHECK(qt.window_top_of(0) == qt.root());
  CHECK(qt.path_count() == 1);
  CHECK(qt.piece_count() == 1);
  CHECK(qt.cover_of(0) == std::vector<int>{0});
  // The disk contains its own cell's center deeply, so it classifies into the
  // final-sweep side of its own pair; no alarms are ever involved.
  REQUIRE(qt.pair_count() == 1);
  CHECK(qt.pair(0).post == std::vector<int>{0});
  CHECK(qt.pair(0).large.empty());
  CHECK(qt.pairs_with_large(0).empty());
  CHECK(qt.pairs_with_small(0).empty());
  CHECK(qt.cell_arms(qt.root()).empty());
  check_tree(qt, inst);
  check_pairs(qt, inst);
}

TEST_CASE("unit-square corners split into four level-0 children") {
  DiskInstance inst = parse_instance("4 0\n0 0 1\n1 0 1\n0 1 1\n1 1 1\n");
  QuadtreePaths qt;
  qt.build(inst);
  CHECK(qt.node(qt.root()).key.level == 1);
  CHECK(qt.node(qt.root()).children.size() == 4);
  CHECK(qt.node_count() == 9);
  // Equal subtrees: the heavy child is the first in (ix, iy) order.
  const QuadNode& root = qt.node(qt.root());
  CHECK(root.heavy == root.children[0]);
  check_tree(qt, inst);
  check_pairs(qt, inst);
  check_edge_cover(qt, inst);
}

TEST_CASE("distant cluster keeps the split tree compressed") {
  DiskInstance inst = parse_instance("3 0\n0 0 1024\n0.25 0 1024\n60 0 1024\n");
  QuadtreePaths qt;
  qt.build(inst);
  // Both cluster points share one level-0 cell; the far point separates at
  // level 7, ten levels below the root, so the root keeps a single compressed
  // child and the band chains stay at the root level.
  CHECK(qt.node(qt.root()).key.level == 10);
  int mid7 = qt.find(CellKey{7, 0, 0});
  REQUIRE(mid7 >= 0);
  CHECK(qt.node(mid7).parent == qt.root());
  CHECK(qt.node_count() == 5);
  CHECK(qt.mid_cell_of(0) == qt.mid_cell_of(1));
  CHECK(qt.window_top_of(0) == qt.root());
  check_tree(qt, inst);
  check_pairs(qt, inst);
  check_edge_cover(qt, inst);
}

TEST_CASE("coincident centers with banded radii form a single heavy path") {
  DiskInstance inst = parse_instance("2 0\n5 5 1\n5 5 2048\n");
  QuadtreePaths qt;
  qt.build(inst);
  CHECK(qt.path_count() == 1);
  CHECK(qt.node_count() == 13);
  CHECK(qt.node(qt.root()).key.level == 11);
  // Containment with a huge ratio is a redundant edge: the big disk lands on
  // the final-sweep side of a pair covering the small vertex.
  bool post_found = false;
  for (int pid = 0; pid < qt.pair_count(); ++pid) {
    const std::vector<int>& sm = qt.small_of(pid);
    const ConePair& cp = qt.pair(pid);
    if (std::find(sm.begin(), sm.end(), 0) != sm.end() &&
        std::find(cp.post.begin(), cp.post.end(), 1) != cp.post.end())
      post_found = true;
  }
  CHECK(post_found);
  check_tree(qt, inst);
  check_pairs(qt, inst);
  check_edge_cover(qt, inst);
}

TEST_CASE("boundary-straddling giant lands on the large side") {
  // The giant's boundary passes right through the unit disk at the origin:
  // not redundant, so some pair covering the small vertex takes it as large.
  const double big = 1048576.0;  // 2^20
  DiskInstance inst = make_instance(
      {{0, 0, 0, 1}, {1, big, 0, big}}, 0);
  QuadtreePaths qt;
  qt.build(inst);
  bool large_found = false;
  for (int pid = 0; pid < qt.pair_count(); ++pid) {
    const std::vector<int>& sm = qt.small_of(pid);
    const ConePair& cp = qt.pair(pid);
    if (std::find(sm.begin(), sm.end(), 0) != sm.end() &&
        std::find(cp.large.begin(), cp.large.end(), 1) != cp.large.end())
      large_found = true;
  }
  CHECK(large_found);
  check_tree(qt, inst);
  check_pairs(qt, inst);
  check_edge_cover(qt, inst);

  // Moving the giant close makes the edge redundant: deep containment, so it
  // must appear on the final-sweep side instead.
  DiskInstance inner = make_instance(
      {{0, 0, 0, 1}, {1, 1000, 0, big}}, 0);
  qt.build(inner);
  bool post_found = false, large_inner = false;
  for (int pid = 0; pid < qt.pair_count(); ++pid) {
    const std::vector<int>& sm = qt.small_of(pid);
    const ConePair& cp = qt.pair(pid);
    if (std::find(sm.begin(), sm.end(), 0) == sm.end()) continue;
    if (std::find(cp.post.begin(), cp.post.end(), 1) != cp.post.end())
      post_found = true;
    if (std::find(cp.large.begin(), cp.large.end(), 1) != cp.large.end())
      large_inner = true;
  }
  CHECK(post_found);
  CHECK(!large_inner);
  check_pairs(qt, inner);
  check_edge_cover(qt, inner);
}

TEST_CASE("centers straddling the axes still build one connected tree") {
  // Cells left and right of an axis share no dyadic ancestor at any level, so
  // mixed-sign coordinates exercise the nonnegative re-anchoring of the grid.
  DiskInstance inst = parse_instance(
      "5 0\n-3 -2 4\n2 1 1\n-0.5 3 1\n4 -1.25 2\n0.25 -0.125 1\n");
  QuadtreePaths qt;
  qt.build(inst);
  check_tree(qt, inst);
  check_pairs(qt, inst);
  check_edge_cover(qt, inst);

  std::mt19937_64 rng(0x0ff5e7ULL);
  for (int it = 0; it < 20; ++it) {
    const int n = 2 + static_cast<int>(rng() % 120);
    const double psi = (it % 2) ? 1024.0 : 1048576.0;
    const std::uint64_t seed = rng();
    CAPTURE(it);
    CAPTURE(n);
    CAPTURE(seed);
    std::vector<Vertex> pts = random_instance(n, psi, seed).vertices;
    for (Vertex& p : pts) {
      p.x -= 50.0;
      p.y -= 25.0;
    }
    DiskInstance shifted = make_instance(std::move(pts), 0);
    QuadtreePaths q2;
    q2.build(shifted);
    check_tree(q2, shifted);
    check_pairs(q2, shifted);
    if (n <= 40) check_edge_cover(q2, shifted);
  }
}

TEST_CASE("random instances: structure, pairs, and edge coverage") {
  std::mt19937_64 rng(0x51ab5eedULL);
  const double psis[] = {1.0, 1024.0, 1048576.0, 1073741824.0};
  for (int it = 0; it < 60; ++it) {
    const int n = 1 + static_cast<int>(rng() % 60);
    const double psi = psis[rng() % 4];
    const double spread = (it % 3 == 0) ? 10000.0 : 100.0;
    const std::uint64_t seed = rng();
    CAPTURE(it);
    CAPTURE(n);
    CAPTURE(psi);
    CAPTURE(seed);
    DiskInstance inst = random_instance(n, psi, seed, spread);
    QuadtreePaths qt;
    qt.build(inst);
    check_tree(qt, inst);
    check_pairs(qt, inst);
    if (n <= 40) check_edge_cover(qt, inst);

    // Any two large-side members of one pair intersect.
    for (int pid = 0; pid < qt.pair_count(); ++pid) {
      const ConePair& cp = qt.pair(pid);
      const int k = static_cast<int>(cp.large.size());
      for (int i = 0; i < k && i < 16; ++i)
        for (int j = i + 1; j < k && j < 16; ++j) {
          CAPTURE(pid);
          CHECK(is_edge(inst.vertices[cp.large[i]], inst.vertices[cp.large[j]]));
        }
    }
  }
}

TEST_CASE("rebuilding yields the identical structure") {
  DiskInstance inst = random_instance(80, 1048576.0, 0xd5ceedULL);
  QuadtreePaths a, b;
  a.build(inst);
  b.build(inst);
  REQUIRE(a.node_count() == b.node_count());
  for (int i = 0; i < a.node_count(); ++i) {
    CHECK(a.node(i).key == b.node(i).key);
    CHECK(a.node(i).parent == b.node(i).parent);
    CHECK(a.node(i).children == b.node(i).children);
    CHECK(a.node(i).mid == b.node(i).mid);
    CHECK(a.node(i).heavy == b.node(i).heavy);
    CHECK(a.node(i).path == b.node(i).path);
    CHECK(a.node(i).pos == b.node(i).pos);
  }
  REQUIRE(a.piece_count() == b.piece_count());
  for (int q = 0; q < a.piece_count(); ++q) {
    CHECK(a.piece(q).path == b.piece(q).path);
    CHECK(a.piece(q).begin == b.piece(q).begin);
    CHECK(a.piece(q).end == b.piece(q).end);
    CHECK(a.piece(q).split == b.piece(q).split);
    CHECK(a.piece(q).small == b.piece(q).small);
  }
  REQUIRE(a.pair_count() == b.pair_count());
  for (int p = 0; p < a.pair_count(); ++p) {
    CHECK(a.pair(p).piece == b.pair(p).piece);
    CHECK(a.pair(p).sector == b.pair(p).sector);
    CHECK(a.pair(p).large == b.pair(p).large);
    CHECK(a.pair(p).post == b.pair(p).post);
    CHECK(a.pair(p).small_by_rv == b.pair(p).small_by_rv);
  }
}

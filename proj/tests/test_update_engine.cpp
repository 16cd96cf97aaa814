#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "disksssp/update_engine.hpp"
#include "support/naive.hpp"

using namespace disksssp;

namespace {

// Random labeled set over fresh vertices; ids offset so U/V id spaces can
// interleave or coincide.
std::vector<Vertex> random_vertices(std::mt19937_64& rng, int n, double spread, double rmax) {
  std::vector<Vertex> vs(n);
  for (int i = 0; i < n; ++i) {
    vs[i] = {i, testing::u01(rng) * spread, testing::u01(rng) * spread,
             1 + testing::u01(rng) * (rmax - 1)};
  }
  return vs;
}

}  // namespace

TEST_CASE("update tree sorts leaves by (k1, id)") {
  // k1 = dist + r: values 3, 1, 2 for ids 0, 1, 2.
  std::vector<LabeledVertex> U = {
      {0, 0, 0, 1, 2}, {1, 1, 0, 1, 0}, {2, 2, 0, 1, 1}};
  UpdateTree tree(U);
  REQUIRE(tree.leaves().size() == 3);
  CHECK(tree.leaves()[0].id == 1);
  CHECK(tree.leaves()[1].id == 2);
  CHECK(tree.leaves()[2].id == 0);
  // Equal k1: id order.
  std::vector<LabeledVertex> ties = {{5, 0, 0, 1, 1}, {3, 1, 0, 1.5, 0.5}, {4, 2, 0, 2, 0}};
  UpdateTree tie_tree(ties);
  CHECK(tie_tree.leaves()[0].id == 3);
  CHECK(tie_tree.leaves()[1].id == 4);
  CHECK(tie_tree.leaves()[2].id == 5);
}

TEST_CASE("update tree rejects empty and non-finite input") {
  CHECK_THROWS_AS(UpdateTree({}), std::logic_error);
  CHECK_THROWS_AS(UpdateTree({{0, 0, 0, 1, kInf}}), std::logic_error);
}

TEST_CASE("every tree node's indexes answer like a linear scan") {
  std::mt19937_64 rng(11);
  auto vs = random_vertices(rng, 64, 30, 8);
  std::vector<LabeledVertex> U;
  for (const Vertex& v : vs) U.push_back(label(v, testing::u01(rng) * 40));
  UpdateTree tree(U);
  for (const auto& node : tree.nodes()) {
    REQUIRE(static_cast<int>(node.vor1.size()) == node.hi - node.lo);
    REQUIRE(static_cast<int>(node.vor2.size()) == node.hi - node.lo);
    for (int q = 0; q < 20; ++q) {
      double qx = testing::u01(rng) * 40 - 5;
      double qy = testing::u01(rng) * 40 - 5;
      for (const WeightedSiteSet* set : {&node.vor1, &node.vor2}) {
        NearestHit got = set->nearest(qx, qy);
        NearestHit want;
        for (const WeightedSite& s : set->sites()) {
          double value = center_dist(qx, qy, s.x, s.y) + s.w;
          if (value < want.value || (value == want.value && s.id < want.id)) {
            want = {s.id, value, s.x, s.y, s.w};
          }
        }
        REQUIRE(got.id == want.id);
        REQUIRE(got.value == want.value);
      }
    }
  }
}

TEST_CASE("relax_one: single and competing sources") {
  SUBCASE("single adjacent source") {
    UpdateTree tree({{0, 0, 0, 1, 0}});
    auto rel = tree.relax_one(Vertex{9, 1.5, 0, 1}, kInf);
    REQUIRE(rel.has_value());
    CHECK(rel->value == 1.5);
    CHECK(rel->prev == 0);
  }
  SUBCASE("single non-adjacent source") {
    UpdateTree tree({{0, 0, 0, 1, 0}});
    CHECK_FALSE(tree.relax_one(Vertex{9, 3, 0, 1}, kInf).has_value());
  }
  SUBCASE("nearer-by-value source wins") {
    UpdateTree tree({{1, 0, 0, 1, 0}, {2, 3, 0, 1, 0.5}});
    auto rel = tree.relax_one(Vertex{9, 1.5, 0, 1}, kInf);
    REQUIRE(rel.has_value());
    CHECK(rel->value == 1.5);  // via id 2 it would be 2.0
    CHECK(rel->prev == 1);
  }
  SUBCASE("threshold is strict") {
    UpdateTree tree({{0, 0, 0, 1, 0}});
    CHECK_FALSE(tree.relax_one(Vertex{9, 1.5, 0, 1}, 1.5).has_value());
    CHECK(tree.relax_one(Vertex{9, 1.5, 0, 1}, std::nextafter(1.5, 2.0)).has_value());
  }
}

TEST_CASE("update matches the naive double loop on random batches") {
  std::mt19937_64 rng(2025);
  for (int round = 0; round < 300; ++round) {
    int n = 2 + static_cast<int>(rng() % 500);
    double spread = 5 + testing::u01(rng) * 60;
    double rmax = 1 + testing::u01(rng) * 15;
    auto vs = random_vertices(rng, n, spread, rmax);

    std::vector<double> dist(n);
    std::vector<int> prev(n, -1);
    for (int i = 0; i < n; ++i) {
      dist[i] = rng() % 4 == 0 ? kInf : testing::u01(rng) * 50;
    }

    // U: random subset with finite dist (frozen labels); V: random subset,
    // possibly overlapping U.
    std::vector<LabeledVertex> U;
    std::vector<int> V;
    for (int i = 0; i < n; ++i) {
      if (std::isfinite(dist[i]) && rng() % 2 == 0) U.push_back(label(vs[i], dist[i]));
      if (rng() % 2 == 0) V.push_back(i);
    }
    if (U.empty() || V.empty()) continue;

    auto dist_naive = dist;
    auto prev_naive = prev;
    testing::naive_update(U, V, vs, dist_naive, prev_naive);
    update(U, V, vs, dist, prev);
    REQUIRE(dist == dist_naive);
    REQUIRE(prev == prev_naive);
  }
}

TEST_CASE("update handles both sides of the naive cutoff identically") {
  std::mt19937_64 rng(31);
  for (int base : {kUpdateNaiveCutoff - 1, kUpdateNaiveCutoff, kUpdateNaiveCutoff + 1,
                   2 * kUpdateNaiveCutoff}) {
    auto vs = random_vertices(rng, base + 40, 20.0, 6);
    std::vector<double> dist(vs.size(), kInf);
    std::vector<int> prev(vs.size(), -1);
    std::vector<LabeledVertex> U;
    for (int i = 0; i < base; ++i) U.push_back(label(vs[i], testing::u01(rng) * 10));
    std::vector<int> V;
    for (std::size_t i = base; i < vs.size(); ++i) V.push_back(static_cast<int>(i));
    auto dist_naive = dist;
    auto prev_naive = prev;
    testing::naive_update(U, V, vs, dist_naive, prev_naive);
    update(U, V, vs, dist, prev);
    REQUIRE(dist == dist_naive);
    REQUIRE(prev == prev_naive);
  }
}

TEST_CASE("radius-monotonicity: cheaper-by-value, smaller-k1 adjacency transfers") {
  // If value(u1) >= value(u2), k1(u1) <= k1(u2), and vu1 is an edge, then
  // vu2 is an edge. Checked on random triples; zero counterexamples allowed.
  std::mt19937_64 rng(555);
  int checked = 0;
  while (checked < 10000) {
    Vertex v{0, testing::u01(rng) * 20, testing::u01(rng) * 20, 1 + testing::u01(rng) * 8};
    Vertex u1{1, testing::u01(rng) * 20, testing::u01(rng) * 20, 1 + testing::u01(rng) * 8};
    Vertex u2{2, testing::u01(rng) * 20, testing::u01(rng) * 20, 1 + testing::u01(rng) * 8};
    double d1 = testing::u01(rng) * 20, d2 = testing::u01(rng) * 20;
    if (!is_edge(u1, v)) continue;
    if (!(d1 + center_dist(u1, v) > d2 + center_dist(u2, v))) continue;
    if (!(d1 + u1.r <= d2 + u2.r)) continue;
    ++checked;
    REQUIRE(is_edge(u2, v));
  }
}

TEST_CASE("incremental structure follows the binary counter") {
  IncrementalUpdateStructure inc;
  CHECK(inc.tree_sizes().empty());
  std::mt19937_64 rng(1);
  auto vs = random_vertices(rng, 7, 10, 4);
  for (int i = 0; i < 7; ++i) {
    inc.insert(label(vs[i], static_cast<double>(i)));
    if (i == 0) CHECK(inc.tree_sizes() == std::vector<std::size_t>{1});
    if (i == 1) CHECK(inc.tree_sizes() == std::vector<std::size_t>{2});
  }
  CHECK(inc.tree_sizes() == std::vector<std::size_t>{4, 2, 1});
  CHECK(inc.size() == 7);
  CHECK_THROWS_AS(inc.insert(label(vs[0], 9.0)), std::logic_error);
}

TEST_CASE("incremental queries equal naive update over inserted-so-far") {
  std::mt19937_64 rng(77);
  int n = 200;
  auto vs = random_vertices(rng, n, 25, 5);
  IncrementalUpdateStructure inc;
  std::vector<LabeledVertex> inserted;
  std::vector<double> dist(n, kInf);
  std::vector<int> prev(n, -1);
  auto dist_ref = dist;
  auto prev_ref = prev;
  for (int i = 0; i < n; ++i) {
    LabeledVertex lv = label(vs[i], testing::u01(rng) * 30);
    inc.insert(lv);
    inserted.push_back(lv);
    if (i % 7 == 0) {
      std::vector<int> V;
      for (int k = 0; k < 25; ++k) V.push_back(static_cast<int>(rng() % n));
      inc.query(V, vs, dist, prev);
      testing::naive_update(inserted, V, vs, dist_ref, prev_ref);
      REQUIRE(dist == dist_ref);
      REQUIRE(prev == prev_ref);
    }
  }
}

TEST_CASE("merge rebuilds stay within the amortized budget") {
  std::mt19937_64 rng(13);
  int m = 1000;
  auto vs = random_vertices(rng, m, 100, 4);
  IncrementalUpdateStructure inc;
  for (int i = 0; i < m; ++i) inc.insert(label(vs[i], testing::u01(rng)));
  std::uint64_t budget =
      static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(std::ceil(std::log2(m)));
  CHECK(inc.rebuilt_leaves() <= budget);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "disksssp/oracle.hpp"
#include "support/naive.hpp"

using namespace disksssp;

TEST_CASE("materialize: chain, triangle, random double scan") {
  DiskInstance chain = parse_instance("3 0\n0 0 1\n1.5 0 1\n3 0 1\n");
  CHECK(materialize(chain).m == 2);

  DiskInstance tri = parse_instance("3 0\n0 0 1\n1 0 1\n0.5 0.8 1\n");
  CHECK(materialize(tri).m == 3);

  DiskInstance rnd = testing::random_instance(100, 16, 42);
  ExplicitGraph g = materialize(rnd);
  std::int64_t m = 0;
  for (int u = 0; u < rnd.n(); ++u)
    for (int v = u + 1; v < rnd.n(); ++v)
      if (is_edge(rnd.vertices[u], rnd.vertices[v])) ++m;
  CHECK(g.m == m);
  CHECK(g.offsets[g.n] == 2 * m);
}

TEST_CASE("materialize refuses above the cap") {
  DiskInstance inst = testing::random_instance(25, 4, 1);
  CHECK_THROWS_WITH_AS(materialize(inst, 20),
                       doctest::Contains("refusing to materialize"), std::runtime_error);
  CHECK_NOTHROW(materialize(inst, 25));
}

TEST_CASE("dijkstra on the three-disk chain") {
  DiskInstance inst = parse_instance("3 0\n0 0 1\n1.5 0 1\n3 0 1\n");
  SsspResult res = solve_oracle(inst);
  CHECK(res.dist == std::vector<double>{0.0, 1.5, 3.0});
  CHECK(res.prev == std::vector<int>{-1, 0, 1});
}

TEST_CASE("disconnected vertex gets inf/-1") {
  DiskInstance inst = parse_instance("3 0\n0 0 1\n1.5 0 1\n100 0 1\n");
  SsspResult res = solve_oracle(inst);
  CHECK(res.dist[2] == kInf);
  CHECK(res.prev[2] == -1);
  CHECK(validate_result(inst, res, {.full_edge_check = true}).empty());
}

TEST_CASE("direct neighbors of the source sit at their center distance") {
  // Any path is at least the straight-line distance, so an s-edge is optimal.
  DiskInstance star = testing::random_instance(9, 1, 5, 1.8);
  SsspResult res = solve_oracle(star);
  const Vertex& s = star.vertices[star.source];
  for (const Vertex& v : star.vertices) {
    if (v.id != star.source && is_edge(s, v)) {
      CHECK(res.dist[v.id] == edge_weight(s, v));
    }
  }
}

TEST_CASE("prev tie rule: minimum predecessor id among equal paths") {
  // Two coincident midpoints (ids 1 and 2) both give dist 2.5 to the sink,
  // which is out of the source's reach (2.5 > 2).
  DiskInstance inst = parse_instance("4 0\n0 0 1\n1 0 1\n1 0 1\n2.5 0 1\n");
  SsspResult res = solve_oracle(inst);
  CHECK(res.dist[3] == 2.5);
  CHECK(res.prev[3] == 1);
  CHECK(res.prev[1] == 0);
  CHECK(res.prev[2] == 0);
}

TEST_CASE("oracle output passes validation on random instances") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    DiskInstance inst = testing::random_instance(120, seed % 2 ? 64 : 1, 1000 + seed, 60.0);
    SsspResult res = solve_oracle(inst);
    CHECK(validate_result(inst, res, {.full_edge_check = true}).empty());
  }
}

TEST_CASE("permutation invariance of dist") {
  DiskInstance inst = testing::random_instance(80, 16, 77);
  std::vector<int> perm(inst.n());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(3);
  std::shuffle(perm.begin(), perm.end(), rng);  // perm[old] = new position
  std::vector<Vertex> relabeled(inst.n());
  for (int v = 0; v < inst.n(); ++v) relabeled[perm[v]] = inst.vertices[v];
  DiskInstance shuffled = make_instance(std::move(relabeled), perm[inst.source]);

  SsspResult a = solve_oracle(inst);
  SsspResult b = solve_oracle(shuffled);
  for (int v = 0; v < inst.n(); ++v) CHECK(a.dist[v] == b.dist[perm[v]]);
  CHECK(validate_result(shuffled, b, {.full_edge_check = true}).empty());
}

#include "disksssp/oracle.hpp"

#include <queue>
#include <stdexcept>
#include <utility>

namespace disksssp {

ExplicitGraph materialize(const DiskInstance& inst, int cap) {
  const int n = inst.n();
  if (n > cap) {
    throw std::runtime_error("refusing to materialize explicit graph: n=" + std::to_string(n) +
                             " exceeds cap " + std::to_string(cap));
  }
  const auto& vs = inst.vertices;
  ExplicitGraph g;
  g.n = n;
  g.offsets.assign(n + 1, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (is_edge(vs[u], vs[v])) {
        ++g.offsets[u + 1];
        ++g.offsets[v + 1];
        ++g.m;
      }
    }
  }
  for (int i = 0; i < n; ++i) g.offsets[i + 1] += g.offsets[i];
  g.targets.resize(g.offsets[n]);
  g.weights.resize(g.offsets[n]);
  std::vector<std::int64_t> cur(g.offsets.begin(), g.offsets.end() - 1);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (is_edge(vs[u], vs[v])) {
        double w = edge_weight(vs[u], vs[v]);
        g.targets[cur[u]] = v;
        g.weights[cur[u]++] = w;
        g.targets[cur[v]] = u;
        g.weights[cur[v]++] = w;
      }
    }
  }
  return g;
}

SsspResult dijkstra(const ExplicitGraph& g, int source) {
  if (source < 0 || source >= g.n) throw std::runtime_error("source out of range");
  SsspResult res;
  res.dist.assign(g.n, kInf);
  res.prev.assign(g.n, -1);
  res.dist[source] = 0;
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  pq.push({0.0, source});
  std::vector<char> done(g.n, 0);
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (done[u] || d != res.dist[u]) continue;
    done[u] = 1;
    for (std::int64_t e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
      int v = g.targets[e];
      double nd = d + g.weights[e];
      if (nd < res.dist[v]) {
        res.dist[v] = nd;
        res.prev[v] = u;
        pq.push({nd, v});
      } else if (nd == res.dist[v] && v != source && u < res.prev[v]) {
        res.prev[v] = u;
      }
    }
  }
  return res;
}

SsspResult solve_oracle(const DiskInstance& inst, int cap) {
  return dijkstra(materialize(inst, cap), inst.source);
}

}  // namespace disksssp

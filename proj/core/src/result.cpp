#include "disksssp/result.hpp"

#include <cmath>
#include <random>

namespace disksssp {

bool near_eq(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= dist_tolerance(std::max(std::abs(a), std::abs(b)));
}

namespace {

// a <= b within tolerance; anything is <= infinity.
bool le_tol(double a, double b) {
  if (std::isinf(b)) return true;
  if (std::isinf(a)) return false;
  return a <= b + dist_tolerance(std::abs(b));
}

}  // namespace

std::vector<std::string> validate_result(const DiskInstance& inst, const SsspResult& res,
                                         const ValidateOptions& opts) {
  std::vector<std::string> out;
  const int n = inst.n();
  if (static_cast<int>(res.dist.size()) != n || static_cast<int>(res.prev.size()) != n) {
    out.push_back("result arrays sized " + std::to_string(res.dist.size()) + "/" +
                  std::to_string(res.prev.size()) + " for n=" + std::to_string(n));
    return out;
  }
  const auto& vs = inst.vertices;
  const int s = inst.source;
  if (res.dist[s] != 0) out.push_back("source dist nonzero");
  if (res.prev[s] != -1) out.push_back("source has prev");

  for (int v = 0; v < n; ++v) {
    if (std::isnan(res.dist[v]) || res.dist[v] < 0) {
      out.push_back("vertex " + std::to_string(v) + " has invalid dist");
      continue;
    }
    if (v == s) continue;
    if (std::isinf(res.dist[v])) {
      if (res.prev[v] != -1) out.push_back("unreachable vertex " + std::to_string(v) + " has prev");
      continue;
    }
    int p = res.prev[v];
    if (p < 0 || p >= n || p == v) {
      out.push_back("vertex " + std::to_string(v) + " has invalid prev " + std::to_string(p));
      continue;
    }
    if (!is_edge(vs[p], vs[v])) {
      out.push_back("prev edge (" + std::to_string(p) + "," + std::to_string(v) + ") not in graph");
      continue;
    }
    if (!near_eq(res.dist[v], res.dist[p] + edge_weight(vs[p], vs[v]))) {
      out.push_back("prev edge (" + std::to_string(p) + "," + std::to_string(v) + ") not tight");
    }
  }

  // prev chains must reach the source without cycles.
  std::vector<char> state(n, 0);  // 0 new, 1 on current chain, 2 verified
  state[s] = 2;
  for (int v0 = 0; v0 < n; ++v0) {
    if (std::isinf(res.dist[v0]) || state[v0] != 0) continue;
    std::vector<int> chain;
    int v = v0;
    while (v != -1 && state[v] == 0) {
      state[v] = 1;
      chain.push_back(v);
      int p = res.prev[v];
      if (p < 0 || p >= n || std::isinf(res.dist[p])) {
        v = -1;
        break;
      }
      v = p;
    }
    bool ok = v != -1 && state[v] == 2;
    if (!ok) {
      out.push_back("prev chain from " + std::to_string(v0) +
                    (v != -1 && state[v] == 1 ? " has a cycle" : " does not reach source"));
    }
    for (int u : chain) state[u] = ok ? 2 : 3;
  }

  auto check_pair = [&](int u, int v) {
    if (u == v || !is_edge(vs[u], vs[v])) return;
    double w = edge_weight(vs[u], vs[v]);
    if (!le_tol(res.dist[v], res.dist[u] + w)) {
      out.push_back("edge (" + std::to_string(u) + "," + std::to_string(v) + ") can relax");
    } else if (!le_tol(res.dist[u], res.dist[v] + w)) {
      out.push_back("edge (" + std::to_string(v) + "," + std::to_string(u) + ") can relax");
    }
  };
  if (opts.full_edge_check) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) check_pair(u, v);
  } else if (n >= 2) {
    std::mt19937_64 rng(opts.seed);
    for (int k = 0; k < opts.edge_samples; ++k) {
      int u = static_cast<int>(rng() % n);
      int v = static_cast<int>(rng() % n);
      check_pair(u, v);
      if (static_cast<int>(out.size()) > 64) break;
    }
  }
  return out;
}

std::uint64_t dist_checksum(const std::vector<double>& dist) {
  std::uint64_t h = 14695981039346656037ull;
  for (double d : dist) {
    long long key;
    double scaled = d * 1e6;
    if (std::isfinite(scaled) && std::abs(scaled) < 9.0e18) {
      key = std::llround(scaled);
    } else {
      key = std::numeric_limits<long long>::max();
    }
    auto bits = static_cast<std::uint64_t>(key);
    for (int i = 0; i < 8; ++i) {
      h ^= (bits >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  }
  return h;
}

std::string format_result(const SsspResult& res) {
  std::string out;
  for (std::size_t i = 0; i < res.dist.size(); ++i) {
    out += std::to_string(i);
    out += ' ';
    out += format_double(res.dist[i]);
    out += ' ';
    out += std::to_string(res.prev[i]);
    out += '\n';
  }
  return out;
}

}  // namespace disksssp

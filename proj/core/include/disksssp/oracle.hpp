#pragma once

#include <cstdint>
#include <vector>

#include "disksssp/instance.hpp"
#include "disksssp/result.hpp"

namespace disksssp {

// CSR adjacency; neighbor lists sorted by id.
struct ExplicitGraph {
  int n = 0;
  std::int64_t m = 0;  // undirected edge count
  std::vector<std::int64_t> offsets;
  std::vector<int> targets;
  std::vector<double> weights;
};

inline constexpr int kDefaultOracleCap = 20000;

// All-pairs predicate evaluation. Refuses (throws std::runtime_error) when
// n exceeds cap, since m may be quadratic.
ExplicitGraph materialize(const DiskInstance& inst, int cap = kDefaultOracleCap);

// Textbook Dijkstra: pop order (dist, id); prev tie rule (min new dist, then
// min predecessor id) under exact floating-point comparison, matching the
// batched-relaxation engine so prev arrays are comparable across solvers.
SsspResult dijkstra(const ExplicitGraph& g, int source);

SsspResult solve_oracle(const DiskInstance& inst, int cap = kDefaultOracleCap);

}  // namespace disksssp

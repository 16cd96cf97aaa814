#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "disksssp/instance.hpp"

namespace disksssp {

struct SsspResult {
  std::vector<double> dist;  // kInf when unreachable
  std::vector<int> prev;     // -1 when absent (source and unreachable vertices)
};

// Relative tolerance used only when validating or comparing results; solver
// internals compare exactly.
inline double dist_tolerance(double value) { return 1e-9 * (1 + value); }

// a == b within tolerance (infinities compare equal to each other only).
bool near_eq(double a, double b);

struct ValidateOptions {
  bool full_edge_check = false;  // check dist[v] <= dist[u]+|uv| on all pairs
  int edge_samples = 10000;      // sampled pairs when full check is off
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
};

// Empty iff res is a valid shortest-path-tree labeling for inst: source at 0
// with no prev, every finite vertex's prev edge exists and is tight, prev
// chains reach the source acyclically, and no (sampled) edge can relax.
std::vector<std::string> validate_result(const DiskInstance& inst, const SsspResult& res,
                                         const ValidateOptions& opts = {});

// FNV-1a over dist values rounded to 1e-6, so checksums agree across solvers
// that differ in last-ulp noise. Infinities hash as a fixed sentinel.
std::uint64_t dist_checksum(const std::vector<double>& dist);

// One line per vertex: `id dist prev`, dist in shortest round-trip decimal,
// `inf` when unreachable, prev `-1` when absent.
std::string format_result(const SsspResult& res);

}  // namespace disksssp

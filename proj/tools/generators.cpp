#include "generators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace disksssp {

namespace {

double u01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

// Log-uniform in [1, psi]; psi = 1 yields exactly 1.
double draw_radius(std::mt19937_64& rng, double psi) {
  return std::exp(u01(rng) * std::log(psi));
}

}  // namespace

DiskInstance generate(const GeneratorSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("generator: n must be >= 1");
  if (!(spec.psi >= 1.0)) throw std::invalid_argument("generator: psi must be >= 1");
  if (!(spec.side > 0.0)) throw std::invalid_argument("generator: side must be positive");
  std::mt19937_64 rng(spec.seed);
  std::vector<Vertex> pts;
  pts.reserve(spec.n);
  if (spec.kind == "uniform-square") {
    for (int i = 0; i < spec.n; ++i) {
      const double x = u01(rng) * spec.side;
      const double y = u01(rng) * spec.side;
      pts.push_back({i, x, y, draw_radius(rng, spec.psi)});
    }
  } else if (spec.kind == "clustered") {
    const int k = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(spec.n))));
    std::vector<std::pair<double, double>> centers(k);
    for (auto& c : centers) c = {u01(rng) * spec.side, u01(rng) * spec.side};
    const double extent = spec.side / (4.0 * k);
    for (int i = 0; i < spec.n; ++i) {
      const auto [cx, cy] = centers[rng() % k];
      const double x = cx + (2.0 * u01(rng) - 1.0) * extent;
      const double y = cy + (2.0 * u01(rng) - 1.0) * extent;
      pts.push_back({i, x, y, draw_radius(rng, spec.psi)});
    }
  } else if (spec.kind == "clique") {
    // Every disk has radius psi and centers stay inside a box of side
    // min(side, psi), so the largest center distance is min(side, psi) * sqrt2
    // < 2 psi: all pairs are adjacent and m = n(n-1)/2 by construction.
    const double box = std::min(spec.side, spec.psi);
    for (int i = 0; i < spec.n; ++i)
      pts.push_back({i, u01(rng) * box, u01(rng) * box, spec.psi});
  } else if (spec.kind == "path-chain") {
    // Colinear disks of radius psi spaced 1.5 psi apart: consecutive centers
    // are adjacent (1.5 psi <= 2 psi), all others are not (>= 3 psi), so the
    // graph is a simple path.
    for (int i = 0; i < spec.n; ++i) pts.push_back({i, 1.5 * spec.psi * i, 0.0, spec.psi});
  } else {
    throw std::invalid_argument("generator: unknown kind '" + spec.kind + "'");
  }
  return make_instance(std::move(pts), 0);
}

}  // namespace disksssp

#pragma once

#include <cstdint>
#include <string>

#include "disksssp/instance.hpp"

namespace disksssp {

// Deterministic instance generators. The same spec and seed always produce the
// same instance (and hence a byte-identical file): random bits come from a
// seeded mt19937_64 and are mapped to doubles with a fixed 53-bit recipe, never
// through distribution classes whose output the standard leaves open.
struct GeneratorSpec {
  std::string kind = "uniform-square";  // uniform-square|clustered|clique|path-chain
  int n = 0;
  double psi = 1.0;     // radius scale; log-uniform radii in [1, psi] where drawn
  double side = 100.0;  // placement area side
  std::uint64_t seed = 0;
};

// Throws std::invalid_argument on a malformed spec (n < 1, psi < 1, bad kind).
DiskInstance generate(const GeneratorSpec& spec);

}  // namespace disksssp

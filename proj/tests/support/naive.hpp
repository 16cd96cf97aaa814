#pragma once

// Brute-force references and instance helpers shared by the test binaries.

#include <cstdint>
#include <random>
#include <vector>

#include "disksssp/instance.hpp"
#include "disksssp/result.hpp"
#include "disksssp/update_engine.hpp"

namespace disksssp::testing {

// Deterministic 53-bit uniform in [0,1).
inline double u01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

// Centers uniform in [0,spread]^2, radii log-uniform in [1,psi], source 0.
DiskInstance random_instance(int n, double psi, std::uint64_t seed, double spread = 100.0);

// Reference batched relaxation: plain double loop over the frozen U labels,
// lex-min (value, id), strict improvement. Mirrors the update() contract
// without any tree machinery.
void naive_update(const std::vector<LabeledVertex>& U, const std::vector<int>& V,
                  const std::vector<Vertex>& vertices, std::vector<double>& dist,
                  std::vector<int>& prev);

}  // namespace disksssp::testing

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "disksssp/geometry.hpp"

namespace disksssp {

struct DiskInstance {
  std::vector<Vertex> vertices;
  int source = 0;
  double psi = 1;  // max radius / min radius, derived

  int n() const { return static_cast<int>(vertices.size()); }
};

// Assigns ids 0..n-1, validates invariants (n >= 1, source in range, finite
// coordinates, r >= 1), computes psi. Throws std::runtime_error on violation.
DiskInstance make_instance(std::vector<Vertex> vertices, int source);

// Text format: first record `n source`, then n records `x y r`.
// '#' starts a comment; blank lines are skipped. Throws on malformed input.
DiskInstance parse_instance(std::istream& in);
DiskInstance parse_instance(const std::string& text);
DiskInstance parse_instance_file(const std::string& path);

// Shortest round-trip decimals, so format -> parse -> format is byte-stable.
std::string format_instance(const DiskInstance& inst);
void write_instance_file(const DiskInstance& inst, const std::string& path);

// Shortest decimal that parses back to exactly v; infinities print as
// "inf"/"-inf".
std::string format_double(double v);

}  // namespace disksssp

#include "disksssp/instance.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace disksssp {

namespace {

std::vector<std::string_view> record_tokens(std::string_view line) {
  if (auto pos = line.find('#'); pos != std::string_view::npos) {
    line = line.substr(0, pos);
  }
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int_token(std::string_view tok, const char* what) {
  long long v = 0;
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || end != tok.data() + tok.size()) {
    throw std::runtime_error(std::string("bad ") + what + " '" + std::string(tok) + "'");
  }
  return v;
}

double parse_double_token(std::string_view tok, const char* what) {
  double v = 0;
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || end != tok.data() + tok.size()) {
    throw std::runtime_error(std::string("bad ") + what + " '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

DiskInstance make_instance(std::vector<Vertex> vertices, int source) {
  if (vertices.empty()) throw std::runtime_error("instance needs n >= 1");
  if (source < 0 || source >= static_cast<int>(vertices.size())) {
    throw std::runtime_error("source index " + std::to_string(source) + " out of range");
  }
  double rmin = kInf;
  double rmax = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Vertex& v = vertices[i];
    v.id = static_cast<int>(i);
    if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.r)) {
      throw std::runtime_error("non-finite vertex at index " + std::to_string(i));
    }
    if (v.r < 1) {
      throw std::runtime_error("radius " + format_double(v.r) + " < 1 at index " +
                               std::to_string(i));
    }
    rmin = std::min(rmin, v.r);
    rmax = std::max(rmax, v.r);
  }
  DiskInstance inst;
  inst.vertices = std::move(vertices);
  inst.source = source;
  inst.psi = rmax / rmin;
  return inst;
}

DiskInstance parse_instance(std::istream& in) {
  std::vector<Vertex> vertices;
  long long n = -1;
  long long source = -1;
  std::string line;
  while (std::getline(in, line)) {
    auto toks = record_tokens(line);
    if (toks.empty()) continue;
    if (n < 0) {
      if (toks.size() != 2) throw std::runtime_error("header must be `n source`");
      n = parse_int_token(toks[0], "vertex count");
      source = parse_int_token(toks[1], "source index");
      if (n < 1) throw std::runtime_error("instance needs n >= 1");
      vertices.reserve(static_cast<std::size_t>(n));
      continue;
    }
    if (static_cast<long long>(vertices.size()) == n) {
      throw std::runtime_error("extra record after " + std::to_string(n) + " vertices");
    }
    if (toks.size() != 3) throw std::runtime_error("vertex record must be `x y r`");
    Vertex v;
    v.x = parse_double_token(toks[0], "x");
    v.y = parse_double_token(toks[1], "y");
    v.r = parse_double_token(toks[2], "r");
    vertices.push_back(v);
  }
  if (n < 0) throw std::runtime_error("empty instance file");
  if (static_cast<long long>(vertices.size()) != n) {
    throw std::runtime_error("expected " + std::to_string(n) + " vertices, got " +
                             std::to_string(vertices.size()));
  }
  if (source < 0 || source >= n) {
    throw std::runtime_error("source index " + std::to_string(source) + " out of range");
  }
  return make_instance(std::move(vertices), static_cast<int>(source));
}

DiskInstance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

DiskInstance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file " + path);
  return parse_instance(in);
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, end);
}

std::string format_instance(const DiskInstance& inst) {
  std::string out = std::to_string(inst.n()) + " " + std::to_string(inst.source) + "\n";
  for (const Vertex& v : inst.vertices) {
    out += format_double(v.x);
    out += ' ';
    out += format_double(v.y);
    out += ' ';
    out += format_double(v.r);
    out += '\n';
  }
  return out;
}

void write_instance_file(const DiskInstance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write instance file " + path);
  out << format_instance(inst);
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace disksssp

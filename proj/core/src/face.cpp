#include "srcartier/face.hpp"

#include <stdexcept>

namespace srcartier {

Face Face::from_vertices(std::span<const int> vertices) {
  std::uint64_t bits = 0;
  for (int v : vertices) {
    if (v < 1 || v > kMaxVertices) {
      throw std::out_of_range("vertex " + std::to_string(v) + " outside [1, 64]");
    }
    bits |= bit(v);
  }
  return Face(bits);
}

std::vector<int> Face::vertices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

std::string to_string(Face f) {
  std::string s = "{";
  bool first = true;
  for (int v : f.vertices()) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  s += '}';
  return s;
}

}  // namespace srcartier

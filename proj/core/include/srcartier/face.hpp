#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace srcartier {

/// Largest supported ground set. A face is one machine word.
inline constexpr int kMaxVertices = 64;

/// A subset of the ground set [n] = {1, ..., n}, stored as a bitmask where
/// vertex i occupies bit i - 1.
class Face {
 public:
  constexpr Face() = default;

  static constexpr Face from_bits(std::uint64_t bits) { return Face(bits); }

  /// Throws std::out_of_range for vertices outside [1, 64].
  static Face from_vertices(std::span<const int> vertices);
  static Face from_vertices(std::initializer_list<int> vertices) {
    return from_vertices(std::span<const int>(vertices.begin(), vertices.size()));
  }

  /// The full ground set [n].
  static constexpr Face ground_set(int n) {
    return Face(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  /// Largest vertex, or 0 for the empty face.
  constexpr int max_vertex() const { return 64 - std::countl_zero(bits_); }
  constexpr int min_vertex() const { return empty() ? 0 : std::countr_zero(bits_) + 1; }

  constexpr bool contains(int v) const {
    return v >= 1 && v <= 64 && ((bits_ >> (v - 1)) & 1U) != 0;
  }
  constexpr bool is_subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr Face with(int v) const { return Face(bits_ | bit(v)); }
  constexpr Face without(int v) const { return Face(bits_ & ~bit(v)); }

  constexpr Face operator|(Face o) const { return Face(bits_ | o.bits_); }
  constexpr Face operator&(Face o) const { return Face(bits_ & o.bits_); }
  /// Set difference.
  constexpr Face operator-(Face o) const { return Face(bits_ & ~o.bits_); }

  /// Sorted ascending.
  std::vector<int> vertices() const;

  friend constexpr bool operator==(Face, Face) = default;

 private:
  constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }

  std::uint64_t bits_ = 0;
};

/// Graded-lexicographic order: by cardinality, then lexicographically on the
/// sorted vertex lists. This is the canonical output order everywhere.
constexpr bool graded_lex_less(Face a, Face b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  // Equal-size sets: the one owning the smallest differing vertex comes first.
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

struct GradedLexLess {
  constexpr bool operator()(Face a, Face b) const { return graded_lex_less(a, b); }
};

/// "{1,2,5}"; the empty face prints as "{}".
std::string to_string(Face f);

}  // namespace srcartier

#include "srcartier/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace srcartier {
namespace {

struct AntichainWalker {
  int n;
  std::vector<Face> subsets;
  std::vector<Face> chosen;
  const std::function<void(const SimplicialComplex&)>& visit;
  std::uint64_t count = 0;

  // Each node of the recursion is one antichain; children extend it by a
  // later, pairwise incomparable subset.
  void walk(std::size_t from) {
    for (std::size_t i = from; i < subsets.size(); ++i) {
      const Face s = subsets[i];
      const bool comparable = std::any_of(chosen.begin(), chosen.end(), [s](Face c) {
        return s.is_subset_of(c) || c.is_subset_of(s);
      });
      if (comparable) continue;
      chosen.push_back(s);
      visit(SimplicialComplex::from_faces(chosen, n));
      ++count;
      walk(i + 1);
      chosen.pop_back();
    }
  }
};

}  // namespace

std::uint64_t for_each_complex(int n, const std::function<void(const SimplicialComplex&)>& visit) {
  if (n < 1 || n > kMaxExhaustiveVertices) {
    throw std::invalid_argument("exhaustive enumeration supports 1 <= n <= " +
                                std::to_string(kMaxExhaustiveVertices));
  }
  AntichainWalker walker{n, {}, {}, visit};
  for (std::uint64_t b = 1; b < (std::uint64_t{1} << n); ++b) {
    walker.subsets.push_back(Face::from_bits(b));
  }
  std::sort(walker.subsets.begin(), walker.subsets.end(), GradedLexLess{});
  visit(SimplicialComplex::from_faces({}, n));
  walker.count = 1;
  walker.walk(0);
  return walker.count;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

SimplicialComplex random_complex(int n, double density, std::uint64_t seed) {
  if (n < 1 || n > kMaxRandomVertices) {
    throw std::invalid_argument("random complexes support 1 <= n <= " +
                                std::to_string(kMaxRandomVertices));
  }
  if (!(density > 0.0 && density < 1.0)) {
    throw std::invalid_argument("density must lie in (0, 1)");
  }
  std::mt19937_64 rng(splitmix64(seed));
  constexpr double kScale = 9007199254740992.0;  // 2^53
  std::vector<std::uint64_t> thresholds(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    // 2^{-(k-1)/2} built from ldexp and sqrt, both exactly rounded.
    double p = density * std::ldexp(1.0, -(k - 1) / 2);
    if ((k - 1) % 2 == 1) p *= std::sqrt(0.5);
    thresholds[static_cast<std::size_t>(k)] = static_cast<std::uint64_t>(p * kScale);
  }
  std::vector<Face> kept;
  for (std::uint64_t b = 1; b < (std::uint64_t{1} << n); ++b) {
    const Face f = Face::from_bits(b);
    if ((rng() >> 11) < thresholds[static_cast<std::size_t>(f.size())]) kept.push_back(f);
  }
  return SimplicialComplex::from_faces(kept, n);
}

}  // namespace srcartier

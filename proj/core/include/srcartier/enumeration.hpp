#pragma once

#include <cstdint>
#include <functional>

#include "srcartier/simplicial_complex.hpp"

namespace srcartier {

/// Largest n accepted by for_each_complex (n = 6 already yields ~7.8e6
/// complexes).
inline constexpr int kMaxExhaustiveVertices = 6;

/// Visits every simplicial complex on [n] exactly once: {∅} first, then one
/// complex per nonempty antichain of nonempty subsets. Returns the number of
/// complexes visited. Throws std::invalid_argument for n outside
/// [1, kMaxExhaustiveVertices].
std::uint64_t for_each_complex(int n, const std::function<void(const SimplicialComplex&)>& visit);

/// Largest n accepted by random_complex.
inline constexpr int kMaxRandomVertices = 24;

/// A deterministic pseudo-random complex: each k-subset of [n] is kept as a
/// candidate facet with probability density * 2^{-(k-1)/2}, and the complex
/// is generated by the maximal candidates ({∅} if none are kept).
///
/// The stream is std::mt19937_64 seeded with splitmix64(seed), and a
/// Bernoulli(p) draw compares the top 53 bits of one output with p * 2^53,
/// so the result is identical on every conforming platform. Throws
/// std::invalid_argument for n outside [1, kMaxRandomVertices] or density
/// outside (0, 1).
SimplicialComplex random_complex(int n, double density, std::uint64_t seed);

/// The splitmix64 finaliser, used to derive independent per-trial seeds.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace srcartier

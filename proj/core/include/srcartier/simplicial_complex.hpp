#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "srcartier/face.hpp"

namespace srcartier {

/// A nonvoid simplicial complex on the ground set [n], stored by its facets.
///
/// Faces are never stored explicitly: a set F is a face iff it lies in some
/// facet. The facet list is always an antichain sorted in graded-lex order,
/// and always contains at least one element (the complex {∅} has the single
/// facet ∅). Vertices i with {i} not a face ("ghost" vertices) are allowed.
///
/// n = 0 only arises as the core of a full simplex; every public builder
/// that takes user input requires n >= 1.
class SimplicialComplex {
 public:
  /// The complex {∅} on the empty ground set.
  SimplicialComplex() : facets_{Face{}} {}

  /// Keeps the inclusion-maximal members of `faces`. Throws
  /// std::invalid_argument if n is outside [0, 64] or a face leaves [n].
  static SimplicialComplex from_faces(std::span<const Face> faces, int n);

  int ground_size() const { return n_; }
  Face ground_set() const { return Face::ground_set(n_); }
  std::span<const Face> facets() const { return facets_; }

  bool is_face(Face f) const;
  /// max |facet| - 1; the complex {∅} has dimension -1.
  int dimension() const;
  bool is_pure() const;
  /// Every face including ∅, in graded-lex order.
  std::vector<Face> faces() const;
  /// Vertices v with {v} a face.
  Face vertices() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int n_ = 0;
  std::vector<Face> facets_;
};

/// Builds a complex from vertex lists. Validates 1 <= n <= 64 and that every
/// vertex is in [1, n]; an empty list yields {∅}.
SimplicialComplex build_complex(const std::vector<std::vector<int>>& facet_list, int n);

/// The full simplex 2^[n].
SimplicialComplex full_simplex(int n);

/// Throws std::invalid_argument if `f` is not a face.
std::vector<Face> facets_containing(const SimplicialComplex& complex, Face f);

/// A free face together with the unique facet containing it, which has
/// exactly one more vertex.
struct FreeFacePair {
  Face free_face;
  Face facet;

  /// The vertex i with facet = free_face ∪ {i}.
  int apex() const { return (facet - free_face).min_vertex(); }
  friend bool operator==(const FreeFacePair&, const FreeFacePair&) = default;
};

/// Ordered by the free face (graded-lex), then by the apex vertex.
bool free_pair_less(const FreeFacePair& a, const FreeFacePair& b);

/// All free-face pairs, sorted by free_pair_less. Empty iff no elementary
/// collapse applies.
std::vector<FreeFacePair> free_faces(const SimplicialComplex& complex);

bool is_free_pair(const SimplicialComplex& complex, const FreeFacePair& pair);

/// Removes the free face and its facet. Throws std::invalid_argument if the
/// pair is not free, or if removing it would leave the void complex (the
/// pair (∅, {v}) of a single point).
SimplicialComplex elementary_collapse(const SimplicialComplex& complex, const FreeFacePair& pair);

struct CollapseResult {
  SimplicialComplex complex;
  std::vector<FreeFacePair> steps;
};

/// Collapses the smallest free pair (free_pair_less) until none is left.
/// Stops at a point rather than collapsing to the void complex.
CollapseResult collapse_greedy(const SimplicialComplex& complex);

/// Vertices lying in every facet.
Face cone_vertices(const SimplicialComplex& complex);
/// [n] minus the cone vertices: exactly the variables dividing some minimal
/// generator of the Stanley-Reisner ideal.
Face support_vertices(const SimplicialComplex& complex);

/// The restriction of a complex to its support vertices, re-indexed to
/// [|V|]. `vertex_map[k - 1]` is the original label of core vertex k.
struct CoreDecomposition {
  SimplicialComplex core;
  std::vector<int> vertex_map;
  Face cone;

  Face to_original(Face core_face) const;
  /// Throws std::invalid_argument if the face meets the cone vertices.
  Face to_core(Face original_face) const;
};

CoreDecomposition core(const SimplicialComplex& complex);

/// Δ' * 2^cone on the ground set [n]; Δ' is given in core coordinates and
/// mapped through `vertex_map`. Inverse of core().
SimplicialComplex join_with_simplex(const SimplicialComplex& base, std::span<const int> vertex_map,
                                    Face cone, int n);

/// { G : G ∩ F = ∅, G ∪ F ∈ Δ }. Throws if F is not a face.
SimplicialComplex link(const SimplicialComplex& complex, Face f);
/// { G ∈ Δ : v ∉ G }.
SimplicialComplex deletion(const SimplicialComplex& complex, int v);
/// { G ∈ Δ : G ⊉ F }. Throws if F is not a face, or F = ∅ (the contrastar
/// of the empty face is the void complex).
SimplicialComplex contrastar(const SimplicialComplex& complex, Face f);

/// Inclusion-minimal non-faces in graded-lex order.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex);

std::string to_string(const SimplicialComplex& complex);

}  // namespace srcartier

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "srcartier/monomial_ideal.hpp"
#include "srcartier/simplicial_complex.hpp"

namespace srcartier {

/// Generation type of the Cartier algebra of S/I_Δ.
enum class Verdict { PrincipallyGenerated, InfinitelyGenerated };

enum class Method { Ideal, FreeFace, Both };

std::string_view to_string(Verdict v);  // "pg" / "infgen"
std::string_view to_string(Method m);   // "ideal" / "free_face" / "both"

/// Evidence behind a verdict.
///
/// Coordinates: `free_face_witness` uses the original vertex labels;
/// `monomial_witness` and `core.core` use core coordinates, translated by
/// `core.vertex_map`; `colon_lhs` / `colon_rhs` live in the ambient ring.
struct ClassificationReport {
  Verdict verdict = Verdict::PrincipallyGenerated;
  Method method = Method::Both;
  int n = 0;
  std::uint32_t q = 2;
  Face support;
  bool core_used = false;
  CoreDecomposition core;
  /// The full simplex: S/I_Δ = S is regular and no colon is computed.
  bool regular_short_circuit = false;
  std::optional<FreeFacePair> free_face_witness;
  std::optional<Monomial> monomial_witness;
  std::optional<MonomialIdeal> colon_lhs;
  std::optional<MonomialIdeal> colon_rhs;

  bool principally_generated() const { return verdict == Verdict::PrincipallyGenerated; }
};

/// Compares I^[q] : I with I^[q] + ((∏_{i ∈ V} x_i)^{q-1}), V the support
/// vertices. For q = 2 this is the classical colon-ideal test; other q are
/// the natural generalisation, checked empirically. Throws
/// std::invalid_argument for q < 2.
ClassificationReport classify_via_ideal(const SimplicialComplex& complex, std::uint32_t q = 2);

/// Reduces to the core, then principally generated iff the core has no
/// free face. When a free face exists the smallest pair is reported in
/// original labels, with its witness monomial in core coordinates.
ClassificationReport classify_via_free_face(const SimplicialComplex& complex);

/// m = ∏_{i ∈ F} x_i^2 · ∏_{i ∉ F ∪ {j}} x_i, where the facet is F ∪ {j}.
/// It lies in I^[2] : I but not in I^[2] + (x_1 ⋯ x_n). Requires that the
/// complex is not a cone (V = [n]) and that the pair is free; throws
/// std::invalid_argument otherwise.
Monomial witness_monomial(const SimplicialComplex& complex, const FreeFacePair& pair);

/// Runs the selected criteria. With Method::Both, a disagreement throws
/// InconsistencyError and agreeing evidence is merged.
ClassificationReport classify(const SimplicialComplex& complex, Method method = Method::Both,
                              std::uint32_t q = 2);

/// Embeds a core-coordinate monomial into the ambient ring (cone variables
/// get exponent 0).
Monomial lift_to_ambient(const Monomial& core_monomial, const CoreDecomposition& core, int n);

}  // namespace srcartier

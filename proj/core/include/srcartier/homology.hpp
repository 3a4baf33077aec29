#pragma once

#include <cstddef>
#include <optional>

#include "srcartier/chain_complex.hpp"
#include "srcartier/prime_field.hpp"
#include "srcartier/simplicial_complex.hpp"

namespace srcartier {

/// Reduced homology of Δ over K, degrees -1 .. dim Δ. The complex {∅} has
/// H̃_{-1} = K and nothing else.
HomologyProfile reduced_betti(const SimplicialComplex& complex, const PrimeField& field);

/// H_*(Δ, Γ; K) from the quotient C(Δ) / C(Γ), degrees 0 .. dim Δ. Throws
/// std::invalid_argument unless Γ is a subcomplex of Δ on the same ground set.
HomologyProfile relative_betti(const SimplicialComplex& complex, const SimplicialComplex& sub,
                               const PrimeField& field);

/// H_*(Δ, cost_Δ(F); K), spanned by the faces containing F. For F = ∅ the
/// contrastar is void and this is the reduced homology of Δ (starting in
/// degree -1). Throws std::invalid_argument if F is not a face.
HomologyProfile contrastar_betti(const SimplicialComplex& complex, Face f, const PrimeField& field);

/// Rank of a linear map on homology together with the dimension of its target.
struct RankCertificate {
  std::size_t rank = 0;
  std::size_t target_dim = 0;

  bool surjective() const { return rank == target_dim; }
  friend bool operator==(const RankCertificate&, const RankCertificate&) = default;
};

/// The map H_d(Δ, cost F) -> H_d(Δ, cost G) induced by the projection of
/// relative chains (F ⊆ G gives cost F ⊆ cost G). Throws
/// std::invalid_argument unless F ⊆ G are faces of Δ.
RankCertificate relative_map_certificate(const SimplicialComplex& complex, Face f, Face g,
                                         int degree, const PrimeField& field);
bool relative_map_is_surjective(const SimplicialComplex& complex, Face f, Face g, int degree,
                                const PrimeField& field);

/// Σ_{k >= -1} (-1)^k f_k, counting ∅ in degree -1.
long long reduced_euler_characteristic(const SimplicialComplex& complex);

/// Reisner: H̃_i(lk F; K) = 0 for every face F and every i < dim lk F.
bool is_cohen_macaulay(const SimplicialComplex& complex, const PrimeField& field);
/// Cohen-Macaulay, and deleting any vertex of Δ leaves a Cohen-Macaulay
/// complex of the same dimension.
bool is_doubly_cohen_macaulay(const SimplicialComplex& complex, const PrimeField& field);
/// Every link is a K-homology sphere: H̃_i(lk F) = 0 below the top degree
/// and H̃_{dim lk F}(lk F) = K. Cones fail at F = ∅.
bool is_gorenstein_star(const SimplicialComplex& complex, const PrimeField& field);
/// Gorenstein* of the core.
bool is_gorenstein(const SimplicialComplex& complex, const PrimeField& field);

/// Evidence that Δ is not Buchsbaum*: a cone vertex, and/or the smallest
/// free pair (F, G) whose map H_d(Δ, cost F) -> H_d(Δ, cost G), d = dim Δ,
/// is not surjective. At least one of the two is set.
struct BuchsbaumStarRefutation {
  std::optional<int> cone_vertex;
  std::optional<FreeFacePair> pair;
  RankCertificate certificate;
};

/// One-sided: std::nullopt does not mean Δ is Buchsbaum*.
std::optional<BuchsbaumStarRefutation> buchsbaum_star_refutation(const SimplicialComplex& complex,
                                                                 const PrimeField& field);

}  // namespace srcartier

#include "srcartier/stanley_reisner.hpp"

#include <stdexcept>

namespace srcartier {

MonomialIdeal ideal_of_complex(const SimplicialComplex& complex) {
  const auto n = static_cast<std::size_t>(complex.ground_size());
  std::vector<Monomial> gens;
  for (Face f : minimal_nonfaces(complex)) gens.push_back(Monomial::squarefree(n, f));
  return MonomialIdeal::minimize(n, std::move(gens));
}

SimplicialComplex complex_of_ideal(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) {
    throw std::invalid_argument("Stanley-Reisner ideals are squarefree: " + to_string(ideal));
  }
  if (ideal.is_unit()) throw std::invalid_argument("the unit ideal has no Stanley-Reisner complex");
  const int n = static_cast<int>(ideal.num_vars());
  // Start from the full simplex and, for each generator support S, split
  // every facet H ⊇ S into the facets H \ {v}, v ∈ S.
  std::vector<Face> facets{Face::ground_set(n)};
  for (const auto& g : ideal.gens()) {
    const Face s = g.support();
    std::vector<Face> next;
    for (Face h : facets) {
      if (!s.is_subset_of(h)) {
        next.push_back(h);
        continue;
      }
      for (int v : s.vertices()) next.push_back(h.without(v));
    }
    const auto reduced = SimplicialComplex::from_faces(next, n);
    facets.assign(reduced.facets().begin(), reduced.facets().end());
  }
  return SimplicialComplex::from_faces(facets, n);
}

}  // namespace srcartier

#pragma once

#include "srcartier/monomial_ideal.hpp"
#include "srcartier/simplicial_complex.hpp"

namespace srcartier {

/// I_Δ, generated by ∏_{i ∈ F} x_i over the minimal non-faces F. The zero
/// ideal iff Δ is the full simplex.
MonomialIdeal ideal_of_complex(const SimplicialComplex& complex);

/// The complex of faces F ⊆ [n] containing no generator's support. Throws
/// std::invalid_argument for non-squarefree generators, the unit ideal (its
/// complex would be void), or more than 64 variables.
SimplicialComplex complex_of_ideal(const MonomialIdeal& ideal);

}  // namespace srcartier

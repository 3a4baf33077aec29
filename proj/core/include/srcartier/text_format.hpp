#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "srcartier/monomial_ideal.hpp"
#include "srcartier/simplicial_complex.hpp"

namespace srcartier {

/// Facet files:
///
///     # comment
///     n = 5          (optional; defaults to the largest vertex seen)
///     1 2 3
///     1 5
///     -              (the empty facet)
///
/// `n_override` replaces the header value. Throws ParseError.
SimplicialComplex parse_facet_text(std::string_view text, std::optional<int> n_override = {});

/// Ideal files: an optional `n = <int>` header, then one monomial per line
/// in the `x1^2*x3` grammar. Throws ParseError.
MonomialIdeal parse_ideal_text(std::string_view text, std::optional<int> n_override = {});

std::string format_facet_text(const SimplicialComplex& complex);
std::string format_ideal_text(const MonomialIdeal& ideal);

}  // namespace srcartier

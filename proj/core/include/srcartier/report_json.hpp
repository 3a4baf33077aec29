#pragma once

#include <string>

#include "srcartier/chain_complex.hpp"
#include "srcartier/classifier.hpp"
#include "srcartier/cross_validation.hpp"
#include "srcartier/homology.hpp"

namespace srcartier {

/// {"verdict", "n", "V", "core_facets", "free_face", "facet",
///  "witness_monomial", "colon_lhs", "colon_rhs"}, keys in that order.
/// core_facets and witness_monomial are in core coordinates (core vertex k
/// is V[k - 1]); free_face and facet use original labels.
std::string to_json(const ClassificationReport& report, int indent = 2);

/// [{"degree": d, "dim": k}, ...]
std::string to_json(const HomologyProfile& profile, int indent = 2);

/// {"rank": r, "target_dim": t}
std::string to_json(const RankCertificate& certificate, int indent = 2);

/// Totals, mismatch counters and counterexample dump. Runtime is left out
/// so that identical runs serialise identically.
std::string to_json(const CrossValidationReport& report, int indent = 2);

}  // namespace srcartier

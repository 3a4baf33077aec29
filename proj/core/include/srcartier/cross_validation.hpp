#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "srcartier/classifier.hpp"

namespace srcartier {

struct CrossValidationConfig {
  /// Exhaustive sweep over every complex with exhaustive_min_n <= n <=
  /// exhaustive_max_n. An empty range (min > max) skips it.
  int exhaustive_min_n = 1;
  int exhaustive_max_n = 5;
  /// Random trials: for each n here, `trials_per_n` complexes. Trial t on n
  /// vertices uses seed ^ (n << 48) ^ t and density 0.1 * (1 + t mod 9).
  std::vector<int> random_ns{6, 7, 8};
  std::uint64_t trials_per_n = 10000;
  std::uint64_t seed = 42;
  /// Extra Frobenius powers whose verdicts must match q = 2.
  std::vector<std::uint32_t> q_sweep;
  /// Fault injection for harness tests: rewrites the free-face verdict.
  std::function<Verdict(const SimplicialComplex&, Verdict)> free_face_override;
};

struct Counterexample {
  std::string kind;  // "verdict", "witness" or "q-sweep"
  std::string detail;
  SimplicialComplex complex;
};

struct CrossValidationReport {
  std::uint64_t complexes = 0;
  std::uint64_t principally_generated = 0;
  std::uint64_t infinitely_generated = 0;
  /// Number of complexes visited per exhaustive n.
  std::map<int, std::uint64_t> exhaustive_counts;
  std::uint64_t verdict_mismatches = 0;
  std::uint64_t witness_violations = 0;
  std::uint64_t witnesses_checked = 0;
  std::uint64_t q_sweep_mismatches = 0;
  std::vector<Counterexample> counterexamples;
  double seconds = 0.0;

  bool ok() const {
    return verdict_mismatches == 0 && witness_violations == 0 && q_sweep_mismatches == 0;
  }
};

/// Checks one complex: both criteria agree, the witness of an infinitely
/// generated case passes its membership contract on the core, and every
/// q in `q_sweep` gives the q = 2 verdict. Accumulates into `report`.
void cross_check(const SimplicialComplex& complex, const CrossValidationConfig& config,
                 CrossValidationReport& report);

CrossValidationReport cross_validate(const CrossValidationConfig& config);

/// True iff m ∈ (I^[2] : I) and m ∉ I^[2] + (x_1 ⋯ x_n) for I = I_Δ, with Δ
/// not a cone.
bool witness_contract_holds(const SimplicialComplex& core_complex, const Monomial& m);

}  // namespace srcartier

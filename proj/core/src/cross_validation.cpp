#include "srcartier/cross_validation.hpp"

#include <chrono>

#include "srcartier/enumeration.hpp"
#include "srcartier/stanley_reisner.hpp"

namespace srcartier {

bool witness_contract_holds(const SimplicialComplex& core_complex, const Monomial& m) {
  const MonomialIdeal ideal = ideal_of_complex(core_complex);
  const MonomialIdeal frob = frobenius_power(ideal, 2);
  const auto n = static_cast<std::size_t>(core_complex.ground_size());
  const MonomialIdeal rhs =
      add(frob, MonomialIdeal::principal(Monomial::squarefree(n, core_complex.ground_set())));
  return colon(frob, ideal).contains(m) && !rhs.contains(m);
}

void cross_check(const SimplicialComplex& complex, const CrossValidationConfig& config,
                 CrossValidationReport& report) {
  ++report.complexes;
  const ClassificationReport by_ideal = classify_via_ideal(complex, 2);
  const ClassificationReport by_free_face = classify_via_free_face(complex);
  Verdict combinatorial = by_free_face.verdict;
  if (config.free_face_override) combinatorial = config.free_face_override(complex, combinatorial);

  if (by_ideal.principally_generated()) {
    ++report.principally_generated;
  } else {
    ++report.infinitely_generated;
  }
  if (by_ideal.verdict != combinatorial) {
    ++report.verdict_mismatches;
    report.counterexamples.push_back(
        {"verdict",
         "ideal=" + std::string(to_string(by_ideal.verdict)) +
             " free_face=" + std::string(to_string(combinatorial)),
         complex});
  }
  if (by_free_face.monomial_witness) {
    ++report.witnesses_checked;
    if (!witness_contract_holds(by_free_face.core.core, *by_free_face.monomial_witness)) {
      ++report.witness_violations;
      report.counterexamples.push_back(
          {"witness", "m=" + to_string(*by_free_face.monomial_witness), complex});
    }
  }
  for (std::uint32_t q : config.q_sweep) {
    if (q == 2) continue;
    const Verdict v = classify_via_ideal(complex, q).verdict;
    if (v != by_ideal.verdict) {
      ++report.q_sweep_mismatches;
      report.counterexamples.push_back({"q-sweep",
                                        "q=" + std::to_string(q) + " gives " +
                                            std::string(to_string(v)) + ", q=2 gives " +
                                            std::string(to_string(by_ideal.verdict)),
                                        complex});
    }
  }
}

CrossValidationReport cross_validate(const CrossValidationConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  CrossValidationReport report;
  for (int n = config.exhaustive_min_n; n <= config.exhaustive_max_n; ++n) {
    report.exhaustive_counts[n] = for_each_complex(
        n, [&](const SimplicialComplex& complex) { cross_check(complex, config, report); });
  }
  for (int n : config.random_ns) {
    for (std::uint64_t t = 0; t < config.trials_per_n; ++t) {
      const std::uint64_t trial_seed = config.seed ^ (static_cast<std::uint64_t>(n) << 48) ^ t;
      const double density = 0.1 * static_cast<double>(1 + t % 9);
      cross_check(random_complex(n, density, trial_seed), config, report);
    }
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace srcartier

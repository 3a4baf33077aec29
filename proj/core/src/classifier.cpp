#include "srcartier/classifier.hpp"

#include <stdexcept>

#include "srcartier/errors.hpp"
#include "srcartier/stanley_reisner.hpp"

namespace srcartier {

std::string_view to_string(Verdict v) {
  return v == Verdict::PrincipallyGenerated ? "pg" : "infgen";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Ideal: return "ideal";
    case Method::FreeFace: return "free_face";
    case Method::Both: return "both";
  }
  return "both";
}

ClassificationReport classify_via_ideal(const SimplicialComplex& complex, std::uint32_t q) {
  if (q < 2) throw std::invalid_argument("Frobenius power q must be >= 2");
  ClassificationReport report;
  report.method = Method::Ideal;
  report.n = complex.ground_size();
  report.q = q;
  report.support = support_vertices(complex);
  report.core = core(complex);
  report.core_used = report.support != complex.ground_set();

  const MonomialIdeal ideal = ideal_of_complex(complex);
  if (ideal.is_zero()) {
    report.regular_short_circuit = true;
    report.verdict = Verdict::PrincipallyGenerated;
    return report;
  }
  const auto n = static_cast<std::size_t>(report.n);
  const MonomialIdeal frob = frobenius_power(ideal, q);
  const Monomial corner = power(Monomial::squarefree(n, report.support), q - 1);
  report.colon_lhs = colon(frob, ideal);
  report.colon_rhs = add(frob, MonomialIdeal::principal(corner));
  report.verdict = *report.colon_lhs == *report.colon_rhs ? Verdict::PrincipallyGenerated
                                                          : Verdict::InfinitelyGenerated;
  return report;
}

Monomial witness_monomial(const SimplicialComplex& complex, const FreeFacePair& pair) {
  if (support_vertices(complex) != complex.ground_set()) {
    throw std::invalid_argument("witness monomials need a complex that is not a cone; pass its core");
  }
  if (!is_free_pair(complex, pair)) {
    throw std::invalid_argument("(" + to_string(pair.free_face) + ", " + to_string(pair.facet) +
                                ") is not a free-face pair");
  }
  const auto n = static_cast<std::size_t>(complex.ground_size());
  std::vector<Monomial::Exponent> exps(n, 1);
  exps[static_cast<std::size_t>(pair.apex() - 1)] = 0;
  for (int i : pair.free_face.vertices()) exps[static_cast<std::size_t>(i - 1)] = 2;
  return Monomial(std::move(exps));
}

ClassificationReport classify_via_free_face(const SimplicialComplex& complex) {
  ClassificationReport report;
  report.method = Method::FreeFace;
  report.n = complex.ground_size();
  report.support = support_vertices(complex);
  report.core = core(complex);
  report.core_used = report.support != complex.ground_set();
  report.regular_short_circuit = report.support.empty();

  const auto pairs = free_faces(report.core.core);
  if (pairs.empty()) {
    report.verdict = Verdict::PrincipallyGenerated;
    return report;
  }
  const FreeFacePair& first = pairs.front();
  report.verdict = Verdict::InfinitelyGenerated;
  report.free_face_witness =
      FreeFacePair{report.core.to_original(first.free_face), report.core.to_original(first.facet)};
  report.monomial_witness = witness_monomial(report.core.core, first);
  return report;
}

ClassificationReport classify(const SimplicialComplex& complex, Method method, std::uint32_t q) {
  switch (method) {
    case Method::Ideal: return classify_via_ideal(complex, q);
    case Method::FreeFace: return classify_via_free_face(complex);
    case Method::Both: break;
  }
  ClassificationReport merged = classify_via_ideal(complex, q);
  const ClassificationReport combinatorial = classify_via_free_face(complex);
  if (merged.verdict != combinatorial.verdict) {
    throw InconsistencyError("colon-ideal test says " + std::string(to_string(merged.verdict)) +
                             " but free-face test says " +
                             std::string(to_string(combinatorial.verdict)) + " for " +
                             to_string(complex));
  }
  merged.method = Method::Both;
  merged.free_face_witness = combinatorial.free_face_witness;
  merged.monomial_witness = combinatorial.monomial_witness;
  return merged;
}

Monomial lift_to_ambient(const Monomial& core_monomial, const CoreDecomposition& core, int n) {
  if (core_monomial.num_vars() != core.vertex_map.size()) {
    throw std::invalid_argument("monomial does not live in the core ring");
  }
  std::vector<Monomial::Exponent> exps(static_cast<std::size_t>(n), 0);
  for (std::size_t k = 0; k < core.vertex_map.size(); ++k) {
    exps[static_cast<std::size_t>(core.vertex_map[k] - 1)] = core_monomial.exponents()[k];
  }
  return Monomial(std::move(exps));
}

}  // namespace srcartier

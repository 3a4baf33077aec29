#include "srcartier/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace srcartier {
namespace {

bool all_links(const SimplicialComplex& complex, const PrimeField& field, bool sphere) {
  for (Face f : complex.faces()) {
    const SimplicialComplex lk = link(complex, f);
    const int d = lk.dimension();
    const HomologyProfile h = reduced_betti(lk, field);
    for (int i = -1; i < d; ++i) {
      if (h.dim(i) != 0) return false;
    }
    if (sphere && h.dim(d) != 1) return false;
  }
  return true;
}

}  // namespace

HomologyProfile reduced_betti(const SimplicialComplex& complex, const PrimeField& field) {
  return ChainComplex(complex, [](Face) { return true; }, field).homology();
}

HomologyProfile relative_betti(const SimplicialComplex& complex, const SimplicialComplex& sub,
                               const PrimeField& field) {
  if (sub.ground_size() != complex.ground_size()) {
    throw std::invalid_argument("subcomplex lives on a different ground set");
  }
  for (Face g : sub.facets()) {
    if (!complex.is_face(g)) {
      throw std::invalid_argument(to_string(g) + " is in the subcomplex but not in the complex");
    }
  }
  // ∅ lies in every nonvoid subcomplex, so the profile starts at degree 0.
  return ChainComplex(complex, [&sub](Face f) { return !sub.is_face(f); }, field).homology();
}

HomologyProfile contrastar_betti(const SimplicialComplex& complex, Face f, const PrimeField& field) {
  if (!complex.is_face(f)) throw std::invalid_argument(to_string(f) + " is not a face");
  return ChainComplex(complex, [f](Face s) { return f.is_subset_of(s); }, field).homology();
}

RankCertificate relative_map_certificate(const SimplicialComplex& complex, Face f, Face g,
                                         int degree, const PrimeField& field) {
  if (!f.is_subset_of(g)) {
    throw std::invalid_argument(to_string(f) + " is not contained in " + to_string(g));
  }
  if (!complex.is_face(g)) throw std::invalid_argument(to_string(g) + " is not a face");

  const ChainComplex source(complex, [f](Face s) { return f.is_subset_of(s); }, field);
  const ChainComplex target(complex, [g](Face s) { return g.is_subset_of(s); }, field);
  RankCertificate cert;
  cert.target_dim = target.homology().dim(degree);
  if (cert.target_dim == 0) return cert;

  // rank = dim(π(Z_d(source)) + B_d(target)) - dim B_d(target).
  const auto src_basis = source.basis(degree);
  const auto tgt_basis = target.basis(degree);
  const auto cycles = kernel_basis(source.boundary(degree), field);
  const FieldMatrix& upper = target.boundary(degree + 1);
  const std::size_t extra = upper.rows() == tgt_basis.size() ? upper.cols() : 0;

  FieldMatrix span(tgt_basis.size(), cycles.size() + extra);
  for (std::size_t r = 0; r < tgt_basis.size(); ++r) {
    // Every target basis face contains G, hence F, so it is a source face.
    const auto it = std::lower_bound(src_basis.begin(), src_basis.end(), tgt_basis[r], GradedLexLess{});
    const auto src_row = static_cast<std::size_t>(it - src_basis.begin());
    for (std::size_t c = 0; c < cycles.size(); ++c) span.at(r, c) = cycles[c][src_row];
    for (std::size_t c = 0; c < extra; ++c) span.at(r, cycles.size() + c) = upper.at(r, c);
  }
  cert.rank = rank(span, field) - (extra == 0 ? 0 : rank(upper, field));
  return cert;
}

bool relative_map_is_surjective(const SimplicialComplex& complex, Face f, Face g, int degree,
                                const PrimeField& field) {
  return relative_map_certificate(complex, f, g, degree, field).surjective();
}

long long reduced_euler_characteristic(const SimplicialComplex& complex) {
  long long chi = 0;
  for (Face f : complex.faces()) chi += (f.size() - 1) % 2 == 0 ? 1 : -1;
  return chi;
}

bool is_cohen_macaulay(const SimplicialComplex& complex, const PrimeField& field) {
  return all_links(complex, field, false);
}

bool is_doubly_cohen_macaulay(const SimplicialComplex& complex, const PrimeField& field) {
  if (!is_cohen_macaulay(complex, field)) return false;
  const int d = complex.dimension();
  for (int v : complex.vertices().vertices()) {
    const SimplicialComplex rest = deletion(complex, v);
    if (rest.dimension() != d || !is_cohen_macaulay(rest, field)) return false;
  }
  return true;
}

bool is_gorenstein_star(const SimplicialComplex& complex, const PrimeField& field) {
  return all_links(complex, field, true);
}

bool is_gorenstein(const SimplicialComplex& complex, const PrimeField& field) {
  return is_gorenstein_star(core(complex).core, field);
}

std::optional<BuchsbaumStarRefutation> buchsbaum_star_refutation(const SimplicialComplex& complex,
                                                                 const PrimeField& field) {
  BuchsbaumStarRefutation r;
  const Face cone = cone_vertices(complex);
  if (!cone.empty()) r.cone_vertex = cone.min_vertex();
  const int d = complex.dimension();
  for (const auto& pair : free_faces(complex)) {
    const RankCertificate cert = relative_map_certificate(complex, pair.free_face, pair.facet, d, field);
    if (!cert.surjective()) {
      r.pair = pair;
      r.certificate = cert;
      break;
    }
  }
  if (!r.cone_vertex && !r.pair) return std::nullopt;
  return r;
}

}  // namespace srcartier

#include "srcartier/simplicial_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace srcartier {
namespace {

void check_ground_size(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("ground set size " + std::to_string(n) + " outside [0, 64]");
  }
}

// Inclusion-maximal elements in graded-lex order. Works from the largest
// faces down, so each candidate only needs to be checked against survivors.
std::vector<Face> maximal_elements(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(), [](Face a, Face b) { return graded_lex_less(b, a); });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> kept;
  for (Face f : faces) {
    const bool dominated =
        std::any_of(kept.begin(), kept.end(), [f](Face g) { return f.is_subset_of(g); });
    if (!dominated) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end(), GradedLexLess{});
  return kept;
}

// Enumerates every subset of `mask` (including ∅ and mask itself).
template <typename Fn>
void for_each_subset(Face mask, Fn&& fn) {
  const std::uint64_t m = mask.bits();
  std::uint64_t s = m;
  while (true) {
    fn(Face::from_bits(s));
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_faces(std::span<const Face> faces, int n) {
  check_ground_size(n);
  const Face ground = Face::ground_set(n);
  for (Face f : faces) {
    if (!f.is_subset_of(ground)) {
      throw std::invalid_argument("face " + to_string(f) + " is not a subset of [" +
                                  std::to_string(n) + "]");
    }
  }
  SimplicialComplex out;
  out.n_ = n;
  if (faces.empty()) {
    out.facets_ = {Face{}};
  } else {
    out.facets_ = maximal_elements(std::vector<Face>(faces.begin(), faces.end()));
  }
  return out;
}

bool SimplicialComplex::is_face(Face f) const {
  return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return f.is_subset_of(g); });
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (Face g : facets_) d = std::max(d, g.size() - 1);
  return d;
}

bool SimplicialComplex::is_pure() const {
  const int k = facets_.front().size();
  return std::all_of(facets_.begin(), facets_.end(), [k](Face g) { return g.size() == k; });
}

std::vector<Face> SimplicialComplex::faces() const {
  std::vector<Face> out;
  for (Face g : facets_) {
    for_each_subset(g, [&out](Face f) { out.push_back(f); });
  }
  std::sort(out.begin(), out.end(), GradedLexLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Face SimplicialComplex::vertices() const {
  Face v;
  for (Face g : facets_) v = v | g;
  return v;
}

SimplicialComplex build_complex(const std::vector<std::vector<int>>& facet_list, int n) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("n = " + std::to_string(n) + " outside [1, 64]");
  }
  std::vector<Face> faces;
  faces.reserve(facet_list.size());
  for (const auto& vs : facet_list) {
    for (int v : vs) {
      if (v < 1 || v > n) {
        throw std::out_of_range("vertex " + std::to_string(v) + " outside [1, " +
                                std::to_string(n) + "]");
      }
    }
    faces.push_back(Face::from_vertices(vs));
  }
  return SimplicialComplex::from_faces(faces, n);
}

SimplicialComplex full_simplex(int n) {
  const Face all = Face::ground_set(n);
  return SimplicialComplex::from_faces(std::span<const Face>(&all, 1), n);
}

std::vector<Face> facets_containing(const SimplicialComplex& complex, Face f) {
  std::vector<Face> out;
  for (Face g : complex.facets()) {
    if (f.is_subset_of(g)) out.push_back(g);
  }
  if (out.empty()) throw std::invalid_argument(to_string(f) + " is not a face");
  return out;
}

bool free_pair_less(const FreeFacePair& a, const FreeFacePair& b) {
  if (a.free_face != b.free_face) return graded_lex_less(a.free_face, b.free_face);
  return a.apex() < b.apex();
}

std::vector<FreeFacePair> free_faces(const SimplicialComplex& complex) {
  const auto facets = complex.facets();
  std::vector<FreeFacePair> out;
  for (Face g : facets) {
    for (int v : g.vertices()) {
      const Face f = g.without(v);
      const bool unique = std::none_of(facets.begin(), facets.end(), [f, g](Face h) {
        return h != g && f.is_subset_of(h);
      });
      if (unique) out.push_back({f, g});
    }
  }
  std::sort(out.begin(), out.end(), free_pair_less);
  return out;
}

bool is_free_pair(const SimplicialComplex& complex, const FreeFacePair& pair) {
  if (!pair.free_face.is_subset_of(pair.facet) || pair.facet.size() != pair.free_face.size() + 1) {
    return false;
  }
  const auto facets = complex.facets();
  if (std::find(facets.begin(), facets.end(), pair.facet) == facets.end()) return false;
  return std::none_of(facets.begin(), facets.end(), [&pair](Face h) {
    return h != pair.facet && pair.free_face.is_subset_of(h);
  });
}

SimplicialComplex elementary_collapse(const SimplicialComplex& complex, const FreeFacePair& pair) {
  if (!is_free_pair(complex, pair)) {
    throw std::invalid_argument("(" + to_string(pair.free_face) + ", " + to_string(pair.facet) +
                                ") is not a free-face pair");
  }
  if (pair.free_face.empty()) {
    throw std::invalid_argument("collapsing a point would leave the void complex");
  }
  // Faces of G other than F and G are covered by the codimension-one faces
  // G \ {j}, j in F.
  std::vector<Face> faces;
  for (Face g : complex.facets()) {
    if (g != pair.facet) faces.push_back(g);
  }
  for (int j : pair.free_face.vertices()) faces.push_back(pair.facet.without(j));
  return SimplicialComplex::from_faces(faces, complex.ground_size());
}

CollapseResult collapse_greedy(const SimplicialComplex& complex) {
  CollapseResult result{complex, {}};
  while (true) {
    const auto pairs = free_faces(result.complex);
    auto it = std::find_if(pairs.begin(), pairs.end(),
                           [](const FreeFacePair& p) { return !p.free_face.empty(); });
    if (it == pairs.end()) break;
    result.complex = elementary_collapse(result.complex, *it);
    result.steps.push_back(*it);
  }
  return result;
}

Face cone_vertices(const SimplicialComplex& complex) {
  Face common = complex.ground_set();
  for (Face g : complex.facets()) common = common & g;
  return common;
}

Face support_vertices(const SimplicialComplex& complex) {
  return complex.ground_set() - cone_vertices(complex);
}

Face CoreDecomposition::to_original(Face core_face) const {
  Face out;
  for (int k : core_face.vertices()) out = out.with(vertex_map.at(static_cast<std::size_t>(k - 1)));
  return out;
}

Face CoreDecomposition::to_core(Face original_face) const {
  Face out;
  for (int v : original_face.vertices()) {
    auto it = std::find(vertex_map.begin(), vertex_map.end(), v);
    if (it == vertex_map.end()) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " is not a support vertex");
    }
    out = out.with(static_cast<int>(it - vertex_map.begin()) + 1);
  }
  return out;
}

CoreDecomposition core(const SimplicialComplex& complex) {
  CoreDecomposition out;
  out.cone = cone_vertices(complex);
  out.vertex_map = support_vertices(complex).vertices();
  std::vector<Face> restricted;
  for (Face g : complex.facets()) {
    Face r;
    for (std::size_t k = 0; k < out.vertex_map.size(); ++k) {
      if (g.contains(out.vertex_map[k])) r = r.with(static_cast<int>(k) + 1);
    }
    restricted.push_back(r);
  }
  out.core = SimplicialComplex::from_faces(restricted, static_cast<int>(out.vertex_map.size()));
  return out;
}

SimplicialComplex join_with_simplex(const SimplicialComplex& base, std::span<const int> vertex_map,
                                    Face cone, int n) {
  if (static_cast<int>(vertex_map.size()) != base.ground_size()) {
    throw std::invalid_argument("vertex map does not match the base ground set");
  }
  std::vector<Face> faces;
  for (Face g : base.facets()) {
    Face mapped = cone;
    for (int k : g.vertices()) mapped = mapped.with(vertex_map[static_cast<std::size_t>(k - 1)]);
    faces.push_back(mapped);
  }
  return SimplicialComplex::from_faces(faces, n);
}

SimplicialComplex link(const SimplicialComplex& complex, Face f) {
  if (!complex.is_face(f)) throw std::invalid_argument(to_string(f) + " is not a face");
  std::vector<Face> faces;
  for (Face g : complex.facets()) {
    if (f.is_subset_of(g)) faces.push_back(g - f);
  }
  return SimplicialComplex::from_faces(faces, complex.ground_size());
}

SimplicialComplex deletion(const SimplicialComplex& complex, int v) {
  if (v < 1 || v > complex.ground_size()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside the ground set");
  }
  std::vector<Face> faces;
  for (Face g : complex.facets()) faces.push_back(g.without(v));
  return SimplicialComplex::from_faces(faces, complex.ground_size());
}

SimplicialComplex contrastar(const SimplicialComplex& complex, Face f) {
  if (!complex.is_face(f)) throw std::invalid_argument(to_string(f) + " is not a face");
  if (f.empty()) throw std::invalid_argument("the contrastar of the empty face is void");
  std::vector<Face> faces;
  for (Face g : complex.facets()) {
    if (!f.is_subset_of(g)) {
      faces.push_back(g);
    } else {
      for (int v : f.vertices()) faces.push_back(g.without(v));
    }
  }
  return SimplicialComplex::from_faces(faces, complex.ground_size());
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& complex) {
  // Level-by-level: a minimal non-face of size k is F ∪ {v} with F a face of
  // size k - 1, v > max(F), all of whose (k - 1)-subsets are faces.
  const int n = complex.ground_size();
  std::vector<Face> out;
  std::vector<Face> level{Face{}};
  for (int k = 1; k <= n && !level.empty(); ++k) {
    std::vector<Face> next;
    for (Face f : level) {
      for (int v = f.max_vertex() + 1; v <= n; ++v) {
        const Face c = f.with(v);
        if (complex.is_face(c)) {
          next.push_back(c);
          continue;
        }
        bool minimal = true;
        for (int u : f.vertices()) {
          if (!complex.is_face(c.without(u))) {
            minimal = false;
            break;
          }
        }
        if (minimal) out.push_back(c);
      }
    }
    level = std::move(next);
  }
  std::sort(out.begin(), out.end(), GradedLexLess{});
  return out;
}

std::string to_string(const SimplicialComplex& complex) {
  std::string s = "[";
  bool first = true;
  for (Face g : complex.facets()) {
    if (!first) s += ' ';
    s += to_string(g);
    first = false;
  }
  s += "] on " + std::to_string(complex.ground_size());
  return s;
}

}  // namespace srcartier

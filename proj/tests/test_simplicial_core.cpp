#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "srcartier/enumeration.hpp"
#include "srcartier/simplicial_complex.hpp"

namespace srcartier {
namespace {

using fixtures::face;

std::vector<Face> faces_of(std::initializer_list<std::initializer_list<int>> lists) {
  std::vector<Face> out;
  for (auto l : lists) out.push_back(Face::from_vertices(l));
  return out;
}

bool is_antichain(std::span<const Face> facets) {
  for (Face a : facets) {
    for (Face b : facets) {
      if (a != b && a.is_subset_of(b)) return false;
    }
  }
  return true;
}

TEST(Face, GradedLexOrder) {
  EXPECT_TRUE(graded_lex_less(face({}), face({1})));
  EXPECT_TRUE(graded_lex_less(face({3}), face({1, 2})));
  EXPECT_TRUE(graded_lex_less(face({1, 3}), face({2, 3})));
  EXPECT_TRUE(graded_lex_less(face({1, 4}), face({2, 3})));
  EXPECT_FALSE(graded_lex_less(face({2, 3}), face({2, 3})));
  EXPECT_EQ(to_string(face({})), "{}");
  EXPECT_EQ(to_string(face({1, 5})), "{1,5}");
}

TEST(Face, VertexRange) {
  EXPECT_THROW(face({0}), std::out_of_range);
  EXPECT_THROW(face({65}), std::out_of_range);
  EXPECT_EQ(face({64}).max_vertex(), 64);
}

TEST(BuildComplex, NonPureFlap) {
  const auto c = fixtures::nonpure_flap();
  EXPECT_EQ(c.ground_size(), 5);
  EXPECT_EQ(c.facets().size(), 6U);
  EXPECT_EQ(c.dimension(), 2);
  EXPECT_FALSE(c.is_pure());
}

TEST(BuildComplex, DropsNonMaximal) {
  const auto c = build_complex({{1, 2}, {1}, {2, 3}, {1, 2}}, 3);
  EXPECT_EQ(std::vector<Face>(c.facets().begin(), c.facets().end()), faces_of({{1, 2}, {2, 3}}));
}

TEST(BuildComplex, EmptyListIsIrrelevantComplex) {
  const auto c = build_complex({}, 3);
  ASSERT_EQ(c.facets().size(), 1U);
  EXPECT_TRUE(c.facets()[0].empty());
  EXPECT_EQ(c.dimension(), -1);
}

TEST(BuildComplex, RejectsBadInput) {
  EXPECT_THROW(build_complex({{1, 4}}, 3), std::out_of_range);
  EXPECT_THROW(build_complex({{1}}, 0), std::invalid_argument);
  EXPECT_THROW(build_complex({{1}}, 65), std::invalid_argument);
}

TEST(IsFace, Examples) {
  const auto c = fixtures::nonpure_flap();
  EXPECT_TRUE(c.is_face(face({})));
  EXPECT_TRUE(c.is_face(face({1, 5})));
  EXPECT_FALSE(c.is_face(face({3, 5})));
  EXPECT_FALSE(c.is_face(face({1, 2, 5})));
  EXPECT_FALSE(c.is_face(face({1, 2, 3, 4})));
}

TEST(Dimension, Examples) {
  EXPECT_EQ(fixtures::path().dimension(), 1);
  EXPECT_EQ(fixtures::solid_triangle().dimension(), 2);
  EXPECT_EQ(full_simplex(4).dimension(), 3);
}

TEST(FacetsContaining, Examples) {
  const auto c = fixtures::nonpure_flap();
  EXPECT_EQ(facets_containing(c, face({5})), faces_of({{1, 5}, {2, 5}}));
  EXPECT_EQ(facets_containing(c, face({1, 2})), faces_of({{1, 2, 3}, {1, 2, 4}}));
  EXPECT_THROW(facets_containing(c, face({3, 5})), std::invalid_argument);
}

TEST(FreeFaces, Examples) {
  EXPECT_TRUE(free_faces(fixtures::nonpure_flap()).empty());
  EXPECT_TRUE(free_faces(fixtures::hollow_triangle()).empty());
  const auto path_pairs = free_faces(fixtures::path());
  ASSERT_EQ(path_pairs.size(), 2U);
  EXPECT_EQ(path_pairs[0], (FreeFacePair{face({1}), face({1, 2})}));
  EXPECT_EQ(path_pairs[1], (FreeFacePair{face({3}), face({2, 3})}));
  const auto tri = free_faces(fixtures::solid_triangle());
  ASSERT_EQ(tri.size(), 3U);
  EXPECT_EQ(tri[0], (FreeFacePair{face({1, 2}), face({1, 2, 3})}));
  EXPECT_EQ(tri[0].apex(), 3);
}

TEST(FreeFaces, MatchesDefinitionScanExhaustively) {
  for (int n = 1; n <= 4; ++n) {
    for_each_complex(n, [n](const SimplicialComplex& c) {
      std::set<oracle::Pair> got;
      for (const auto& p : free_faces(c)) {
        got.insert({p.free_face.bits(), p.facet.bits()});
        EXPECT_TRUE(is_free_pair(c, p));
      }
      ASSERT_EQ(got, oracle::free_pairs(fixtures::facet_masks(c), n)) << to_string(c);
    });
  }
}

TEST(FreeFaces, SortedByPairOrder) {
  for_each_complex(4, [](const SimplicialComplex& c) {
    const auto pairs = free_faces(c);
    EXPECT_TRUE(std::is_sorted(pairs.begin(), pairs.end(), free_pair_less));
  });
}

TEST(ElementaryCollapse, Path) {
  const auto c = elementary_collapse(fixtures::path(), {face({1}), face({1, 2})});
  EXPECT_EQ(c, build_complex({{2, 3}}, 3));
}

TEST(ElementaryCollapse, RejectsNonFreeAndPoint) {
  EXPECT_THROW(elementary_collapse(fixtures::hollow_triangle(), {face({1}), face({1, 2})}),
               std::invalid_argument);
  EXPECT_THROW(elementary_collapse(build_complex({{1}}, 1), {face({}), face({1})}),
               std::invalid_argument);
}

TEST(ElementaryCollapse, RemovesExactlyTwoFaces) {
  for_each_complex(4, [](const SimplicialComplex& c) {
    for (const auto& p : free_faces(c)) {
      if (p.free_face.empty()) continue;
      const auto d = elementary_collapse(c, p);
      EXPECT_TRUE(is_antichain(d.facets()));
      auto before = c.faces();
      auto after = d.faces();
      ASSERT_EQ(after.size() + 2, before.size());
      EXPECT_FALSE(d.is_face(p.free_face));
      EXPECT_FALSE(d.is_face(p.facet));
    }
  });
}

TEST(CollapseGreedy, Examples) {
  const auto path = collapse_greedy(fixtures::path());
  EXPECT_EQ(path.steps.size(), 2U);
  EXPECT_EQ(path.complex, build_complex({{3}}, 3));
  const auto flap = collapse_greedy(fixtures::nonpure_flap());
  EXPECT_TRUE(flap.steps.empty());
  EXPECT_EQ(flap.complex, fixtures::nonpure_flap());
  EXPECT_EQ(collapse_greedy(fixtures::solid_triangle()).complex.facets().size(), 1U);
  EXPECT_EQ(collapse_greedy(fixtures::solid_triangle()).complex.dimension(), 0);
}

TEST(ConeAndSupport, Examples) {
  EXPECT_EQ(cone_vertices(fixtures::path()), face({2}));
  EXPECT_EQ(support_vertices(fixtures::path()), face({1, 3}));
  EXPECT_EQ(cone_vertices(fixtures::cone_hollow_triangle()), face({4}));
  EXPECT_TRUE(cone_vertices(fixtures::nonpure_flap()).empty());
  EXPECT_TRUE(support_vertices(full_simplex(3)).empty());
}

TEST(Core, ConeOverHollowTriangle) {
  const auto dec = core(fixtures::cone_hollow_triangle());
  EXPECT_EQ(dec.core, fixtures::hollow_triangle());
  EXPECT_EQ(dec.vertex_map, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(dec.cone, face({4}));
}

TEST(Core, Path) {
  const auto dec = core(fixtures::path());
  EXPECT_EQ(dec.core, build_complex({{1}, {2}}, 2));
  EXPECT_EQ(dec.vertex_map, (std::vector<int>{1, 3}));
  EXPECT_EQ(dec.to_original(face({2})), face({3}));
  EXPECT_EQ(dec.to_core(face({3})), face({2}));
  EXPECT_THROW(dec.to_core(face({2})), std::invalid_argument);
}

TEST(Core, FullSimplexIsEmptyComplexOnNoVertices) {
  const auto dec = core(full_simplex(3));
  EXPECT_EQ(dec.core.ground_size(), 0);
  EXPECT_EQ(dec.core.dimension(), -1);
  EXPECT_TRUE(dec.vertex_map.empty());
}

TEST(Core, JoinReconstructsExhaustively) {
  for (int n = 1; n <= 5; ++n) {
    for_each_complex(n, [n](const SimplicialComplex& c) {
      const auto dec = core(c);
      EXPECT_TRUE(cone_vertices(dec.core).empty() || dec.core.ground_size() == 0);
      ASSERT_EQ(join_with_simplex(dec.core, dec.vertex_map, dec.cone, n), c) << to_string(c);
    });
  }
}

TEST(Core, SupportIsUnionOfMinimalNonfaces) {
  for (int n = 1; n <= 5; ++n) {
    for_each_complex(n, [n](const SimplicialComplex& c) {
      oracle::Mask u = 0;
      for (auto m : oracle::minimal_nonfaces(fixtures::facet_masks(c), n)) u |= m;
      ASSERT_EQ(support_vertices(c).bits(), u) << to_string(c);
    });
  }
}

TEST(LinkDeletionContrastar, Examples) {
  const auto flap = fixtures::nonpure_flap();
  EXPECT_EQ(link(flap, face({5})), build_complex({{1}, {2}}, 5));
  EXPECT_EQ(link(flap, face({1, 2})), build_complex({{3}, {4}}, 5));
  EXPECT_EQ(link(flap, face({})), flap);
  EXPECT_EQ(deletion(flap, 5), build_complex({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}, 5));
  EXPECT_EQ(contrastar(fixtures::solid_triangle(), face({1, 2})), build_complex({{1, 3}, {2, 3}}, 3));
  EXPECT_THROW(contrastar(flap, face({})), std::invalid_argument);
  EXPECT_THROW(link(flap, face({3, 5})), std::invalid_argument);
}

TEST(LinkDeletionContrastar, MatchDefinitionsExhaustively) {
  for_each_complex(4, [](const SimplicialComplex& c) {
    const auto all = oracle::faces(fixtures::facet_masks(c), 4);
    const std::set<oracle::Mask> faces(all.begin(), all.end());
    for (Face f : c.faces()) {
      std::set<oracle::Mask> lk;
      std::set<oracle::Mask> cost;
      for (auto g : faces) {
        if ((g & f.bits()) == 0 && faces.count(g | f.bits())) lk.insert(g);
        if (!f.empty() && !oracle::subset(f.bits(), g)) cost.insert(g);
      }
      auto l = link(c, f).faces();
      std::set<oracle::Mask> got;
      for (Face g : l) got.insert(g.bits());
      ASSERT_EQ(got, lk);
      if (!f.empty()) {
        got.clear();
        for (Face g : contrastar(c, f).faces()) got.insert(g.bits());
        ASSERT_EQ(got, cost);
      }
    }
  });
}

TEST(MinimalNonfaces, NonPureFlap) {
  EXPECT_EQ(minimal_nonfaces(fixtures::nonpure_flap()),
            faces_of({{3, 5}, {4, 5}, {1, 2, 5}, {1, 2, 3, 4}}));
  EXPECT_TRUE(minimal_nonfaces(full_simplex(4)).empty());
  EXPECT_EQ(minimal_nonfaces(build_complex({}, 2)), faces_of({{1}, {2}}));
}

TEST(MinimalNonfaces, MatchesSubsetScanExhaustively) {
  for (int n = 1; n <= 5; ++n) {
    for_each_complex(n, [n](const SimplicialComplex& c) {
      std::set<oracle::Mask> got;
      const auto nonfaces = minimal_nonfaces(c);
      EXPECT_TRUE(std::is_sorted(nonfaces.begin(), nonfaces.end(), graded_lex_less));
      for (Face f : nonfaces) got.insert(f.bits());
      const auto expected = oracle::minimal_nonfaces(fixtures::facet_masks(c), n);
      ASSERT_EQ(got, std::set<oracle::Mask>(expected.begin(), expected.end())) << to_string(c);
    });
  }
}

TEST(Invariants, OperationsReturnSortedAntichains) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 2 + static_cast<int>(seed % 7);
    const auto c = random_complex(n, 0.1 + 0.1 * static_cast<double>(seed % 9), seed);
    auto check = [](const SimplicialComplex& d) {
      EXPECT_TRUE(is_antichain(d.facets()));
      EXPECT_TRUE(std::is_sorted(d.facets().begin(), d.facets().end(), graded_lex_less));
      EXPECT_FALSE(d.facets().empty());
    };
    check(c);
    check(core(c).core);
    check(collapse_greedy(c).complex);
    for (int v = 1; v <= n; ++v) check(deletion(c, v));
    for (Face f : c.facets()) check(link(c, f));
  }
}

TEST(Faces, GradedLexAndComplete) {
  const auto c = fixtures::nonpure_flap();
  const auto fs = c.faces();
  EXPECT_TRUE(std::is_sorted(fs.begin(), fs.end(), graded_lex_less));
  EXPECT_EQ(fs.size(), oracle::faces(fixtures::facet_masks(c), 5).size());
  EXPECT_EQ(fs.front(), face({}));
}

}  // namespace
}  // namespace srcartier

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "srcartier/enumeration.hpp"
#include "srcartier/errors.hpp"
#include "srcartier/text_format.hpp"

namespace srcartier {
namespace {

TEST(FacetText, CommentsHeaderAndEmptyFacet) {
  const auto c = parse_facet_text("# a comment\nn = 5\n1 2 3   # trailing\n\n1 5\n2 5\n");
  EXPECT_EQ(c, build_complex({{1, 2, 3}, {1, 5}, {2, 5}}, 5));
  EXPECT_EQ(parse_facet_text("-\n", 3), build_complex({}, 3));
}

TEST(FacetText, GroundSetDefaultsAndOverride) {
  EXPECT_EQ(parse_facet_text("1 2\n2 3\n").ground_size(), 3);
  EXPECT_EQ(parse_facet_text("1 2\n", 6).ground_size(), 6);
  EXPECT_EQ(parse_facet_text("n = 4\n1 2\n", 5).ground_size(), 5);
}

TEST(FacetText, Errors) {
  EXPECT_THROW(parse_facet_text("n = 3\n1 2\nseven\n"), ParseError);
  EXPECT_THROW(parse_facet_text("n = 2\n1 3\n"), ParseError);
  EXPECT_THROW(parse_facet_text("0 1\n"), ParseError);
  EXPECT_THROW(parse_facet_text(""), ParseError);
  try {
    parse_facet_text("n = 3\n1 2\nseven\n");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(FacetText, RoundTrip) {
  for_each_complex(4, [](const SimplicialComplex& c) {
    ASSERT_EQ(parse_facet_text(format_facet_text(c)), c) << format_facet_text(c);
  });
}

TEST(IdealText, ParseAndRoundTrip) {
  const auto i = parse_ideal_text("# I\nn = 3\nx1*x2\nx2*x3\n");
  EXPECT_EQ(to_string(i), "(x1*x2, x2*x3)");
  EXPECT_EQ(parse_ideal_text(format_ideal_text(i)), i);
  EXPECT_TRUE(parse_ideal_text("n = 3\n").is_zero());
  EXPECT_EQ(parse_ideal_text("x1^2*x4\n").num_vars(), 4U);
  EXPECT_THROW(parse_ideal_text("n = 2\nx3\n"), ParseError);
  EXPECT_THROW(parse_ideal_text("x1**x2\n"), ParseError);
}

}  // namespace
}  // namespace srcartier

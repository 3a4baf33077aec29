#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "srcartier/monomial.hpp"
#include "srcartier/monomial_ideal.hpp"

namespace srcartier {
namespace {

Monomial mono(std::vector<Monomial::Exponent> e) { return Monomial(std::move(e)); }

MonomialIdeal ideal(std::size_t n, std::vector<std::vector<Monomial::Exponent>> gens) {
  std::vector<Monomial> ms;
  for (auto& g : gens) ms.emplace_back(std::move(g));
  return MonomialIdeal::minimize(n, std::move(ms));
}

std::vector<oracle::Exps> raw(const MonomialIdeal& i) {
  std::vector<oracle::Exps> out;
  for (const auto& g : i.gens()) out.emplace_back(g.exponents().begin(), g.exponents().end());
  return out;
}

std::set<oracle::Exps> raw_set(const MonomialIdeal& i) {
  const auto r = raw(i);
  return {r.begin(), r.end()};
}

TEST(Monomial, Arithmetic) {
  const auto a = mono({2, 1, 0});
  const auto b = mono({1, 3, 1});
  EXPECT_EQ(lcm(a, b), mono({2, 3, 1}));
  EXPECT_EQ(gcd(a, b), mono({1, 1, 0}));
  EXPECT_EQ(multiply(a, b), mono({3, 4, 1}));
  EXPECT_EQ(colon_mono(a, b), mono({1, 0, 0}));
  EXPECT_EQ(power(b, 2), mono({2, 6, 2}));
  EXPECT_TRUE(divides(gcd(a, b), a));
  EXPECT_FALSE(divides(a, b));
  EXPECT_EQ(a.total_degree(), 3U);
  EXPECT_EQ(a.support(), Face::from_vertices({1, 2}));
  EXPECT_EQ(a.support_two(), Face::from_vertices({1}));
}

TEST(Monomial, Errors) {
  EXPECT_THROW(multiply(mono({1, 0}), mono({1, 0, 0})), std::invalid_argument);
  EXPECT_THROW(power(mono({Monomial::kMaxExponent / 2 + 1}), 2), std::overflow_error);
  EXPECT_THROW(mono({Monomial::kMaxExponent + 1}), std::overflow_error);
  EXPECT_THROW(Monomial(std::vector<Monomial::Exponent>(65, 0)), std::invalid_argument);
}

TEST(Monomial, TextRoundTrip) {
  EXPECT_EQ(to_string(mono({2, 0, 1})), "x1^2*x3");
  EXPECT_EQ(to_string(Monomial(3)), "1");
  EXPECT_EQ(parse_monomial("x1^2*x3", 3), mono({2, 0, 1}));
  EXPECT_EQ(parse_monomial("1", 2), Monomial(2));
  EXPECT_THROW(parse_monomial("x4", 3), std::exception);
  EXPECT_THROW(parse_monomial("x1^", 3), std::exception);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    std::vector<Monomial::Exponent> e(5);
    for (auto& x : e) x = static_cast<Monomial::Exponent>(rng() % 4);
    EXPECT_EQ(parse_monomial(to_string(mono(e)), 5), mono(e));
  }
}

TEST(Monomial, CanonicalOrder) {
  EXPECT_TRUE(monomial_order_less(mono({0, 1}), mono({1, 1})));
  EXPECT_TRUE(monomial_order_less(mono({2, 0}), mono({1, 1})));
  EXPECT_FALSE(monomial_order_less(mono({1, 1}), mono({1, 1})));
}

TEST(MonomialIdeal, MinimizeDropsMultiplesAndSorts) {
  const auto i = ideal(3, {{1, 1, 1}, {0, 1, 1}, {1, 1, 0}, {1, 1, 0}, {2, 2, 0}});
  ASSERT_EQ(i.gens().size(), 2U);
  EXPECT_EQ(i.gens()[0], mono({1, 1, 0}));
  EXPECT_EQ(i.gens()[1], mono({0, 1, 1}));
}

TEST(MonomialIdeal, MinimizeIsIdempotentAndOrderIndependent) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    std::vector<Monomial> gens;
    const int k = 1 + static_cast<int>(rng() % 8);
    for (int g = 0; g < k; ++g) {
      std::vector<Monomial::Exponent> e(4);
      for (auto& x : e) x = static_cast<Monomial::Exponent>(rng() % 3);
      gens.emplace_back(e);
    }
    const auto once = MonomialIdeal::minimize(4, gens);
    EXPECT_EQ(MonomialIdeal::minimize(4, {once.gens().begin(), once.gens().end()}), once);
    std::shuffle(gens.begin(), gens.end(), rng);
    EXPECT_EQ(MonomialIdeal::minimize(4, gens), once);
    for (const auto& a : once.gens()) {
      for (const auto& b : once.gens()) {
        if (a != b) {
          EXPECT_FALSE(divides(a, b));
        }
      }
    }
  }
}

TEST(MonomialIdeal, ZeroAndUnit) {
  EXPECT_TRUE(MonomialIdeal::zero(3).is_zero());
  EXPECT_TRUE(MonomialIdeal::unit(3).is_unit());
  EXPECT_EQ(to_string(MonomialIdeal::zero(3)), "(0)");
  EXPECT_EQ(ideal(3, {{1, 1, 0}, {0, 0, 1}, {1, 0, 0}}), ideal(3, {{1, 0, 0}, {0, 0, 1}}));
  EXPECT_EQ(to_string(ideal(3, {{0, 1, 1}, {1, 1, 0}})), "(x1*x2, x2*x3)");
}

TEST(MonomialIdeal, AddAndIntersect) {
  const auto a = ideal(2, {{1, 0}});
  const auto b = ideal(2, {{0, 1}});
  EXPECT_EQ(add(a, b), ideal(2, {{1, 0}, {0, 1}}));
  EXPECT_EQ(intersect(a, b), ideal(2, {{1, 1}}));
  EXPECT_EQ(intersect(a, MonomialIdeal::zero(2)), MonomialIdeal::zero(2));
  EXPECT_EQ(add(a, MonomialIdeal::zero(2)), a);
  EXPECT_THROW(add(a, ideal(3, {{1, 0, 0}})), std::invalid_argument);
}

TEST(MonomialIdeal, FrobeniusPower) {
  const auto i = ideal(3, {{1, 1, 0}, {0, 1, 1}});
  EXPECT_EQ(frobenius_power(i, 2), ideal(3, {{2, 2, 0}, {0, 2, 2}}));
  EXPECT_EQ(frobenius_power(i, 3), ideal(3, {{3, 3, 0}, {0, 3, 3}}));
}

TEST(MonomialIdeal, ColonFixtureMatchesMembershipOracle) {
  const auto i = ideal(3, {{1, 1, 0}, {0, 1, 1}});
  const auto i2 = frobenius_power(i, 2);
  const std::set<oracle::Exps> expected{{2, 1, 0}, {1, 1, 1}, {0, 1, 2}};
  ASSERT_EQ(oracle::colon_min_gens_in_box(raw(i2), raw(i), 3, 4), expected);
  EXPECT_EQ(raw_set(colon(i2, i)), expected);
}

TEST(MonomialIdeal, ColonEdgeCases) {
  const auto i = ideal(2, {{1, 1}});
  EXPECT_TRUE(colon(i, MonomialIdeal::zero(2)).is_unit());
  EXPECT_EQ(colon(i, MonomialIdeal::unit(2)), i);
  EXPECT_TRUE(colon(i, i).is_unit());
  EXPECT_TRUE(colon(MonomialIdeal::zero(2), i).is_zero());
}

TEST(MonomialIdeal, ColonMatchesMembershipOracleOnRandomIdeals) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 150; ++t) {
    auto random_ideal = [&rng](int max_gens) {
      std::vector<Monomial> gens;
      const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_gens));
      for (int g = 0; g < k; ++g) {
        std::vector<Monomial::Exponent> e(3);
        for (auto& x : e) x = static_cast<Monomial::Exponent>(rng() % 3);
        gens.emplace_back(e);
      }
      return MonomialIdeal::minimize(3, gens);
    };
    const auto i = random_ideal(4);
    const auto j = random_ideal(3);
    // Generators of I have exponents <= 2, so colon generators do too and the
    // box {0..4}^3 contains every minimal generator.
    const auto expected = oracle::colon_min_gens_in_box(raw(i), raw(j), 3, 4);
    ASSERT_EQ(raw_set(colon(i, j)), expected) << to_string(i) << " : " << to_string(j);
  }
}

TEST(MonomialIdeal, ContainsMatchesOracle) {
  const auto i = ideal(3, {{2, 1, 0}, {0, 1, 2}, {1, 1, 1}});
  const auto gens = raw(i);
  oracle::for_each_in_box(3, 3, [&](const oracle::Exps& e) {
    EXPECT_EQ(i.contains(Monomial(e)), oracle::in_ideal(gens, e));
  });
}

TEST(MonomialIdeal, GeneratorsOutside) {
  const auto lhs = ideal(3, {{2, 1, 0}, {1, 1, 1}, {0, 1, 2}});
  const auto rhs = ideal(3, {{1, 1, 1}, {2, 2, 0}, {0, 2, 2}});
  EXPECT_EQ(generators_outside(lhs, rhs), (std::vector<Monomial>{mono({2, 1, 0}), mono({0, 1, 2})}));
  EXPECT_TRUE(generators_outside(rhs, lhs).empty());
}

}  // namespace
}  // namespace srcartier

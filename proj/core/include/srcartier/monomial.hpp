#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "srcartier/face.hpp"

namespace srcartier {

/// A monomial x_1^{a_1} ... x_n^{a_n} stored as its exponent vector.
///
/// Exponents are capped at kMaxExponent; every arithmetic operation that
/// would exceed the cap throws std::overflow_error rather than wrapping.
/// Variables are 1-based in the interface, matching vertex labels.
class Monomial {
 public:
  using Exponent = std::uint32_t;
  static constexpr Exponent kMaxExponent = Exponent{1} << 16;

  /// The unit monomial in n variables.
  explicit Monomial(std::size_t n = 0);
  /// Throws std::invalid_argument for more than 64 variables, and
  /// std::overflow_error for an exponent above the cap.
  explicit Monomial(std::vector<Exponent> exponents);

  static Monomial variable(std::size_t n, int i);
  /// ∏_{i ∈ F} x_i.
  static Monomial squarefree(std::size_t n, Face f);

  std::size_t num_vars() const { return exps_.size(); }
  Exponent exponent(int i) const { return exps_.at(static_cast<std::size_t>(i - 1)); }
  std::span<const Exponent> exponents() const { return exps_; }
  std::uint64_t total_degree() const;
  bool is_unit() const;
  bool is_squarefree() const;

  /// { i : a_i != 0 }.
  Face support() const;
  /// { i : a_i >= 2 }.
  Face support_two() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// Monomial functions throw std::invalid_argument on mismatched variable counts.
bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial multiply(const Monomial& a, const Monomial& b);
/// a / gcd(a, g): componentwise max(a_i - g_i, 0).
Monomial colon_mono(const Monomial& a, const Monomial& g);
Monomial power(const Monomial& m, std::uint32_t q);

/// Canonical generator order: ascending total degree, then exponent vectors
/// in descending lexicographic order (x1 > x2 > ...).
bool monomial_order_less(const Monomial& a, const Monomial& b);

/// "x1^2*x3"; the unit monomial is "1".
std::string to_string(const Monomial& m);
/// Parses the to_string grammar in n variables. Whitespace around tokens is
/// ignored. Throws ParseError.
Monomial parse_monomial(std::string_view text, std::size_t n);

}  // namespace srcartier

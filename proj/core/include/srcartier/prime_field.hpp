#pragma once

#include <cstdint>

namespace srcartier {

/// GF(p) for a prime 2 <= p < 2^31. Elements are canonical residues.
class PrimeField {
 public:
  using Element = std::uint32_t;

  /// Throws std::invalid_argument unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p = 2);

  std::uint32_t characteristic() const { return p_; }

  Element reduce(std::int64_t x) const {
    const auto p = static_cast<std::int64_t>(p_);
    const std::int64_t r = x % p;
    return static_cast<Element>(r < 0 ? r + p : r);
  }
  Element add(Element a, Element b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((std::uint64_t{a} * b) % p_);
  }
  /// Throws std::domain_error for 0.
  Element inv(Element a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t p);

}  // namespace srcartier

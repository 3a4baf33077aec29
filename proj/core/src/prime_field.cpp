#include "srcartier/prime_field.hpp"

#include <stdexcept>
#include <string>

namespace srcartier {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (std::uint32_t{1} << 31) || !is_prime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not a prime below 2^31");
  }
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("zero has no inverse");
  // Fermat: a^(p-2).
  Element result = 1;
  Element base = a;
  for (std::uint32_t e = p_ - 2; e != 0; e >>= 1) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

}  // namespace srcartier

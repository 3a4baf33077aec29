#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "srcartier/monomial.hpp"

namespace srcartier {

/// A monomial ideal held by its minimal generating set.
///
/// Generators are pairwise non-dividing and sorted by monomial_order_less,
/// so two ideals are equal iff their generator lists are equal. The zero
/// ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t n = 0) : n_(n) {}

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
  static MonomialIdeal unit(std::size_t n);
  static MonomialIdeal principal(const Monomial& m);
  /// Drops every generator divisible by another. Idempotent, and
  /// independent of input order.
  static MonomialIdeal minimize(std::size_t n, std::vector<Monomial> gens);

  std::size_t num_vars() const { return n_; }
  std::span<const Monomial> gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }
  bool is_squarefree() const;

  /// Some generator divides m.
  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t n_;
  std::vector<Monomial> gens_;
};

/// Binary operations throw std::invalid_argument on mismatched rings.
MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// (I : J) = ∩_{g ∈ gens(J)} (I : g). (I : 0) is the unit ideal.
MonomialIdeal colon(const MonomialIdeal& i, const MonomialIdeal& j);
/// I^[q], generated by the q-th powers of the minimal generators.
MonomialIdeal frobenius_power(const MonomialIdeal& i, std::uint32_t q);

/// Generators of `a` that do not lie in `b`.
std::vector<Monomial> generators_outside(const MonomialIdeal& a, const MonomialIdeal& b);

std::string to_string(const MonomialIdeal& ideal);

}  // namespace srcartier

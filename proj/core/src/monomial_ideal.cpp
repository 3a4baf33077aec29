#include "srcartier/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace srcartier {
namespace {

void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) {
    throw std::invalid_argument("ideals live in different rings");
  }
}

}  // namespace

MonomialIdeal MonomialIdeal::unit(std::size_t n) { return principal(Monomial(n)); }

MonomialIdeal MonomialIdeal::principal(const Monomial& m) {
  MonomialIdeal out(m.num_vars());
  out.gens_.push_back(m);
  return out;
}

MonomialIdeal MonomialIdeal::minimize(std::size_t n, std::vector<Monomial> gens) {
  for (const auto& g : gens) {
    if (g.num_vars() != n) throw std::invalid_argument("generator in the wrong ring");
  }
  // A divisor always has total degree <= its multiple, so scanning in
  // canonical order only needs to look back at already-kept generators.
  std::sort(gens.begin(), gens.end(), monomial_order_less);
  MonomialIdeal out(n);
  for (auto& g : gens) {
    const bool redundant = std::any_of(out.gens_.begin(), out.gens_.end(),
                                       [&g](const Monomial& k) { return divides(k, g); });
    if (!redundant) out.gens_.push_back(std::move(g));
  }
  return out;
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.num_vars() != n_) throw std::invalid_argument("monomial in the wrong ring");
  return std::any_of(gens_.begin(), gens_.end(), [&m](const Monomial& g) { return divides(g, m); });
}

MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ring(a, b);
  std::vector<Monomial> gens(a.gens().begin(), a.gens().end());
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal::minimize(a.num_vars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ring(a, b);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const auto& x : a.gens()) {
    for (const auto& y : b.gens()) gens.push_back(lcm(x, y));
  }
  return MonomialIdeal::minimize(a.num_vars(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& i, const MonomialIdeal& j) {
  check_same_ring(i, j);
  if (j.is_zero()) return MonomialIdeal::unit(i.num_vars());
  MonomialIdeal result = MonomialIdeal::unit(i.num_vars());
  for (const auto& g : j.gens()) {
    std::vector<Monomial> quotients;
    quotients.reserve(i.gens().size());
    for (const auto& m : i.gens()) quotients.push_back(colon_mono(m, g));
    result = intersect(result, MonomialIdeal::minimize(i.num_vars(), std::move(quotients)));
    if (result.is_zero()) break;
  }
  return result;
}

MonomialIdeal frobenius_power(const MonomialIdeal& i, std::uint32_t q) {
  if (q < 1) throw std::invalid_argument("Frobenius exponent must be >= 1");
  std::vector<Monomial> gens;
  gens.reserve(i.gens().size());
  for (const auto& g : i.gens()) gens.push_back(power(g, q));
  return MonomialIdeal::minimize(i.num_vars(), std::move(gens));
}

std::vector<Monomial> generators_outside(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ring(a, b);
  std::vector<Monomial> out;
  for (const auto& g : a.gens()) {
    if (!b.contains(g)) out.push_back(g);
  }
  return out;
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string s = "(";
  bool first = true;
  for (const auto& g : ideal.gens()) {
    if (!first) s += ", ";
    s += to_string(g);
    first = false;
  }
  return s + ")";
}

}  // namespace srcartier

#include "srcartier/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "srcartier/errors.hpp"

namespace srcartier {
namespace {

void check_same_ring(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) {
    throw std::invalid_argument("monomials live in different rings (" +
                                std::to_string(a.num_vars()) + " vs " +
                                std::to_string(b.num_vars()) + " variables)");
  }
}

Monomial::Exponent checked(std::uint64_t e) {
  if (e > Monomial::kMaxExponent) {
    throw std::overflow_error("exponent " + std::to_string(e) + " exceeds 2^16");
  }
  return static_cast<Monomial::Exponent>(e);
}

template <typename Op>
Monomial zip(const Monomial& a, const Monomial& b, Op op) {
  check_same_ring(a, b);
  std::vector<Monomial::Exponent> out(a.num_vars());
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(ea[i], eb[i]);
  return Monomial(std::move(out));
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || p != end) {
    throw ParseError("bad " + std::string(what) + " '" + std::string(s) + "'", 0);
  }
  return v;
}

}  // namespace

Monomial::Monomial(std::size_t n) : exps_(n, 0) {
  if (n > static_cast<std::size_t>(kMaxVertices)) {
    throw std::invalid_argument("at most 64 variables are supported");
  }
}

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  if (exps_.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw std::invalid_argument("at most 64 variables are supported");
  }
  for (Exponent e : exps_) checked(e);
}

Monomial Monomial::variable(std::size_t n, int i) {
  if (i < 1 || static_cast<std::size_t>(i) > n) {
    throw std::out_of_range("variable x" + std::to_string(i) + " outside the ring");
  }
  Monomial m(n);
  m.exps_[static_cast<std::size_t>(i - 1)] = 1;
  return m;
}

Monomial Monomial::squarefree(std::size_t n, Face f) {
  Monomial m(n);
  for (int i : f.vertices()) {
    if (static_cast<std::size_t>(i) > n) {
      throw std::out_of_range("variable x" + std::to_string(i) + " outside the ring");
    }
    m.exps_[static_cast<std::size_t>(i - 1)] = 1;
  }
  return m;
}

std::uint64_t Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

Face Monomial::support() const {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) bits |= std::uint64_t{1} << i;
  }
  return Face::from_bits(bits);
}

Face Monomial::support_two() const {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] >= 2) bits |= std::uint64_t{1} << i;
  }
  return Face::from_bits(bits);
}

bool divides(const Monomial& a, const Monomial& b) {
  check_same_ring(a, b);
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i] > eb[i]) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  return zip(a, b, [](auto x, auto y) { return std::max(x, y); });
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  return zip(a, b, [](auto x, auto y) { return std::min(x, y); });
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  return zip(a, b, [](auto x, auto y) { return checked(std::uint64_t{x} + y); });
}

Monomial colon_mono(const Monomial& a, const Monomial& g) {
  return zip(a, g, [](auto x, auto y) { return x > y ? x - y : Monomial::Exponent{0}; });
}

Monomial power(const Monomial& m, std::uint32_t q) {
  std::vector<Monomial::Exponent> out(m.exponents().begin(), m.exponents().end());
  for (auto& e : out) e = checked(std::uint64_t{e} * q);
  return Monomial(std::move(out));
}

bool monomial_order_less(const Monomial& a, const Monomial& b) {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da < db;
  return b < a;
}

std::string to_string(const Monomial& m) {
  std::string s;
  const auto e = m.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i + 1);
    if (e[i] > 1) s += '^' + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

Monomial parse_monomial(std::string_view text, std::size_t n) {
  const std::string_view body = trim(text);
  if (body.empty()) throw ParseError("empty monomial", 0);
  std::vector<std::uint64_t> exps(n, 0);
  if (body == "1") return Monomial(n);
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const auto star = body.find('*', pos);
    const std::string_view factor =
        trim(body.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos));
    if (factor.size() < 2 || factor[0] != 'x') {
      throw ParseError("bad factor '" + std::string(factor) + "' in monomial '" +
                       std::string(body) + "'", 0);
    }
    const auto caret = factor.find('^');
    const auto index = parse_uint(trim(factor.substr(1, caret == std::string_view::npos
                                                             ? std::string_view::npos
                                                             : caret - 1)),
                                  "variable index");
    const std::uint64_t e =
        caret == std::string_view::npos ? 1 : parse_uint(trim(factor.substr(caret + 1)), "exponent");
    if (index < 1 || index > n) {
      throw ParseError("variable x" + std::to_string(index) + " outside [1, " + std::to_string(n) +
                       "]", 0);
    }
    exps[index - 1] += e;
    if (exps[index - 1] > Monomial::kMaxExponent) {
      throw ParseError("exponent exceeds 2^16 in '" + std::string(body) + "'", 0);
    }
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return Monomial(std::vector<Monomial::Exponent>(exps.begin(), exps.end()));
}

}  // namespace srcartier

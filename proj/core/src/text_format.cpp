#include "srcartier/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

#include "srcartier/errors.hpp"

namespace srcartier {
namespace {

struct Line {
  int number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Non-blank lines with comments stripped.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.push_back({number, line});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

int parse_int(std::string_view s, int line, std::string_view what) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || p != end) {
    throw ParseError("bad " + std::string(what) + " '" + std::string(s) + "'", line);
  }
  return v;
}

// Consumes a leading `n = <int>` header if present.
std::optional<int> take_header(std::vector<Line>& lines) {
  if (lines.empty()) return std::nullopt;
  const std::string_view first = lines.front().text;
  if (first.empty() || first[0] != 'n') return std::nullopt;
  const auto eq = first.find('=');
  if (eq == std::string_view::npos || !trim(first.substr(1, eq - 1)).empty()) {
    throw ParseError("expected 'n = <int>'", lines.front().number);
  }
  const int n = parse_int(trim(first.substr(eq + 1)), lines.front().number, "vertex count");
  lines.erase(lines.begin());
  return n;
}

int resolve_n(std::optional<int> header, std::optional<int> override_n, int max_seen) {
  const int n = override_n.value_or(header.value_or(max_seen));
  if (n < 1 || n > kMaxVertices) {
    throw ParseError("vertex count " + std::to_string(n) + " outside [1, 64]", 0);
  }
  if (max_seen > n) {
    throw ParseError("index " + std::to_string(max_seen) + " exceeds n = " + std::to_string(n), 0);
  }
  return n;
}

}  // namespace

SimplicialComplex parse_facet_text(std::string_view text, std::optional<int> n_override) {
  auto lines = content_lines(text);
  const auto header = take_header(lines);
  std::vector<Face> facets;
  int max_seen = 0;
  for (const auto& line : lines) {
    if (line.text == "-") {
      facets.push_back(Face{});
      continue;
    }
    std::vector<int> vertices;
    std::istringstream tokens{std::string(line.text)};
    std::string tok;
    while (tokens >> tok) {
      const int v = parse_int(tok, line.number, "vertex");
      if (v < 1 || v > kMaxVertices) {
        throw ParseError("vertex " + tok + " outside [1, 64]", line.number);
      }
      vertices.push_back(v);
      max_seen = std::max(max_seen, v);
    }
    facets.push_back(Face::from_vertices(vertices));
  }
  return SimplicialComplex::from_faces(facets, resolve_n(header, n_override, max_seen));
}

MonomialIdeal parse_ideal_text(std::string_view text, std::optional<int> n_override) {
  auto lines = content_lines(text);
  const auto header = take_header(lines);
  std::vector<Monomial> wide;
  int max_seen = 0;
  for (const auto& line : lines) {
    try {
      wide.push_back(parse_monomial(line.text, kMaxVertices));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line.number);
    }
    max_seen = std::max(max_seen, wide.back().support().max_vertex());
  }
  const int n = resolve_n(header, n_override, max_seen);
  std::vector<Monomial> gens;
  for (const auto& m : wide) {
    const auto e = m.exponents();
    gens.emplace_back(std::vector<Monomial::Exponent>(e.begin(), e.begin() + n));
  }
  return MonomialIdeal::minimize(static_cast<std::size_t>(n), std::move(gens));
}

std::string format_facet_text(const SimplicialComplex& complex) {
  std::string out = "n = " + std::to_string(complex.ground_size()) + "\n";
  for (Face g : complex.facets()) {
    if (g.empty()) {
      out += "-\n";
      continue;
    }
    bool first = true;
    for (int v : g.vertices()) {
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::string format_ideal_text(const MonomialIdeal& ideal) {
  std::string out = "n = " + std::to_string(ideal.num_vars()) + "\n";
  for (const auto& g : ideal.gens()) out += to_string(g) + "\n";
  return out;
}

}  // namespace srcartier

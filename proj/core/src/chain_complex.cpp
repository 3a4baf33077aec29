#include "srcartier/chain_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace srcartier {
namespace {

// Row-reduces m in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(FieldMatrix& m, const PrimeField& f) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m.at(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
    }
    const auto inv = f.inv(m.at(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) = f.mul(m.at(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const auto factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

bool FieldMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Element e) { return e == 0; });
}

std::size_t rank(FieldMatrix m, const PrimeField& field) { return row_reduce(m, field).size(); }

std::vector<std::vector<FieldMatrix::Element>> kernel_basis(FieldMatrix m, const PrimeField& field) {
  const auto pivots = row_reduce(m, field);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<FieldMatrix::Element>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldMatrix::Element> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field.neg(m.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b, const PrimeField& field) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
  FieldMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.at(i, j) = field.add(out.at(i, j), field.mul(x, b.at(k, j)));
      }
    }
  }
  return out;
}

std::size_t HomologyProfile::dim(int degree) const {
  if (degree < min_degree || degree > max_degree()) return 0;
  return dims[static_cast<std::size_t>(degree - min_degree)];
}

bool HomologyProfile::is_zero() const {
  return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; });
}

bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
  const int lo = std::min(a.min_degree, b.min_degree);
  const int hi = std::max(a.max_degree(), b.max_degree());
  for (int d = lo; d <= hi; ++d) {
    if (a.dim(d) != b.dim(d)) return false;
  }
  return true;
}

ChainComplex::ChainComplex(const SimplicialComplex& complex,
                           const std::function<bool(Face)>& keep, const PrimeField& field)
    : field_(field) {
  const int top = complex.dimension();
  basis_.resize(static_cast<std::size_t>(top + 2));
  for (Face f : complex.faces()) {
    if (keep(f)) basis_[static_cast<std::size_t>(f.size())].push_back(f);
  }
  // faces() is graded-lex sorted, so each degree is already sorted.
  boundaries_.resize(basis_.size());
  boundaries_[0] = FieldMatrix(0, basis_[0].size());
  for (std::size_t k = 1; k < basis_.size(); ++k) {
    const auto& rows = basis_[k - 1];
    const auto& cols = basis_[k];
    FieldMatrix d(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto verts = cols[c].vertices();
      for (std::size_t j = 0; j < verts.size(); ++j) {
        const Face tau = cols[c].without(verts[j]);
        auto it = std::lower_bound(rows.begin(), rows.end(), tau, GradedLexLess{});
        if (it == rows.end() || *it != tau) continue;
        d.at(static_cast<std::size_t>(it - rows.begin()), c) = j % 2 == 0 ? 1 : field_.neg(1);
      }
    }
    boundaries_[k] = std::move(d);
  }
}

std::span<const Face> ChainComplex::basis(int degree) const {
  if (degree < kMinDegree || degree > max_degree()) return {};
  return basis_[static_cast<std::size_t>(degree + 1)];
}

const FieldMatrix& ChainComplex::boundary(int degree) const {
  static const FieldMatrix kEmpty;
  if (degree < kMinDegree || degree > max_degree()) return kEmpty;
  return boundaries_[static_cast<std::size_t>(degree + 1)];
}

bool ChainComplex::boundary_squares_to_zero() const {
  for (int k = kMinDegree + 1; k + 1 <= max_degree(); ++k) {
    const auto& lower = boundary(k);
    const auto& upper = boundary(k + 1);
    if (lower.rows() == 0 || upper.cols() == 0) continue;
    if (!multiply(lower, upper, field_).is_zero()) return false;
  }
  return true;
}

HomologyProfile ChainComplex::homology() const {
  // rank ∂_k for k = -1 .. top + 1 (∂_{-1} and ∂_{top+1} are zero maps).
  std::vector<std::size_t> ranks(basis_.size() + 1, 0);
  for (std::size_t k = 1; k < basis_.size(); ++k) ranks[k] = rank(boundaries_[k], field_);
  HomologyProfile out;
  out.min_degree = basis_.empty() || basis_[0].empty() ? 0 : kMinDegree;
  for (int degree = out.min_degree; degree <= max_degree(); ++degree) {
    const auto k = static_cast<std::size_t>(degree + 1);
    out.dims.push_back(basis_[k].size() - ranks[k] - ranks[k + 1]);
  }
  return out;
}

}  // namespace srcartier

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "srcartier/prime_field.hpp"
#include "srcartier/simplicial_complex.hpp"

namespace srcartier {

/// Dense row-major matrix over a prime field.
class FieldMatrix {
 public:
  using Element = PrimeField::Element;

  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Element at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Element& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

std::size_t rank(FieldMatrix m, const PrimeField& field);
/// A basis of { x : m x = 0 }, each vector of length m.cols().
std::vector<std::vector<FieldMatrix::Element>> kernel_basis(FieldMatrix m, const PrimeField& field);
FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b, const PrimeField& field);

/// Dimensions of homology groups in degrees min_degree, min_degree + 1, ...
struct HomologyProfile {
  int min_degree = 0;
  std::vector<std::size_t> dims;

  /// 0 outside the stored range.
  std::size_t dim(int degree) const;
  int max_degree() const { return min_degree + static_cast<int>(dims.size()) - 1; }
  bool is_zero() const;
  /// Same dimension in every degree; the stored ranges may differ.
  friend bool operator==(const HomologyProfile& a, const HomologyProfile& b);
};

/// The simplicial chain complex spanned by a subset of the faces of Δ, with
/// the boundary of the quotient: a face that is not kept is treated as 0.
///
/// Keeping every face (∅ included) gives the augmented complex computing
/// reduced homology. Keeping the faces of Δ outside a subcomplex Γ gives
/// the relative complex C(Δ) / C(Γ). Faces are oriented by ascending
/// vertex order; the boundary of a face drops its vertex at position j with
/// sign (-1)^j. Basis faces are sorted in graded-lex order.
class ChainComplex {
 public:
  /// `keep` must select a set closed under taking cofaces within Δ, which
  /// makes the quotient boundary square to zero.
  ChainComplex(const SimplicialComplex& complex, const std::function<bool(Face)>& keep,
               const PrimeField& field);

  const PrimeField& field() const { return field_; }
  /// Degree of ∅; top degree is dim Δ.
  static constexpr int kMinDegree = -1;
  int max_degree() const { return kMinDegree + static_cast<int>(basis_.size()) - 1; }
  std::span<const Face> basis(int degree) const;
  /// ∂_k : C_k -> C_{k-1}, rows indexed by basis(k - 1), columns by basis(k).
  const FieldMatrix& boundary(int degree) const;
  bool boundary_squares_to_zero() const;

  /// Starts at degree -1 when ∅ is a basis element, else at 0.
  HomologyProfile homology() const;

 private:
  PrimeField field_;
  std::vector<std::vector<Face>> basis_;   // index = degree + 1
  std::vector<FieldMatrix> boundaries_;    // index = degree + 1
};

}  // namespace srcartier

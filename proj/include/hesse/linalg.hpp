#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hesse/field.hpp"

namespace hesse {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of Scalars from a single field.
class Matrix {
 public:
  Matrix(const Field& field, std::size_t rows, std::size_t cols);
  /// Throws ShapeError on ragged or empty input and FieldMismatchError on mixed fields.
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix identity(const Field& field, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  Vector apply(std::span<const Scalar> v) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

Scalar dot(std::span<const Scalar> u, std::span<const Scalar> v);

/// Row echelon form. Over Q it is computed fraction-free (Bareiss) on the
/// integer matrix obtained by clearing each row's denominators; over GF(p) by
/// plain Gaussian elimination.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
  bool odd_permutation = false;
};

Echelon row_echelon(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Throws ShapeError for non-square input.
Scalar determinant(const Matrix& m);
/// Basis of {x : m x = 0}. Over Q each vector is a primitive integer vector.
std::vector<Vector> kernel_basis(const Matrix& m);

}  // namespace hesse

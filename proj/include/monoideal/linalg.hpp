#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "monoideal/field.hpp"

namespace monoideal {

/// Dense row-major matrix of field elements.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Copy with one extra column appended.
  Matrix with_column(std::span<const Scalar> column) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Exact rank. Over QQ rows are cleared to integers and reduced with
/// fraction-free (Bareiss) elimination; over ZZ/p plain elimination.
std::size_t rank(const Matrix& m, const FieldSpec& field);

/// v lies in the column span of a  <=>  rank(a) == rank([a | v]).
bool in_column_span(const Matrix& a, std::span<const Scalar> v, const FieldSpec& field);

}  // namespace monoideal
